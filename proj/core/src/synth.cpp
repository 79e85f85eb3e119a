#include "tailmine/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "tailmine/errors.hpp"
#include "tailmine/ngram.hpp"

namespace tailmine {

namespace {

// Thin wrapper keeping every draw an explicit, platform-stable algorithm on
// top of mt19937_64 (std distributions differ across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }
    std::size_t uniform_size(std::size_t lo, std::size_t hi) {  // inclusive
        return lo + static_cast<std::size_t>(below(hi - lo + 1));
    }
    double normal() {  // Box-Muller, no spare caching
        double u1 = 1.0 - uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::mt19937_64 gen_;
};

std::string padded(const char* prefix, std::size_t i, int width) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
    return buf;
}

std::string ngram_fingerprint(const std::vector<std::string>& activities) {
    Case c;
    c.case_id = "t";
    TimestampMs ts = 0;
    for (const auto& a : activities) c.events.push_back(Event{a, ts++, "", "", false, {}});
    std::ostringstream os;
    for (const auto& [gram, count] : trace_to_ngrams(c, NGramConfig{})) {
        for (const auto& tok : gram) os << tok << '\x1f';
        os << '=' << count << '\x1e';
    }
    return os.str();
}

} // namespace

void SynthSpec::validate() const {
    if (variant_templates < 1) throw ConfigError("synth: need at least one template");
    if (total_cases < variant_templates)
        throw ConfigError("synth: total cases must be >= number of templates");
    if (zipf_exponent <= 0.0) throw ConfigError("synth: zipf exponent must be > 0");
    if (min_template_length < 1 || max_template_length < min_template_length)
        throw ConfigError("synth: bad template length range");
    if (resource_pool < 1) throw ConfigError("synth: resource pool must be >= 1");
    if (contact_fraction < 0.0 || contact_fraction > 1.0)
        throw ConfigError("synth: contact fraction must be in [0,1]");
    if (duration_log_sigma < 0.0) throw ConfigError("synth: duration sigma must be >= 0");
}

std::vector<double> zipf_masses(std::size_t n, double exponent) {
    std::vector<double> m(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = 1.0 / std::pow(static_cast<double>(i + 1), exponent);
        norm += m[i];
    }
    for (double& v : m) v /= norm;
    return m;
}

SynthResult generate_synthetic_log(const SynthSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);

    // Activity alphabet: a share of labels is flagged as customer contact.
    const std::size_t alphabet = std::max<std::size_t>(8, spec.max_template_length + 4);
    const std::size_t n_contact =
        std::min(alphabet, static_cast<std::size_t>(
                               std::llround(spec.contact_fraction * static_cast<double>(alphabet))));
    std::vector<std::string> labels;
    std::vector<double> label_log_mean;
    labels.reserve(alphabet);
    for (std::size_t i = 0; i < alphabet; ++i) {
        labels.push_back(i < n_contact ? padded("contact_", i, 2) : padded("task_", i, 2));
        label_log_mean.push_back(spec.duration_log_mean + 0.5 * rng.normal());
    }

    // Distinct templates: distinct sequences and distinct default n-gram
    // multisets, so variants stay separable in the clustering feature space.
    SynthResult out;
    std::set<std::string> fingerprints;
    for (std::size_t v = 0; v < spec.variant_templates; ++v) {
        std::vector<std::string> seq;
        bool ok = false;
        for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
            std::size_t len = rng.uniform_size(spec.min_template_length, spec.max_template_length);
            seq.clear();
            for (std::size_t i = 0; i < len; ++i)
                seq.push_back(labels[rng.below(alphabet)]);
            ok = fingerprints.insert(ngram_fingerprint(seq)).second;
        }
        if (!ok)
            throw ConfigError("synth: could not generate distinct templates; "
                              "widen the length range or lower the template count");
        out.templates.push_back(std::move(seq));
    }

    // Zipf case counts via largest remainder, then a floor of one per template.
    const std::size_t n_cases = spec.total_cases;
    auto masses = zipf_masses(spec.variant_templates, spec.zipf_exponent);
    std::vector<std::size_t> counts(spec.variant_templates);
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t v = 0; v < counts.size(); ++v) {
        double exact = masses[v] * static_cast<double>(n_cases);
        counts[v] = static_cast<std::size_t>(exact);
        assigned += counts[v];
        remainders.emplace_back(exact - std::floor(exact), v);
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (std::size_t i = 0; assigned < n_cases; ++i, ++assigned)
        ++counts[remainders[i % remainders.size()].second];
    for (std::size_t v = 0; v < counts.size(); ++v) {
        while (counts[v] == 0) {
            auto it = std::max_element(counts.begin(), counts.end());
            if (*it <= 1) throw ConfigError("synth: cannot give every template a case");
            --*it;
            ++counts[v];
        }
    }
    out.template_case_counts = counts;

    // Deterministic shuffle of the per-case template ids.
    out.template_of_case.reserve(n_cases);
    for (std::size_t v = 0; v < counts.size(); ++v)
        out.template_of_case.insert(out.template_of_case.end(), counts[v],
                                    static_cast<std::uint32_t>(v));
    for (std::size_t i = out.template_of_case.size(); i > 1; --i)
        std::swap(out.template_of_case[i - 1], out.template_of_case[rng.below(i)]);

    // Instantiate cases: sequential timestamps with log-normal activity durations.
    const TimestampMs base = 1577836800000;  // 2020-01-01T00:00:00Z
    out.log.source_meta = {"synthetic", "seed=" + std::to_string(spec.seed)};
    out.log.cases.reserve(n_cases);
    for (std::size_t ci = 0; ci < n_cases; ++ci) {
        const auto& tmpl = out.templates[out.template_of_case[ci]];
        Case c;
        c.case_id = padded("case_", ci, 6);
        TimestampMs ts = base + static_cast<TimestampMs>(ci) * 3600000;
        for (const auto& activity : tmpl) {
            Event e;
            e.activity = activity;
            e.timestamp = ts;
            e.resource = padded("res_", rng.below(spec.resource_pool), 2);
            e.customer_contact = activity.rfind("contact_", 0) == 0;
            c.events.push_back(std::move(e));
            std::size_t label_idx = static_cast<std::size_t>(
                std::find(labels.begin(), labels.end(), activity) - labels.begin());
            double secs = std::exp(label_log_mean[label_idx] +
                                   spec.duration_log_sigma * rng.normal());
            ts += static_cast<TimestampMs>(std::llround(secs * 1000.0));
        }
        out.log.cases.push_back(std::move(c));
    }
    out.log.rebuild_index();
    return out;
}

} // namespace tailmine
