#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tailmine/event_log.hpp"

namespace tailmine {

// Seeded generator for variant-structured logs. Case counts follow a Zipf law
// over variant templates (deterministic largest-remainder allocation), so the
// generated logs show the head-heavy frequency profile real logs do.
struct SynthSpec {
    std::size_t variant_templates = 20;  // V, distinct activity sequences
    double zipf_exponent = 1.0;
    std::size_t min_template_length = 3;
    std::size_t max_template_length = 12;
    std::size_t resource_pool = 10;
    double contact_fraction = 0.2;  // fraction of activity labels that are contacts
    // Per-event durations are log-normal; each activity label gets its own
    // location parameter drawn once around duration_log_mean.
    double duration_log_mean = 4.0;  // log of seconds
    double duration_log_sigma = 0.5;
    std::size_t total_cases = 500;  // N
    std::uint64_t seed = 42;

    void validate() const;
};

struct SynthResult {
    EventLog log;
    std::vector<std::vector<std::string>> templates;    // activity sequences
    std::vector<std::uint32_t> template_of_case;        // per case, case order
    std::vector<std::size_t> template_case_counts;      // per template
};

// Fully deterministic for a fixed spec: same spec, same bytes. Templates are
// guaranteed distinct both as sequences and as default-config n-gram multisets,
// so clustering at k = V can recover them exactly.
SynthResult generate_synthetic_log(const SynthSpec& spec);

// Zipf probability masses (1-based ranks, normalized).
std::vector<double> zipf_masses(std::size_t n, double exponent);

} // namespace tailmine
