#pragma once

#include <string>
#include <vector>

namespace exalg {

struct VerificationStep {
    std::string description;
    std::string expression;
    std::string outcome;
    bool ok = false;
};

/// Result of one scripted verification. `pass` holds iff every step matched
/// its expectation. Serialization is deterministic apart from elapsed_ms.
struct VerificationReport {
    std::string check_id;
    bool pass = true;
    std::vector<VerificationStep> steps;
    double elapsed_ms = 0.0;
    long long s_pairs = 0;
    long long reductions = 0;

    void add_step(std::string description, std::string expression, bool ok,
                  std::string outcome);
};

std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);
std::string render_json(const std::vector<VerificationReport>& rs);

}  // namespace exalg
