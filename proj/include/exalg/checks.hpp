#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exalg/monomial.hpp"
#include "exalg/report.hpp"

namespace exalg {

struct CheckOptions {
    MonomialOrder order = MonomialOrder::grevlex();
    long long bound = 3;     // effective-zero search bound
    uint64_t seed = 0;       // randomized property cross-checks
    std::optional<std::string> data_dir;  // cycle scenario files
};

class UnknownCheck : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Check ids accepted by run_verification, in `all` execution order.
const std::vector<std::string>& known_checks();

/// Runs one scripted verification; throws UnknownCheck for unknown ids.
VerificationReport run_verification(const std::string& check_id, const CheckOptions& options = {});

/// Every known check, in order.
std::vector<VerificationReport> run_all(const CheckOptions& options = {});

/// Resolves the directory holding the cycle-group scenario files.
std::string resolve_data_dir(const CheckOptions& options);

}  // namespace exalg
