#include "exalg/report.hpp"

#include <json.hpp>

#include <sstream>

namespace exalg {

namespace {

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : r.steps) {
        steps.push_back({{"description", s.description},
                         {"expression", s.expression},
                         {"outcome", s.outcome},
                         {"ok", s.ok}});
    }
    return nlohmann::ordered_json{{"check_id", r.check_id},
                                  {"status", r.pass ? "pass" : "fail"},
                                  {"steps", std::move(steps)},
                                  {"elapsed_ms", r.elapsed_ms},
                                  {"engine_stats",
                                   {{"s_pairs", r.s_pairs}, {"reductions", r.reductions}}}};
}

}  // namespace

void VerificationReport::add_step(std::string description, std::string expression, bool ok,
                                  std::string outcome) {
    steps.push_back(VerificationStep{std::move(description), std::move(expression),
                                     std::move(outcome), ok});
    if (!ok) pass = false;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "check " << r.check_id << ": " << (r.pass ? "PASS" : "FAIL");
    out << "  (" << r.elapsed_ms << " ms, s_pairs=" << r.s_pairs
        << ", reductions=" << r.reductions << ")\n";
    for (const auto& s : r.steps) {
        out << "  [" << (s.ok ? "ok" : "FAIL") << "] " << s.description;
        if (!s.expression.empty()) out << ": " << s.expression;
        if (!s.outcome.empty()) out << " -> " << s.outcome;
        out << "\n";
    }
    return out.str();
}

std::string render_json(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

}  // namespace exalg
