#include "whg/check_report.hpp"

namespace whg {

bool CheckReport::passed() const {
    for (const auto& r : details) {
        if (!r.passed) return false;
    }
    return true;
}

std::string CheckReport::max_deviation() const {
    for (const auto& r : details) {
        if (!r.passed) return r.witness.value_or("nonzero");
    }
    return "0";
}

void CheckReport::require(std::string relation, bool ok, std::string witness) {
    RelationResult result;
    result.relation = std::move(relation);
    result.passed = ok;
    if (!ok && !witness.empty()) result.witness = std::move(witness);
    details.push_back(std::move(result));
}

}  // namespace whg
