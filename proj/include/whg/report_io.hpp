#pragma once

#include "whg/check_report.hpp"
#include "whg/coherent.hpp"

#include <string>
#include <vector>

namespace whg {

// Deterministic renderings used by the CLI and the language bindings.
// JSON schema per report: {"check","rank","level","passed","max_deviation",
// "details":[{"relation","passed","witness"}]}.
std::string reports_text(const std::vector<CheckReport>& reports);
std::string reports_json(const std::vector<CheckReport>& reports);

// Coherent-state entry emission:
// {"index":[...],"coefficient":"...","eta_power":p,"z_monomial":[...]}.
std::string coherent_entries_text(const std::vector<coherent::StateEntry>& entries);
std::string coherent_entries_json(const std::vector<coherent::StateEntry>& entries);

}  // namespace whg
