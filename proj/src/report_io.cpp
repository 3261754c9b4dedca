#include "whg/report_io.hpp"

#include <json.hpp>

namespace whg {

namespace {

nlohmann::ordered_json report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["check"] = report.check;
    j["rank"] = report.rank;
    j["level"] = report.level;
    j["passed"] = report.passed();
    j["max_deviation"] = report.max_deviation();
    nlohmann::ordered_json details = nlohmann::ordered_json::array();
    for (const auto& r : report.details) {
        nlohmann::ordered_json d;
        d["relation"] = r.relation;
        d["passed"] = r.passed;
        if (r.witness) {
            d["witness"] = *r.witness;
        } else {
            d["witness"] = nullptr;
        }
        details.push_back(std::move(d));
    }
    j["details"] = std::move(details);
    return j;
}

}  // namespace

std::string reports_text(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& report : reports) {
        out += "check: " + report.check + " rank=" + std::to_string(report.rank) +
               " level=" + std::to_string(report.level) +
               (report.passed() ? " PASS" : " FAIL") +
               " max_deviation=" + report.max_deviation() + "\n";
        for (const auto& r : report.details) {
            out += std::string("  [") + (r.passed ? "PASS" : "FAIL") + "] " + r.relation;
            if (r.witness) out += "  witness: " + *r.witness;
            out += "\n";
        }
        for (const auto& note : report.notes) {
            out += "  note: " + note + "\n";
        }
    }
    return out;
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& report : reports) array.push_back(report_json(report));
    return array.dump(2) + "\n";
}

std::string coherent_entries_text(const std::vector<coherent::StateEntry>& entries) {
    std::string out;
    for (const auto& entry : entries) {
        out += entry.index.str() + " coefficient=" + entry.coefficient.str() +
               " eta_power=" + std::to_string(entry.eta_power) + " z=";
        out += fock::MultiIndex{entry.z_monomial}.str();
        out += "\n";
    }
    return out;
}

std::string coherent_entries_json(const std::vector<coherent::StateEntry>& entries) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& entry : entries) {
        nlohmann::ordered_json j;
        j["index"] = entry.index.n;
        j["coefficient"] = entry.coefficient.str();
        j["eta_power"] = entry.eta_power;
        j["z_monomial"] = entry.z_monomial;
        array.push_back(std::move(j));
    }
    return array.dump(2) + "\n";
}

}  // namespace whg
