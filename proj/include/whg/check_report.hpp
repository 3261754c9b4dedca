#pragma once

#include <optional>
#include <string>
#include <vector>

namespace whg {

struct RelationResult {
    std::string relation;
    bool passed = true;
    // Exact text of the worst violating entry; only set when failed.
    std::optional<std::string> witness;
};

// Outcome of one verification suite at fixed (rank, level). Relations are
// kept in declaration order so repeated runs emit byte-identical reports.
struct CheckReport {
    std::string check;
    int rank = 0;
    int level = 0;
    std::vector<RelationResult> details;
    std::vector<std::string> notes;

    bool passed() const;
    // "0" when every relation passed, else the first failing witness.
    std::string max_deviation() const;

    void require(std::string relation, bool ok, std::string witness = {});
};

}  // namespace whg
