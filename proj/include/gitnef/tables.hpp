#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gitnef {

/* Regression tables: frozen expected values for the headline computations,
 * embedded with the code so a build can always audit itself. reproduce()
 * recomputes a table from scratch and diffs it against the frozen copy. */

struct TableDiff {
    std::string path;
    std::string expected;
    std::string computed;
};

struct ReproduceResult {
    std::string id;
    bool match = false;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json computed;
    std::vector<TableDiff> diffs;
};

/// Known table ids, in reproduction order.
std::vector<std::string> table_ids();

/// Recomputes the table behind id and compares. Unknown ids throw
/// std::invalid_argument.
ReproduceResult reproduce(const std::string& id);

}  // namespace gitnef
