#pragma once

#include "esw/einstein_solvers.hpp"
#include "esw/ricci_flow.hpp"

namespace esw {

enum class TableId { W2, W2Sc, W3, W3Sc, W4, W4_2, W5 };
TableId parse_table_id(const std::string& s);  // throws std::invalid_argument
const char* to_string(TableId id);

/// One diffed cell of a reproduced table. `tolerance` 0 means an exact cell:
/// a rational expectation matched by exact arithmetic (plus a characteristic-
/// polynomial certificate for eigenvalues) or a string expectation matched
/// verbatim. Nonzero tolerances are 1e-9 for evaluated closed forms and 2e-3
/// for reference values carried to four digits.
struct ReportCell {
    std::string row;
    std::string quantity;
    std::string expected;
    std::string computed;
    double abs_err = 0;
    double tolerance = 0;
    bool pass = false;
};

struct TableReport {
    TableId table_id = TableId::W2;
    std::vector<ReportCell> cells;
    bool all_pass() const;
    int failures() const;
};

TableReport reproduce_table(TableId id);

/// Deterministic plain-text rendering (stable across runs for fixed inputs).
std::string render_table_report(const TableReport& rep);

/// "W11", "W2:1,1,1", "W5:l=5", "flag_r2:4,1", "full_flag_sun:5", or
/// "@path.json" for a descriptor file. Throws std::invalid_argument with an
/// explanatory message for unknown names.
SpaceDescriptor resolve_space(const std::string& spec);

/// Einstein metrics for a resolved space: closed forms when the catalog
/// family admits them (method "auto"), the multistart solver otherwise or
/// when method == "numeric".
std::vector<EinsteinSolution> solve_space(const std::string& spec, const std::string& method);

}  // namespace esw
