#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace addramsey {

/// A CNF formula over variables 1..num_vars; literals are signed indices.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// "p cnf <vars> <clauses>" followed by one 0-terminated clause per line.
    std::string to_dimacs() const;

    /// Accepts comment lines ("c ...") and clauses spanning several lines.
    static Cnf parse_dimacs(std::string_view text);
};

enum class SatStatus { Satisfiable, Unsatisfiable, Unknown };

const char* to_string(SatStatus status) noexcept;

struct SatResult {
    SatStatus status = SatStatus::Unknown;
    std::vector<bool> model; // index v holds the value of variable v; [0] unused
    std::uint64_t nodes = 0;
};

/// DPLL with two watched literals and chronological backtracking. No clause
/// learning: meant for the small instances the exporters produce.
SatResult solve_cnf(const Cnf& cnf, std::uint64_t budget);

/// True iff every clause has a literal made true by `model`.
bool satisfies(const Cnf& cnf, const std::vector<bool>& model);

} // namespace addramsey
