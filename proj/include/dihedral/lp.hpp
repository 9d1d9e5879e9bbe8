#pragma once

#include <vector>

#include "dihedral/field.hpp"

namespace dihedral {

using Row = std::vector<FieldElement>;

// maximize objective . x  subject to  le_rows x <= le_rhs, eq_rows x = eq_rhs, x >= 0.
struct LinearProgram {
    int nvars = 0;
    std::vector<Row> le_rows;
    Row le_rhs;
    std::vector<Row> eq_rows;
    Row eq_rhs;
    Row objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* lp_status_name(LpStatus s);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    FieldElement value;
    Row x;  // optimal vertex
    Row y;  // duals of the le rows, y >= 0
    Row z;  // duals of the eq rows
    long pivots = 0;
};

// Exact two-phase tableau simplex with Bland's rule.
LpSolution lp_solve(const Field& f, const LinearProgram& lp, long pivot_budget = 1000000);

// Exact certificate checks, independent of the tableau.
bool check_primal(const LinearProgram& lp, const Row& x);
// y >= 0, A^T y + E^T z >= c componentwise and b.y + e.z = value.
bool check_dual(const LinearProgram& lp, const LpSolution& sol);

FieldElement row_dot(const Row& a, const Row& b);

}  // namespace dihedral
