#include "dihedral/lp.hpp"

namespace dihedral {

const char* lp_status_name(LpStatus s) {
    switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

FieldElement row_dot(const Row& a, const Row& b) {
    FieldElement s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

namespace {

struct Tableau {
    int rows = 0, cols = 0;
    std::vector<Row> t;  // rows x (cols + 1); last entry is the right-hand side
    Row obj;             // reduced costs z_j - c_j, last entry is the objective value
    std::vector<int> basis;
    std::vector<bool> enter_ok;
    long pivots = 0;
    long budget = 0;

    void pivot(int r, int c) {
        if (++pivots > budget) fail(ErrorKind::BudgetExceeded, "simplex pivot budget exhausted");
        FieldElement inv = t[r][c].inverse();
        for (auto& v : t[r])
            if (!v.is_zero()) v *= inv;
        auto eliminate = [&](Row& row) {
            if (row[c].is_zero()) return;
            FieldElement factor = row[c];
            for (int j = 0; j <= cols; ++j)
                if (!t[r][j].is_zero()) row[j] -= factor * t[r][j];
        };
        for (int i = 0; i < rows; ++i)
            if (i != r) eliminate(t[i]);
        eliminate(obj);
        basis[r] = c;
    }

    // Returns false when unbounded.
    bool run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (enter_ok[j] && sign_of(obj[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            FieldElement best;
            for (int i = 0; i < rows; ++i) {
                if (sign_of(t[i][enter]) <= 0) continue;
                FieldElement ratio = t[i][cols] / t[i][enter];
                if (leave < 0) {
                    leave = i;
                    best = ratio;
                    continue;
                }
                int s = compare(ratio, best);
                if (s < 0 || (s == 0 && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void set_objective(const Row& cost) {
        obj.assign(cols + 1, FieldElement());
        for (int j = 0; j < cols; ++j) obj[j] = -cost[j];
        for (int i = 0; i < rows; ++i) {
            const auto& cb = cost[basis[i]];
            if (cb.is_zero()) continue;
            for (int j = 0; j <= cols; ++j)
                if (!t[i][j].is_zero()) obj[j] += cb * t[i][j];
        }
    }
};

}  // namespace

LpSolution lp_solve(const Field& f, const LinearProgram& lp, long pivot_budget) {
    const int nv = lp.nvars;
    const int nle = static_cast<int>(lp.le_rows.size());
    const int neq = static_cast<int>(lp.eq_rows.size());
    const int nr = nle + neq;
    if (static_cast<int>(lp.objective.size()) != nv) fail(ErrorKind::InvalidParameter, "objective has the wrong length");
    const FieldElement zero = FieldElement::from_int(f, 0), one = FieldElement::from_int(f, 1);

    // Columns: structural, one slack per le row, one artificial per row that needs it.
    std::vector<int> flip(nr, 1), ident(nr, -1);
    int cols = nv + nle;
    for (int i = 0; i < nr; ++i) {
        const auto& rhs = i < nle ? lp.le_rhs[i] : lp.eq_rhs[i - nle];
        if (sign_of(rhs) < 0) flip[i] = -1;
        if (i < nle && flip[i] > 0) ident[i] = nv + i;
        else ident[i] = cols++;
    }

    Tableau tab;
    tab.rows = nr;
    tab.cols = cols;
    tab.budget = pivot_budget;
    tab.t.assign(nr, Row(cols + 1, zero));
    tab.basis.assign(nr, -1);
    for (int i = 0; i < nr; ++i) {
        const auto& src = i < nle ? lp.le_rows[i] : lp.eq_rows[i - nle];
        if (static_cast<int>(src.size()) != nv) fail(ErrorKind::InvalidParameter, "constraint row has the wrong length");
        const auto& rhs = i < nle ? lp.le_rhs[i] : lp.eq_rhs[i - nle];
        for (int j = 0; j < nv; ++j) tab.t[i][j] = flip[i] > 0 ? src[j] : -src[j];
        if (i < nle) tab.t[i][nv + i] = flip[i] > 0 ? one : -one;
        tab.t[i][ident[i]] = one;
        tab.t[i][cols] = flip[i] > 0 ? rhs : -rhs;
        tab.basis[i] = ident[i];
    }
    std::vector<bool> artificial(cols, false);
    for (int i = 0; i < nr; ++i)
        if (ident[i] >= nv + nle) artificial[ident[i]] = true;

    LpSolution sol;
    // Phase 1: maximize -sum of artificials.
    Row cost1(cols, zero);
    bool any_art = false;
    for (int j = 0; j < cols; ++j)
        if (artificial[j]) {
            cost1[j] = -one;
            any_art = true;
        }
    tab.enter_ok.assign(cols, true);
    if (any_art) {
        tab.set_objective(cost1);
        tab.run();
        sol.pivots = tab.pivots;
        if (sign_of(tab.obj[cols]) < 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        for (int i = 0; i < nr; ++i) {
            if (!artificial[tab.basis[i]]) continue;
            for (int j = 0; j < cols; ++j)
                if (!artificial[j] && !tab.t[i][j].is_zero()) {
                    tab.pivot(i, j);
                    break;
                }
        }
    }

    // Phase 2.
    Row cost2(cols, zero);
    for (int j = 0; j < nv; ++j) cost2[j] = lp.objective[j];
    for (int j = 0; j < cols; ++j) tab.enter_ok[j] = !artificial[j];
    tab.set_objective(cost2);
    bool bounded = tab.run();
    sol.pivots = tab.pivots;
    if (!bounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.value = tab.obj[cols];
    sol.x.assign(nv, zero);
    for (int i = 0; i < nr; ++i)
        if (tab.basis[i] < nv) sol.x[tab.basis[i]] = tab.t[i][cols];
    // Reduced cost of the identity column of row i is the flipped dual of that row.
    sol.y.assign(nle, zero);
    sol.z.assign(neq, zero);
    for (int i = 0; i < nr; ++i) {
        FieldElement d = flip[i] > 0 ? tab.obj[ident[i]] : -tab.obj[ident[i]];
        if (i < nle) sol.y[i] = d;
        else sol.z[i - nle] = d;
    }
    return sol;
}

bool check_primal(const LinearProgram& lp, const Row& x) {
    if (static_cast<int>(x.size()) != lp.nvars) return false;
    for (const auto& v : x)
        if (sign_of(v) < 0) return false;
    for (std::size_t i = 0; i < lp.le_rows.size(); ++i)
        if (compare(row_dot(lp.le_rows[i], x), lp.le_rhs[i]) > 0) return false;
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
        if (row_dot(lp.eq_rows[i], x) != lp.eq_rhs[i]) return false;
    return true;
}

bool check_dual(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.y.size() != lp.le_rows.size() || sol.z.size() != lp.eq_rows.size()) return false;
    for (const auto& v : sol.y)
        if (sign_of(v) < 0) return false;
    for (int j = 0; j < lp.nvars; ++j) {
        FieldElement s;
        for (std::size_t i = 0; i < lp.le_rows.size(); ++i)
            if (!sol.y[i].is_zero()) s += sol.y[i] * lp.le_rows[i][j];
        for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
            if (!sol.z[i].is_zero()) s += sol.z[i] * lp.eq_rows[i][j];
        if (compare(s, lp.objective[j]) < 0) return false;
    }
    FieldElement bound = row_dot(sol.y, lp.le_rhs) + row_dot(sol.z, lp.eq_rhs);
    return bound == sol.value;
}

}  // namespace dihedral
