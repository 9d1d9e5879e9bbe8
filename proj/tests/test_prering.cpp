#include <algorithm>
#include <set>

#include "dihedral/prering.hpp"
#include "doctest.h"

using namespace dihedral;

namespace {

const PreRingCoeff Z = PreRingCoeff::zero(), O = PreRingCoeff::one(), I = PreRingCoeff::infinity();

// Coefficient law for m Grassmannian generators with sum r_i = (n-1)(m-1).
PreRingCoeff point_coefficient_oracle(int n, std::vector<int> rs) {
    std::vector<int> rest;
    for (int r : rs)
        if (r != n - 1) rest.push_back(r);
    if (rest.empty()) return O;  // only possible when the point class is the unit (n = 1)
    if (rest.size() == 2 && rest[0] + rest[1] == n - 1) return O;
    if (rest.size() == 1) return O;  // r = 0 with units
    return I;
}

}  // namespace

TEST_CASE("pre-ring coefficient tables") {
    CHECK(O * I == I);
    CHECK(Z * I == Z);
    CHECK(I * Z == Z);
    CHECK(O + O == Z);
    CHECK(O + I == I);
    CHECK(I * I == I);
    CHECK_THROWS_AS(I + I, Error);
    try {
        (void)(I + I);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UndefinedSum);
    }
    CHECK(saturating_add(I, I) == I);
    std::vector<PreRingCoeff> all{Z, O, I};
    for (const auto& a : all)
        for (const auto& b : all) {
            CHECK(a * b == b * a);
            if (!(a.is_inf() && b.is_inf())) CHECK(a + b == b + a);
            for (const auto& c : all) CHECK((a * b) * c == a * (b * c));
        }
    auto three = PreRingCoeff::finite(2, 3);
    CHECK((three + three).value() == 1);
}

TEST_CASE("Grassmannian products") {
    for (int n = 2; n <= 8; ++n) {
        GrassmannPreRing g(n);
        for (int r = 0; r < n; ++r) {
            CHECK(g.mul_basis(n - 1, r) == g.basis(r));
            auto pd = g.mul_basis(r, n - 1 - r);
            CHECK(pd[0] == O);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(g.mul_basis(a, b) == g.mul_basis(b, a));
        // Associativity in the fundamental-class degree.
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = 0; r2 < n; ++r2)
                for (int r3 = 0; r3 < n; ++r3) {
                    int r4 = 3 * (n - 1) - r1 - r2 - r3;
                    if (r4 < 0 || r4 > n - 1) continue;
                    auto lhs = g.mul(g.mul(g.mul(g.basis(r1), g.basis(r2)), g.basis(r3)), g.basis(r4));
                    auto rhs = g.mul(g.mul(g.basis(r1), g.mul(g.basis(r2), g.basis(r3))), g.basis(r4));
                    CHECK(lhs == rhs);
                }
    }
    GrassmannPreRing g5(5);
    auto p = g5.mul_basis(3, 3);
    CHECK(p[2] == I);
}

TEST_CASE("m-fold Grassmannian coefficient law") {
    for (int n = 2; n <= 7; ++n) {
        GrassmannPreRing g(n);
        for (int m = 2; m <= 4; ++m) {
            std::vector<int> rs(m, 0);
            auto rec = [&](auto&& self, int slot, int sum) -> void {
                if (slot == m) {
                    if (sum != (n - 1) * (m - 1)) return;
                    auto p = g.product(rs);
                    CHECK(p[0] == point_coefficient_oracle(n, rs));
                    for (int k = 1; k < n; ++k) CHECK(p[k].is_zero());
                    return;
                }
                for (int r = 0; r < n; ++r) {
                    rs[slot] = r;
                    self(self, slot + 1, sum + r);
                }
            };
            rec(rec, 0, 0);
        }
    }
}

TEST_CASE("flag products") {
    FlagPreRing f4(4);
    auto p = f4.mul_basis(f4.cell(3, 1), f4.cell(2, 2));
    CHECK(p[f4.group().index(f4.cell(1, 1))] == I);
    CHECK(p[f4.group().index(f4.cell(1, 2))] == I);
    for (int n = 2; n <= 8; ++n) {
        FlagPreRing f(n);
        const auto& g = f.group();
        int point = g.index(g.identity());
        for (const auto& u : g.elements()) {
            CHECK(f.pd(f.pd(u)) == u);
            auto d = f.mul_basis(u, f.pd(u));
            CHECK(d == f.basis(g.identity()));
            CHECK(f.mul_basis(u, g.longest()) == f.basis(u));
            for (const auto& v : g.elements()) {
                auto uv = f.mul_basis(u, v);
                CHECK(uv == f.mul_basis(v, u));
                if (u.len > 0 && v.len > 0 && u.len < n && v.len < n) {
                    if (u.side == v.side && u.len + v.len <= n) CHECK(uv == f.zero());
                    if (u.side != v.side && u.len + v.len < n) CHECK(uv == f.zero());
                    if (u.side != v.side && u.len + v.len == n) CHECK(uv[point] == O);
                }
                for (const auto& w : g.elements()) {
                    auto lhs = f.product({u, v, w});
                    auto rhs = f.product({v, w, u});
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("pull-back agrees with the Grassmannian product on supports") {
    for (int n = 2; n <= 8; ++n) {
        FlagPreRing f(n);
        GrassmannPreRing gr(n);
        for (int l = 1; l <= 2; ++l) {
            CHECK(f.pullback(gr.basis(n - 1), l) == f.basis(f.group().longest()));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    auto down = gr.mul_basis(a, b);
                    auto lhs = f.pullback(down, l);
                    auto rhs = f.mul(f.pullback(gr.basis(a), l), f.pullback(gr.basis(b), l));
                    for (std::size_t k = 0; k < lhs.size(); ++k) {
                        CHECK(lhs[k].is_zero() == rhs[k].is_zero());
                        if (!down[0].is_zero() && a != n - 1 && b != n - 1) continue;
                        CHECK(lhs[k] == rhs[k]);
                    }
                }
        }
    }
}

TEST_CASE("Sigma_{A,m}") {
    for (int n = 2; n <= 6; ++n) {
        FlagPreRing f(n);
        const auto& g = f.group();
        auto two = enumerate_sigma_Am(n, 2);
        std::set<std::vector<WeylElement>> got(two.begin(), two.end());
        std::set<std::vector<WeylElement>> expect;
        for (const auto& u : g.elements()) expect.insert({u, g.pd(u)});
        CHECK(got == expect);
        for (int m = 3; m <= 4; ++m) {
            if (n > 5 && m == 4) continue;
            auto tuples = enumerate_sigma_Am(n, m);
            std::set<std::vector<WeylElement>> got_m(tuples.begin(), tuples.end());
            // Brute force over W^m.
            std::set<std::vector<WeylElement>> brute;
            std::vector<WeylElement> cur(m);
            int point = g.index(g.identity());
            auto rec = [&](auto&& self, int slot) -> void {
                if (slot == m) {
                    auto p = f.product(cur);
                    bool ok = !p[point].is_zero();
                    for (int k = 0; k < g.size(); ++k)
                        if (k != point && !p[k].is_zero()) ok = false;
                    if (ok) brute.insert(cur);
                    return;
                }
                for (const auto& w : g.elements()) {
                    cur[slot] = w;
                    self(self, slot + 1);
                }
            };
            rec(rec, 0);
            CHECK(got_m == brute);
            for (const auto& t : tuples)
                for (int k = 1; k <= 2; ++k) {
                    int s = 0;
                    for (const auto& u : t) s += g.relative_length(u, k);
                    CHECK(s >= (m - 1) * (n - 1));
                }
        }
    }
    CHECK_THROWS_AS(enumerate_sigma_Am(6, 6, 10), Error);
}
