#include <random>
#include <set>

#include "dihedral/cones.hpp"
#include "doctest.h"

using namespace dihedral;

namespace {

Field q_field() { return make_hyperbolic_field(Rational(4)); }  // rational arithmetic
FieldElement q(const Field& f, long num, long den = 1) { return FieldElement::from_rational(f, Rational(num, den)); }

std::set<std::string> keys(const InequalitySystem& s) {
    std::set<std::string> out;
    for (const auto& qi : s.inequalities()) out.insert(InequalitySystem::row_key(qi.row));
    return out;
}

long binom2(long m) { return m * (m - 1) / 2; }

}  // namespace

TEST_CASE("exact simplex") {
    auto f = q_field();
    LinearProgram lp;
    lp.nvars = 2;
    lp.le_rows = {{q(f, 1), q(f, 2)}, {q(f, 3), q(f, 1)}};
    lp.le_rhs = {q(f, 4), q(f, 6)};
    lp.objective = {q(f, 1), q(f, 1)};
    auto sol = lp_solve(f, lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == q(f, 14, 5));
    CHECK(sol.x[0] == q(f, 8, 5));
    CHECK(sol.x[1] == q(f, 6, 5));
    CHECK(check_primal(lp, sol.x));
    CHECK(check_dual(lp, sol));

    // Negative right-hand sides and an equality row.
    LinearProgram lp2;
    lp2.nvars = 3;
    lp2.le_rows = {{q(f, -1), q(f, -1), q(f, 0)}};
    lp2.le_rhs = {q(f, -1)};
    lp2.eq_rows = {{q(f, 1), q(f, 1), q(f, 1)}};
    lp2.eq_rhs = {q(f, 3)};
    lp2.objective = {q(f, -1), q(f, -2), q(f, 1)};
    auto s2 = lp_solve(f, lp2);
    REQUIRE(s2.status == LpStatus::Optimal);
    CHECK(s2.value == q(f, 1));  // x = (1, 0, 2)
    CHECK(check_primal(lp2, s2.x));
    CHECK(check_dual(lp2, s2));

    LinearProgram infeasible;
    infeasible.nvars = 1;
    infeasible.le_rows = {{q(f, 1)}};
    infeasible.le_rhs = {q(f, -1)};
    infeasible.objective = {q(f, 0)};
    CHECK(lp_solve(f, infeasible).status == LpStatus::Infeasible);

    LinearProgram unbounded;
    unbounded.nvars = 2;
    unbounded.le_rows = {{q(f, 1), q(f, -1)}};
    unbounded.le_rhs = {q(f, 1)};
    unbounded.objective = {q(f, 1), q(f, 0)};
    CHECK(lp_solve(f, unbounded).status == LpStatus::Unbounded);

    // Random small LPs: certificates always check out.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        LinearProgram r;
        r.nvars = 3;
        for (int i = 0; i < 4; ++i) {
            r.le_rows.push_back({q(f, d(rng)), q(f, d(rng)), q(f, d(rng))});
            r.le_rhs.push_back(q(f, d(rng) + 3));
        }
        r.le_rows.push_back({q(f, 1), q(f, 1), q(f, 1)});
        r.le_rhs.push_back(q(f, 10));
        r.objective = {q(f, d(rng)), q(f, d(rng)), q(f, d(rng))};
        auto s = lp_solve(f, r);
        if (s.status != LpStatus::Optimal) continue;
        CHECK(check_primal(r, s.x));
        CHECK(check_dual(r, s));
    }

    // Irrational data: maximize x with x <= theta/2 over Q(2cos(pi/10)).
    auto f5 = make_cyclotomic_field(5);
    LinearProgram ir;
    ir.nvars = 1;
    ir.le_rows = {{q(f5, 2)}};
    ir.le_rhs = {FieldElement::theta(f5)};
    ir.objective = {q(f5, 1)};
    auto si = lp_solve(f5, ir);
    REQUIRE(si.status == LpStatus::Optimal);
    CHECK(si.value * Rational(2) == FieldElement::theta(f5));
    CHECK(check_dual(ir, si));
}

TEST_CASE("WTI generation") {
    for (int n = 2; n <= 7; ++n)
        for (int m = 2; m <= 5; ++m) {
            WtiReport rep;
            auto wti = gen_wti(n, m, &rep);
            CHECK(rep.forms_agree);
            CHECK(rep.expected_count == 2 * n * binom2(m));
            // Tuples with w in {1, w_o} depend on one slot only.
            CHECK(static_cast<long>(wti.size()) == 2 * ((n - 2) * binom2(m) + m));
            ConePoint zero(m, {0, 0});
            CHECK(is_member(wti, zero).member);
            CHECK(symmetric_in_slots(wti, 0, m));
        }
    // Equilateral configurations: equal regular weights.
    for (int n = 2; n <= 6; ++n) {
        auto wti = gen_wti(n, 3);
        CHECK(is_member(wti, ConePoint(3, {1, 1})).member);
        CHECK(is_member(wti, ConePoint(3, {Rational(5, 3), 2})).member);
    }
    CHECK_THROWS_AS(gen_wti(3, 1), Error);
    auto wti = gen_wti(3, 3);
    try {
        is_member(wti, ConePoint{{1, 1}, {-1, 0}, {0, 0}});
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DomainError);
        CHECK(std::string(e.what()).find("slot 2") != std::string::npos);
    }
}

TEST_CASE("n = 2 reduces to two A1 triangle systems") {
    for (int m = 3; m <= 5; ++m) {
        auto wti = gen_wti(2, m);
        auto a1 = gen_a1_product(m);
        CHECK(keys(wti) == keys(a1));
        auto rep = cone_equal(wti, a1);
        CHECK(rep.equal);
    }
    auto wti = gen_wti(2, 3);
    auto bad = is_member(wti, ConePoint{{3, 0}, {1, 0}, {1, 0}});
    CHECK_FALSE(bad.member);
    CHECK(is_member(wti, ConePoint{{2, 1}, {1, 1}, {1, 0}}).member);
    // Brute-force comparison on a grid of points.
    auto a1 = gen_a1_product(3);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                ConePoint p{{x, z}, {y, 3 - z}, {z, x}};
                bool tri = x <= y + z && y <= x + z && z <= x + y && z <= (3 - z) + x && (3 - z) <= z + x && x <= z + 3 - z;
                CHECK(is_member(wti, p).member == tri);
                CHECK(is_member(a1, p).member == tri);
            }
}

TEST_CASE("STI contains WTI and cuts out the same cone") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 3; ++m) {
            auto wti = gen_wti(n, m);
            auto sti = gen_sti(n, m);
            for (const auto& qi : wti.inequalities()) CHECK(sti.contains(qi.row));
            auto rep = cone_equal(wti, sti);
            CHECK_MESSAGE(rep.equal, rep.first_failure);
        }
    // m = 2: the cone is {lambda_2 = lambda_1^*}.
    auto sti = gen_sti(3, 2);
    CHECK(is_member(sti, ConePoint{{2, 1}, {1, 2}}).member);
    CHECK_FALSE(is_member(sti, ConePoint{{2, 1}, {2, 1}}).member);
    CHECK_FALSE(is_member(sti, ConePoint{{2, 1}, {1, 3}}).member);
    auto sti4 = gen_sti(4, 2);
    CHECK(is_member(sti4, ConePoint{{2, 1}, {2, 1}}).member);
    CHECK_FALSE(is_member(sti4, ConePoint{{2, 1}, {1, 2}}).member);
}

TEST_CASE("irredundancy and certificates") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 3; m <= 4; ++m) {
            auto wti = gen_wti(n, m);
            auto rep = redundancy_audit(wti);
            CHECK(rep.all_facets);
            for (const auto& c : rep.rows) {
                REQUIRE(c.status == RowStatus::Facet);
                // The witness satisfies every other inequality and violates this one.
                for (long r = 0; r < static_cast<long>(wti.size()); ++r) {
                    int s = sign_of(row_dot(wti.inequalities()[r].row, c.witness));
                    if (r == c.index) CHECK(s > 0);
                    else CHECK(s <= 0);
                }
            }
        }
    auto wti = gen_wti(4, 3);
    for (long r = 0; r < static_cast<long>(wti.size()); ++r) {
        const auto& row = wti.inequalities()[r].row;
        auto res = lp_optimize(wti, row, r);
        CHECK(verify_cone_certificate(wti, row, r, res));
    }
    // A duplicated inequality is redundant.
    InequalitySystem dup(3, 3, false);
    auto src = gen_wti(3, 3);
    for (const auto& qi : src.inequalities()) dup.add(qi.covectors, qi.tag);
    dup.add(src.inequalities()[0].covectors, src.inequalities()[0].tag);
    auto rep = redundancy_audit(dup);
    CHECK_FALSE(rep.all_facets);
    CHECK(rep.rows[0].status == RowStatus::Redundant);
    CHECK(rep.rows.back().status == RowStatus::Redundant);
    CHECK(rep.rows[1].status == RowStatus::Facet);
    // Maximizing the zero functional gives zero.
    auto z = lp_optimize(wti, Row(wti.nvars(), FieldElement::from_int(wti.field(), 0)));
    CHECK(z.value.is_zero());
}

TEST_CASE("Theta") {
    for (int n = 2; n <= 7; ++n) {
        auto ctx = dihedral_context(n);
        ConePoint p{{1, 0}, {2, 3}, {Rational(1, 2), 5}};
        CHECK(theta(*ctx, theta(*ctx, p)) == p);
        if (n % 2 == 0) CHECK(theta(*ctx, p) == p);
        CHECK(theta(*ctx, p).back() == p.back());
    }
    auto ctx3 = dihedral_context(3);
    auto t = theta(*ctx3, ConePoint{{1, 0}, {0, 0}, {0, 0}});
    CHECK(t[0] == DominantWeight{0, 1});
    // Theta on systems is compatible with Theta on points.
    auto km = gen_km(3, KmAlgebra::At, 2);
    auto tk = theta_system(km);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 6);
    for (int s = 0; s < 40; ++s) {
        ConePoint p;
        for (int k = 0; k < 3; ++k) p.push_back({d(rng), d(rng)});
        CHECK(is_member(km, p).member == is_member(tk, theta(*ctx3, p)).member);
    }
}

TEST_CASE("K_m systems") {
    for (int n = 2; n <= 6; ++n) {
        // m = 1: (lambda; lambda) is a member.
        auto k1 = gen_km(n, KmAlgebra::At, 1);
        CHECK(is_member(k1, ConePoint{{2, 1}, {2, 1}}).member);
        for (int m = 2; m <= 3; ++m) {
            auto wti = gen_wti(n, m + 1);
            auto bk = theta_system(gen_bk(n, m));
            CHECK(keys(bk) == keys(wti));
            auto at = gen_km(n, KmAlgebra::At, m);
            auto gr = gen_km(n, KmAlgebra::GrAt, m);
            CHECK(symmetric_in_slots(at, 0, m));
            if (n >= 3) CHECK(keys(at) != keys(gr));
            auto rep = cone_equal(at, gr);
            CHECK_MESSAGE(rep.equal, rep.first_failure);
            auto rep2 = cone_equal(theta_system(gen_km(n, KmAlgebra::B, m)), wti);
            CHECK_MESSAGE(rep2.equal, rep2.first_failure);
            // The highest weight lambda_1 + ... + lambda_m is always a member.
            ConePoint p{{1, 2}, {3, 0}};
            if (m == 3) p.push_back({1, 1});
            Rational a = 0, b = 0;
            for (const auto& w : p) {
                a += w.a;
                b += w.b;
            }
            p.push_back({a, b});
            CHECK(is_member(at, p).member);
        }
    }
}

TEST_CASE("star invariance") {
    for (int n = 3; n <= 5; ++n) {
        auto wti = gen_wti(n, 3);
        InequalitySystem starred(n, 3);
        for (const auto& qi : wti.inequalities()) {
            auto cov = qi.covectors;
            for (auto& c : cov) c = wti.context().plane.star(c);
            starred.add(cov, qi.tag);
        }
        CHECK(cone_equal(wti, starred).equal);
    }
}

TEST_CASE("coherence sampling") {
    for (int n = 2; n <= 4; ++n) {
        auto rep = coherence_check(n, 2, 2, 12, 11 + n);
        CHECK_MESSAGE(rep.pass, rep.first_failure);
        CHECK(rep.members > 0);
        CHECK(rep.non_members > 0);
        CHECK(rep.compositions > 0);
    }
    auto rep = coherence_check(3, 3, 2, 6, 5);
    CHECK_MESSAGE(rep.pass, rep.first_failure);
}

TEST_CASE("constructive irredundancy witness") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 3; m <= 4; ++m) {
            auto wti = gen_wti(n, m);
            for (long r = 0; r < static_cast<long>(wti.size()); ++r) {
                auto w = wti_constructive_witness(wti, r);
                INFO("n=" << n << " m=" << m << " " << tag_string(wti.inequalities()[r].tag));
                CHECK(w.valid);
                CHECK(w.polygon_vertices == 2 * n);
            }
        }
    CHECK_THROWS_AS(wti_constructive_witness(gen_wti(3, 2), 0), Error);
}
