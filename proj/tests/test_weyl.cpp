#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "dihedral/weyl.hpp"
#include "doctest.h"

using namespace dihedral;

namespace {

constexpr double kPi = std::numbers::pi;
using DMat = std::array<double, 4>;

DMat dmul(const DMat& a, const DMat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Reflection across the line at angle phi.
DMat dreflect(double phi) { return {std::cos(2 * phi), std::sin(2 * phi), std::sin(2 * phi), -std::cos(2 * phi)}; }

DMat dgen(int n, int i) { return dreflect(i == 1 ? 0.0 : kPi / n); }

DMat dword(int n, const std::vector<int>& letters) {
    DMat m{1, 0, 0, 1};
    for (int j : letters) m = dmul(m, dgen(n, j));
    return m;
}

bool dclose(const DMat& a, const DMat& b) {
    for (int k = 0; k < 4; ++k)
        if (std::fabs(a[k] - b[k]) > 1e-9) return false;
    return true;
}

// Brute force: BFS over words in floating matrices, giving each group element its length.
struct BruteGroup {
    std::vector<DMat> mats;
    std::vector<int> len;
    int find(const DMat& m) const {
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (dclose(mats[i], m)) return static_cast<int>(i);
        return -1;
    }
};

BruteGroup brute(int n) {
    BruteGroup g;
    g.mats.push_back({1, 0, 0, 1});
    g.len.push_back(0);
    for (std::size_t head = 0; head < g.mats.size(); ++head)
        for (int i = 1; i <= 2; ++i) {
            DMat m = dmul(g.mats[head], dgen(n, i));
            if (g.find(m) < 0) {
                g.mats.push_back(m);
                g.len.push_back(g.len[head] + 1);
            }
        }
    return g;
}

DMat to_dmat(const Mat2& m) { return {m[0].to_double(), m[1].to_double(), m[2].to_double(), m[3].to_double()}; }

}  // namespace

TEST_CASE("group law against the brute force table") {
    for (int n = 2; n <= 12; ++n) {
        DihedralGroup g(n);
        auto bg = brute(n);
        REQUIRE(static_cast<int>(bg.mats.size()) == 2 * n);
        CHECK(g.size() == 2 * n);
        std::set<int> seen;
        std::vector<int> img(g.size());
        for (int idx = 0; idx < g.size(); ++idx) {
            auto w = g.at(idx);
            CHECK(g.index(w) == idx);
            int b = bg.find(dword(n, g.word(w)));
            REQUIRE(b >= 0);
            CHECK(bg.len[b] == w.len);
            CHECK(static_cast<int>(g.word(w).size()) == w.len);
            seen.insert(b);
            img[idx] = b;
            if (w.len > 0 && w.len < n) {
                // side is the unique generator shortening w on the right.
                int shorter = bg.find(dmul(bg.mats[b], dgen(n, w.side)));
                CHECK(bg.len[shorter] == w.len - 1);
                int other = bg.find(dmul(bg.mats[b], dgen(n, 3 - w.side)));
                CHECK(bg.len[other] == w.len + 1);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>(2 * n));
        for (const auto& u : g.elements())
            for (const auto& v : g.elements()) {
                auto uv = g.compose(u, v);
                CHECK(img[g.index(uv)] == bg.find(dmul(bg.mats[img[g.index(u)]], bg.mats[img[g.index(v)]])));
                CHECK(uv.len <= u.len + v.len);
            }
        for (const auto& w : g.elements()) {
            CHECK(g.compose(w, g.inverse(w)) == g.identity());
            CHECK(g.pd(g.pd(w)) == w);
            CHECK(g.pd(w).len == n - w.len);
        }
    }
}

TEST_CASE("group examples") {
    DihedralGroup g3(3);
    auto s1 = g3.generator(1), s2 = g3.generator(2);
    CHECK(g3.compose(s1, s1) == g3.identity());
    auto s2s1 = g3.make(2, 1), s1s2 = g3.make(2, 2);
    CHECK(g3.compose(s2s1, s1s2) == g3.identity());
    CHECK(g3.compose(s1, s2s1) == g3.longest());
    CHECK(g3.compose(s1, s2) == s1s2);
    CHECK(g3.make(3, 1) == g3.longest());
    CHECK_THROWS_AS(g3.make(4, 1), Error);
}

TEST_CASE("relative lengths against coset enumeration") {
    for (int n = 2; n <= 12; ++n) {
        DihedralGroup g(n);
        for (int l = 1; l <= 2; ++l) {
            std::map<int, int> per_value;
            for (const auto& w : g.elements()) {
                int coset_min = std::min(w.len, g.compose(w, g.generator(l)).len);
                CHECK(g.relative_length(w, l) == coset_min);
                CHECK(g.relative_length(w, l) == g.relative_length(g.compose(w, g.generator(l)), l));
                CHECK(g.vertex_index(w, l) == g.vertex_index(g.compose(w, g.generator(l)), l));
                ++per_value[g.relative_length(w, l)];
            }
            for (int r = 0; r <= n - 1; ++r) CHECK(per_value[r] == 2);
            CHECK(g.relative_length(g.identity(), l) == 0);
            CHECK(g.relative_length(g.longest(), l) == n - 1);
        }
        for (int i = 1; i <= 2; ++i) {
            int count = 0;
            for (const auto& w : g.elements())
                if (g.in_W(w, i)) {
                    ++count;
                    CHECK((w.len == 0 || w.side == i));
                }
            CHECK(count == n);
        }
    }
    DihedralGroup g3(3);
    CHECK(g3.relative_length(g3.generator(2), 1) == 1);
}

TEST_CASE("infinite dihedral group") {
    auto g = DihedralGroup::infinite(10);
    CHECK(!g.finite());
    CHECK(g.size() == 21);
    for (const auto& u : g.elements())
        for (const auto& v : g.elements()) {
            if (u.len + v.len > 10) continue;
            auto uv = g.compose(u, v);
            // Length via cancellation of alternating words.
            auto a = g.word(u), b = g.word(v);
            std::vector<int> wd = a;
            for (int x : b) {
                if (!wd.empty() && wd.back() == x)
                    wd.pop_back();
                else
                    wd.push_back(x);
            }
            CHECK(uv.len == static_cast<int>(wd.size()));
            if (!wd.empty()) CHECK(uv.side == wd.back());
        }
    CHECK_THROWS_AS(g.longest(), Error);
}

TEST_CASE("plane action") {
    for (int n = 2; n <= 12; ++n) {
        auto f = make_cyclotomic_field(n);
        DihedralGroup g(n);
        PlaneAction pa(f, g);
        auto one = FieldElement::from_int(f, 1);
        for (const auto& w : g.elements()) {
            const auto& m = pa.matrix(w);
            CHECK(dclose(to_dmat(m), dword(n, g.word(w))));
            // Orthogonality: M^T M = I.
            Mat2 mt{m[0], m[2], m[1], m[3]};
            auto p = mat_mul(mt, m);
            CHECK(p[0] == one);
            CHECK(p[1].is_zero());
            CHECK(p[2].is_zero());
            CHECK(p[3] == one);
            for (const auto& v : g.elements()) {
                auto prod = mat_mul(pa.matrix(w), pa.matrix(v));
                const auto& direct = pa.matrix(g.compose(w, v));
                for (int k = 0; k < 4; ++k) CHECK(prod[k] == direct[k]);
            }
            // Vertex index agrees with the image of zeta_l.
            for (int l = 1; l <= 2; ++l) CHECK(vec_equal(pa.act(w, pa.zeta(l)), pa.vertex(g.vertex_index(w, l))));
        }
        for (int l = 1; l <= 2; ++l) CHECK(vec_equal(pa.act(g.generator(l), pa.zeta(l)), pa.zeta(l)));
        for (int l = 1; l <= 2; ++l) {
            auto s = pa.star(pa.zeta(l));
            CHECK(vec_equal(pa.star(s), pa.zeta(l)));
            if (n % 2 == 0) CHECK(vec_equal(s, pa.zeta(l)));
        }
        auto v = pa.from_ray(FieldElement::from_int(f, 3), FieldElement::from_rational(f, Rational(2, 5)));
        auto [a, b] = pa.ray_coords(v);
        CHECK(a == FieldElement::from_int(f, 3));
        CHECK(b == FieldElement::from_rational(f, Rational(2, 5)));
        auto sv = pa.ray_coords(pa.star(v));
        CHECK(sign_of(sv.first) >= 0);
        CHECK(sign_of(sv.second) >= 0);
    }
    auto f3 = make_cyclotomic_field(3);
    DihedralGroup g3(3);
    PlaneAction pa3(f3, g3);
    CHECK(vec_equal(pa3.star(pa3.zeta(1)), pa3.zeta(2)));
}

TEST_CASE("bracket and Phi") {
    for (int n = 2; n <= 12; ++n) {
        auto f = make_cyclotomic_field(n);
        DihedralGroup g(n);
        RootWeightFrame rw(f, g);
        for (const auto& w : g.elements()) {
            CHECK(rw.phi_total(w) == rw.phi_total_closed(w));
            auto q = q_number(f, w.len);
            CHECK(rw.phi_total(w) == q * q);
            for (int i = 1; i <= 2; ++i) {
                CHECK(rw.phi_side(w, i) == rw.phi_side_closed(w, i));
                if (w.len < n) CHECK(rw.phi_side(w, i) == rw.phi_side(g.compose(w, g.generator(3 - i)), i));
                // iota([w]_i) = omega_i - w(omega_i)
                auto br = rw.bracket(w, i);
                auto lhs = mat_apply(rw.iota(), br);
                auto rhs = vec_sub(rw.omega(i), rw.act_weight(w, rw.omega(i)));
                CHECK(vec_equal(lhs, rhs));
                // Expansion [w]_i = sum_{m=1}^{k} [m]_t alpha_{i+m-1} for w of side i and length k < n.
                if (w.len > 0 && w.len < n && w.side == i) {
                    Vec2 e{FieldElement(f), FieldElement(f)};
                    for (int m = 1; m <= w.len; ++m) {
                        int idx = ((i - 1) + (m - 1)) % 2;
                        e[idx] += t_number(f, m);
                    }
                    CHECK(vec_equal(br, e));
                }
            }
        }
        CHECK(rw.phi_total(g.identity()).is_zero());
    }
    auto f3 = make_cyclotomic_field(3);
    DihedralGroup g3(3);
    RootWeightFrame rw3(f3, g3);
    std::vector<long> expected{0, 1, 3, 4};
    for (int k = 0; k <= 3; ++k) CHECK(rw3.phi_total(g3.make(k, 1)) == FieldElement::from_int(f3, expected[k]));
}

TEST_CASE("hyperbolic Phi agrees with closed forms") {
    for (auto t : {Rational(2), Rational(9, 4), Rational(1), Rational(3, 7)}) {
        auto f = make_hyperbolic_field(t);
        auto g = DihedralGroup::infinite(12);
        RootWeightFrame rw(f, g);
        for (const auto& w : g.elements()) {
            CHECK(rw.phi_total(w) == rw.phi_total_closed(w));
            for (int i = 1; i <= 2; ++i) CHECK(rw.phi_side(w, i) == rw.phi_side_closed(w, i));
        }
    }
}
