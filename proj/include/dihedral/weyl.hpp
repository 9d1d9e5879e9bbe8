#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/field.hpp"

namespace dihedral {

// Canonical form of an element of I_2(n): its length and the generator s_side
// with l(w s_side) < l(w). side = 0 for the identity and for w_o.
struct WeylElement {
    int len = 0;
    int side = 0;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

std::string to_string(const WeylElement& w);

class DihedralGroup {
public:
    // Finite group I_2(n), n >= 2.
    explicit DihedralGroup(int n);
    // Infinite dihedral group; basis enumeration stops at length cap.
    static DihedralGroup infinite(int cap);

    bool finite() const { return n_ > 0; }
    int n() const { return n_; }
    int cap() const { return cap_; }
    // Largest length with a basis index: n (finite) or cap.
    int max_len() const { return finite() ? n_ : cap_; }

    WeylElement identity() const { return {0, 0}; }
    WeylElement longest() const;
    WeylElement generator(int i) const { return make(1, i); }
    WeylElement make(int len, int side) const;
    bool valid(const WeylElement& w) const;

    int size() const;
    int index(const WeylElement& w) const;
    WeylElement at(int idx) const;
    const std::vector<WeylElement>& elements() const { return elements_; }

    WeylElement compose(const WeylElement& u, const WeylElement& v) const;
    WeylElement inverse(const WeylElement& w) const;
    WeylElement pd(const WeylElement& w) const;  // w_o w

    int length(const WeylElement& w) const { return w.len; }
    // Letters of the reduced word, left to right (one choice for w_o).
    std::vector<int> word(const WeylElement& w) const;
    int first_letter(const WeylElement& w) const;
    int last_letter(const WeylElement& w) const;
    // Shortest length in the coset w<s_l>, via the apartment model.
    int relative_length(const WeylElement& w, int l) const;
    bool in_W(const WeylElement& w, int i) const;  // l(w s_{3-i}) = l(w) + 1
    // Index of the apartment vertex w(zeta_l): vertices sit at angles j*pi/n.
    long vertex_index(const WeylElement& w, int l) const;

    // Rotation/reflection coordinates: w = rho^rot s_1^refl with rho = s_1 s_2.
    std::pair<long, int> to_pair(const WeylElement& w) const;
    WeylElement from_pair(long rot, int refl) const;

private:
    DihedralGroup() = default;
    int n_ = 0;
    int cap_ = 0;
    std::vector<WeylElement> elements_;
    std::vector<int> finite_lookup_;  // (rot mod n, refl) -> index
};

// 2x2 matrices and vectors over the ground field.
using Vec2 = std::array<FieldElement, 2>;
using Mat2 = std::array<FieldElement, 4>;  // row major

Vec2 mat_apply(const Mat2& m, const Vec2& v);
Mat2 mat_mul(const Mat2& a, const Mat2& b);
FieldElement dot(const Vec2& a, const Vec2& b);
Vec2 vec_add(const Vec2& a, const Vec2& b);
Vec2 vec_sub(const Vec2& a, const Vec2& b);
Vec2 vec_scale(const Vec2& a, const FieldElement& s);
bool vec_equal(const Vec2& a, const Vec2& b);

// Cartesian action of the finite group on the plane, chamber rays at angles 0 and pi/n.
class PlaneAction {
public:
    PlaneAction(const Field& f, const DihedralGroup& g);

    const Field& field() const { return field_; }
    const DihedralGroup& group() const { return group_; }
    const Vec2& zeta(int l) const { return zeta_[l - 1]; }
    const Mat2& matrix(const WeylElement& w) const { return mats_[group_.index(w)]; }
    Vec2 act(const WeylElement& w, const Vec2& v) const { return mat_apply(matrix(w), v); }
    Vec2 star(const Vec2& v) const;  // -w_o v
    // Unit vector at angle j*pi/(2n).
    Vec2 unit(long j) const;
    // Vertex vector of the apartment vertex with index j (angle j*pi/n).
    Vec2 vertex(long j) const { return unit(2 * j); }
    // Ray coordinates (a, b) with v = a zeta_1 + b zeta_2.
    std::pair<FieldElement, FieldElement> ray_coords(const Vec2& v) const;
    Vec2 from_ray(const FieldElement& a, const FieldElement& b) const;

private:
    Field field_;
    DihedralGroup group_;
    std::array<Vec2, 2> zeta_;
    std::vector<Mat2> mats_;
    Mat2 wo_;
    FieldElement sin1_inv_;
};

// Root/weight data of the symmetric realization: s_i(alpha_j) = alpha_j + [2]_t alpha_i.
// Root vectors are coordinate pairs in the basis (alpha_1, alpha_2); weight vectors in (omega_1, omega_2).
class RootWeightFrame {
public:
    RootWeightFrame(const Field& f, const DihedralGroup& g);

    Vec2 alpha(int i) const;
    Vec2 omega(int i) const;
    // Columns are iota(alpha_1), iota(alpha_2) in the omega basis.
    const Mat2& iota() const { return iota_; }
    Vec2 reflect_root(int i, const Vec2& x) const;
    Vec2 reflect_weight(int i, const Vec2& x) const;
    Vec2 act_weight(const WeylElement& w, const Vec2& x) const;

    // [w]_i by the recursion [s_j w]_i = delta_ij alpha_i + s_j([w]_i).
    Vec2 bracket(const WeylElement& w, int i) const;
    FieldElement phi_side(const WeylElement& w, int i) const;
    FieldElement phi_total(const WeylElement& w) const;
    // Closed forms in terms of q-binomials.
    FieldElement phi_side_closed(const WeylElement& w, int i) const;
    FieldElement phi_total_closed(const WeylElement& w) const;

    const Field& field() const { return field_; }
    const DihedralGroup& group() const { return group_; }

private:
    Field field_;
    DihedralGroup group_;
    FieldElement two_t_;
    Mat2 iota_;
};

// [m choose 2]_q computed without q when possible: sum_{j=1}^{m-1} [j]_t.
FieldElement q_binomial_2(const Field& f, long m);

}  // namespace dihedral
