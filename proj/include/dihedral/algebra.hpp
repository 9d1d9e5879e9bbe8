#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihedral/field.hpp"
#include "dihedral/weyl.hpp"

namespace dihedral {

// Dense coefficient vector over the basis indices of a DihedralGroup.
using ClassVector = std::vector<FieldElement>;

struct Term {
    WeylElement w;
    FieldElement c;
};

// The universal dihedral algebra A_t with Schubert basis sigma_w.
class UniversalAlgebra {
public:
    // Hyperbolic fields truncate at degree cap; products past the cap raise cap-exceeded.
    explicit UniversalAlgebra(const Field& f, int cap = 16);

    const Field& field() const { return field_; }
    const DihedralGroup& group() const { return group_; }
    int size() const { return group_.size(); }
    // n_t, or nullopt for infinity.
    std::optional<int> top() const { return field_->n_t(); }

    ClassVector zero() const;
    ClassVector unit() const { return basis(group_.identity()); }
    ClassVector basis(const WeylElement& w) const;
    const FieldElement& coeff(const ClassVector& a, const WeylElement& w) const { return a[group_.index(w)]; }

    // Four-rule product of two basis elements, nonzero terms only.
    const std::vector<Term>& mul_basis(const WeylElement& u, const WeylElement& v) const;
    ClassVector mul(const ClassVector& a, const ClassVector& b) const;
    ClassVector product_chain(const std::vector<WeylElement>& ws) const;
    FieldElement structure_const(const std::vector<WeylElement>& ws, const WeylElement& y) const;

    // Action of the generator s_i.
    ClassVector weyl_action(int i, const ClassVector& a) const;

    // Basis X^(i) of the subalgebra B^(i): the identity and the side-i elements below the top.
    bool in_B(const WeylElement& w, int i) const;
    std::vector<WeylElement> B_basis(int i) const;

    const TNumberTable& numbers() const { return table_; }

private:
    std::vector<Term> compute_mul(const WeylElement& u, const WeylElement& v) const;

    Field field_;
    DihedralGroup group_;
    TNumberTable table_;
    std::vector<std::vector<Term>> mul_cache_;
    std::vector<FieldElement> power_sums_;  // t^k + t^-k
};

bool vector_equal(const ClassVector& a, const ClassVector& b);
ClassVector vector_add(const ClassVector& a, const ClassVector& b);
ClassVector vector_scale(const ClassVector& a, const FieldElement& s);

// Cohomology of the rank-2 Kac-Moody flag variety with Cartan matrix
// [[2, -a12], [-a21, 2]], computed from the Chevalley formula over Z.
class KacMoodyRing {
public:
    KacMoodyRing(int a12, int a21, int cap = 8);

    int a12() const { return a12_; }
    int a21() const { return a21_; }
    const DihedralGroup& group() const { return group_; }
    // The ground field of the matching A_t: t + 1/t = sqrt(a12 a21).
    const Field& field() const { return field_; }

    using Vector = std::vector<Rational>;
    Vector basis(const WeylElement& w) const;
    // Multiplication by [X_{s_i}].
    Vector chevalley_mul(const Vector& a, int i) const;
    Vector mul_basis(const WeylElement& u, const WeylElement& v) const;
    Vector mul(const Vector& a, const Vector& b) const;
    // Reflection s_i on H^2, in the basis ([X_{s_1}], [X_{s_2}]).
    Vector weyl_action_h2(int i, const Vector& a) const;

    // Integer root action s_i(alpha_j) = alpha_j + a_ij alpha_i, on (alpha_1, alpha_2) coordinates.
    std::pair<Integer, Integer> reflect_root(int i, std::pair<Integer, Integer> x) const;
    std::pair<Integer, Integer> act_root(const WeylElement& w, std::pair<Integer, Integer> x) const;

private:
    int a12_, a21_;
    Field field_;
    DihedralGroup group_;
};

struct IsoReport {
    bool pass = true;
    long checks = 0;
    std::string counterexample;
};

// Default scalars with c1 / c2 = sqrt(a12 / a21).
std::pair<FieldElement, FieldElement> default_iso_scalars(const KacMoodyRing& km);
// Checks that [X_w] -> c_i^ceil(k/2) c_{3-i}^floor(k/2) sigma_w is multiplicative and W-equivariant.
IsoReport iso_check(const KacMoodyRing& km, const FieldElement& c1, const FieldElement& c2);

}  // namespace dihedral
