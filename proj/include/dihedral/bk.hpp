#pragma once

#include <string>
#include <vector>

#include "dihedral/algebra.hpp"
#include "dihedral/prering.hpp"

namespace dihedral {

// Full: phi = -Phi on all of W. Side: phi_i = -Phi_i on X^(i).
struct ConcaveWeighting {
    int side = 0;  // 0 for the full weighting, i for phi_i
    std::vector<FieldElement> values;  // indexed by basis index; unused entries are zero
    bool in_domain(const DihedralGroup& g, const WeylElement& w) const { return side == 0 || g.in_W(w, side); }
};

ConcaveWeighting make_weighting(const UniversalAlgebra& alg, int side);

// F(x) = [x+1 choose 2]_q and G(x) = ([x]_q)^2 at integer points.
FieldElement bk_F(const Field& f, long x);
FieldElement bk_G(const Field& f, long x);

struct Triple {
    WeylElement u, v, w;
    friend bool operator==(const Triple&, const Triple&) = default;
};

struct ConcavityReport {
    bool concave = true;
    bool equality_matches = true;
    long checked = 0;
    std::vector<Triple> equality_set;
    std::string first_failure;
};

// Exhaustive check over all nonzero structure constants of the target algebra.
ConcavityReport concavity_audit(const UniversalAlgebra& alg, const ConcaveWeighting& phi);

struct SuperadditivityReport {
    bool pass = true;
    long checked = 0;
    std::string first_failure;
};

// F on 0..n-1 and G on 0..n (cyclotomic), or 0..cap (hyperbolic), with the exact equality sets.
SuperadditivityReport superadditivity_audit(const Field& f, int cap = 16);

// Product in gr: keeps the terms with phi(w) = phi(u) + phi(v).
std::vector<Term> gr_mul(const UniversalAlgebra& alg, const ConcaveWeighting& phi, const WeylElement& u, const WeylElement& v);

// Term c * tau^exponent * sigma_w of the deformed product.
struct DeformedTerm {
    WeylElement w;
    FieldElement c;
    FieldElement exponent;
};

std::vector<DeformedTerm> deform_mul(const UniversalAlgebra& alg, const ConcaveWeighting& phi, const WeylElement& u, const WeylElement& v);
// Exact value of c tau^e; needs an integer exponent (or tau = 1), otherwise unsupported-exponent.
FieldElement evaluate_term(const DeformedTerm& t, const Rational& tau);
double evaluate_term_double(const DeformedTerm& t, double tau);

// tau -> infinity limit of the deformed products, as pre-ring structure constants.
struct LimitTable {
    int side = 0;
    std::vector<WeylElement> basis;  // W or X^(side)
    // entry[a][b][c] = coefficient of basis[c] in basis[a] * basis[b]
    std::vector<std::vector<PreRingVector>> entry;
};

LimitTable limit_prering(const UniversalAlgebra& alg, const ConcaveWeighting& phi);

struct LimitReport {
    bool pass = true;
    long checked = 0;
    std::string first_failure;
};

// Full: sigma_w -> C_{w_o w} in H_*(X). Side i: sigma_w -> C_{n-1-l_{3-i}(w)} in H_*(X_{3-i}).
LimitReport limit_isomorphism_check(const UniversalAlgebra& alg, const LimitTable& table);

}  // namespace dihedral
