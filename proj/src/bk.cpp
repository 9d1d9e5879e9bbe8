#include "dihedral/bk.hpp"

#include <cmath>

namespace dihedral {

namespace {

std::vector<WeylElement> domain_basis(const UniversalAlgebra& alg, int side) {
    return side == 0 ? alg.group().elements() : alg.B_basis(side);
}

const FieldElement& value_at(const UniversalAlgebra& alg, const ConcaveWeighting& phi, const WeylElement& w) {
    return phi.values[alg.group().index(w)];
}

// Equality set predicted by the superadditivity of F and G.
bool predicted_equality(const UniversalAlgebra& alg, int side, const WeylElement& u, const WeylElement& v) {
    if (u.len == 0 || v.len == 0) return true;
    auto top = alg.top();
    if (!top) return false;
    int full = side == 0 ? *top : *top - 1;
    return u.len + v.len == full;
}

std::string triple_string(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
    return "(" + to_string(u) + ", " + to_string(v) + " -> " + to_string(w) + ")";
}

}  // namespace

ConcaveWeighting make_weighting(const UniversalAlgebra& alg, int side) {
    if (side < 0 || side > 2) fail(ErrorKind::InvalidParameter, "weighting side must be 0, 1 or 2");
    RootWeightFrame frame(alg.field(), alg.group());
    ConcaveWeighting phi;
    phi.side = side;
    phi.values.assign(alg.size(), FieldElement::from_int(alg.field(), 0));
    for (const auto& w : domain_basis(alg, side))
        phi.values[alg.group().index(w)] = side == 0 ? -frame.phi_total(w) : -frame.phi_side(w, side);
    return phi;
}

FieldElement bk_F(const Field& f, long x) { return q_binomial_2(f, x + 1); }

FieldElement bk_G(const Field& f, long x) {
    // [x]_q^2 = [1]_q + [3]_q + ... + [2x-1]_q; odd q-numbers live in Q(t + 1/t).
    auto acc = FieldElement::from_int(f, 0);
    for (long j = 0; j < x; ++j) acc += q_number(f, 2 * j + 1);
    return acc;
}

ConcavityReport concavity_audit(const UniversalAlgebra& alg, const ConcaveWeighting& phi) {
    ConcavityReport rep;
    const auto basis = domain_basis(alg, phi.side);
    for (const auto& u : basis)
        for (const auto& v : basis) {
            if (alg.field()->n_t() == std::nullopt && u.len + v.len > alg.group().max_len()) continue;
            for (const auto& term : alg.mul_basis(u, v)) {
                ++rep.checked;
                if (!phi.in_domain(alg.group(), term.w)) {
                    rep.concave = false;
                    if (rep.first_failure.empty()) rep.first_failure = "product leaves the subalgebra " + triple_string(u, v, term.w);
                    continue;
                }
                auto gap = value_at(alg, phi, u) + value_at(alg, phi, v) - value_at(alg, phi, term.w);
                int s = sign_of(gap);
                if (s < 0) {
                    rep.concave = false;
                    if (rep.first_failure.empty()) rep.first_failure = "strict violation " + triple_string(u, v, term.w);
                }
                if (s == 0) rep.equality_set.push_back({u, v, term.w});
                if ((s == 0) != predicted_equality(alg, phi.side, u, v)) {
                    rep.equality_matches = false;
                    if (rep.first_failure.empty()) rep.first_failure = "equality set mismatch " + triple_string(u, v, term.w);
                }
            }
        }
    return rep;
}

SuperadditivityReport superadditivity_audit(const Field& f, int cap) {
    SuperadditivityReport rep;
    auto top = f->n_t();
    auto check = [&](const char* name, auto fn, long hi, long slack) {
        for (long x = 0; x <= hi; ++x)
            for (long y = 0; x + y <= hi; ++y) {
                ++rep.checked;
                int s = sign_of(fn(f, x + y) - fn(f, x) - fn(f, y));
                bool eq_expected = top ? x * y * (slack - x - y) == 0 : x * y == 0;
                if (s < 0 || (s == 0) != eq_expected) {
                    rep.pass = false;
                    if (rep.first_failure.empty())
                        rep.first_failure = std::string(name) + " at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
                }
            }
    };
    long hi_f = top ? *top - 1 : cap;
    long hi_g = top ? *top : cap;
    check("F", bk_F, hi_f, hi_f);
    check("G", bk_G, hi_g, hi_g);
    return rep;
}

std::vector<Term> gr_mul(const UniversalAlgebra& alg, const ConcaveWeighting& phi, const WeylElement& u, const WeylElement& v) {
    if (!phi.in_domain(alg.group(), u) || !phi.in_domain(alg.group(), v))
        fail(ErrorKind::DomainError, "gr product outside the weighting domain");
    std::vector<Term> out;
    for (const auto& term : alg.mul_basis(u, v)) {
        auto gap = value_at(alg, phi, u) + value_at(alg, phi, v) - value_at(alg, phi, term.w);
        if (gap.is_zero()) out.push_back(term);
    }
    return out;
}

std::vector<DeformedTerm> deform_mul(const UniversalAlgebra& alg, const ConcaveWeighting& phi, const WeylElement& u, const WeylElement& v) {
    if (!phi.in_domain(alg.group(), u) || !phi.in_domain(alg.group(), v))
        fail(ErrorKind::DomainError, "deformed product outside the weighting domain");
    std::vector<DeformedTerm> out;
    for (const auto& term : alg.mul_basis(u, v))
        out.push_back({term.w, term.c, value_at(alg, phi, u) + value_at(alg, phi, v) - value_at(alg, phi, term.w)});
    return out;
}

FieldElement evaluate_term(const DeformedTerm& t, const Rational& tau) {
    if (tau <= 0) fail(ErrorKind::InvalidParameter, "tau must be positive");
    if (tau == 1 || t.exponent.is_zero()) return t.c;
    if (!t.exponent.is_rational()) fail(ErrorKind::UnsupportedExponent, "irrational exponent " + t.exponent.str());
    Rational e = t.exponent.rational_value();
    if (e.get_den() != 1) fail(ErrorKind::UnsupportedExponent, "non-integer exponent " + rational_string(e));
    long k = e.get_num().get_si();
    Rational base = k >= 0 ? tau : Rational(1) / tau;
    Rational p = 1;
    for (long j = 0; j < std::labs(k); ++j) p *= base;
    p.canonicalize();
    return t.c * p;
}

double evaluate_term_double(const DeformedTerm& t, double tau) {
    return t.c.to_double() * std::pow(tau, t.exponent.to_double());
}

LimitTable limit_prering(const UniversalAlgebra& alg, const ConcaveWeighting& phi) {
    LimitTable tab;
    tab.side = phi.side;
    tab.basis = domain_basis(alg, phi.side);
    const auto nb = tab.basis.size();
    std::vector<int> pos(alg.size(), -1);
    for (std::size_t k = 0; k < nb; ++k) pos[alg.group().index(tab.basis[k])] = static_cast<int>(k);
    tab.entry.assign(nb, std::vector<PreRingVector>(nb, PreRingVector(nb, PreRingCoeff::zero())));
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = 0; b < nb; ++b) {
            const auto& u = tab.basis[a];
            const auto& v = tab.basis[b];
            if (!alg.top() && u.len + v.len > alg.group().max_len()) continue;
            for (const auto& t : deform_mul(alg, phi, u, v)) {
                int k = pos[alg.group().index(t.w)];
                if (k < 0) fail(ErrorKind::DomainError, "deformed product leaves the subalgebra");
                int s = sign_of(t.exponent);
                if (s < 0) fail(ErrorKind::Precondition, "weighting is not concave at " + triple_string(u, v, t.w));
                if (s > 0) {
                    tab.entry[a][b][k] = PreRingCoeff::infinity();
                    continue;
                }
                if (!t.c.is_rational() || t.c.rational_value().get_den() != 1)
                    fail(ErrorKind::DomainError, "degenerate coefficient " + t.c.str() + " is not an integer");
                tab.entry[a][b][k] = PreRingCoeff::finite(t.c.rational_value().get_num().get_si());
            }
        }
    return tab;
}

LimitReport limit_isomorphism_check(const UniversalAlgebra& alg, const LimitTable& table) {
    auto top = alg.top();
    if (!top) fail(ErrorKind::UnsupportedMode, "limit isomorphism needs a finite group");
    const int n = *top;
    const auto& g = alg.group();
    LimitReport rep;
    const auto nb = table.basis.size();
    if (table.side == 0) {
        FlagPreRing flag(n);
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = 0; b < nb; ++b) {
                auto img = flag.mul_basis(g.pd(table.basis[a]), g.pd(table.basis[b]));
                for (std::size_t c = 0; c < nb; ++c) {
                    ++rep.checked;
                    if (img[g.index(g.pd(table.basis[c]))] == table.entry[a][b][c]) continue;
                    rep.pass = false;
                    if (rep.first_failure.empty())
                        rep.first_failure = triple_string(table.basis[a], table.basis[b], table.basis[c]);
                }
            }
        return rep;
    }
    const int l = 3 - table.side;
    GrassmannPreRing grass(n);
    auto cls = [&](const WeylElement& w) { return n - 1 - g.relative_length(w, l); };
    for (std::size_t a = 0; a < nb; ++a)
        for (std::size_t b = 0; b < nb; ++b) {
            auto img = grass.mul_basis(cls(table.basis[a]), cls(table.basis[b]));
            for (std::size_t c = 0; c < nb; ++c) {
                ++rep.checked;
                if (img[cls(table.basis[c])] == table.entry[a][b][c]) continue;
                rep.pass = false;
                if (rep.first_failure.empty()) rep.first_failure = triple_string(table.basis[a], table.basis[b], table.basis[c]);
            }
        }
    return rep;
}

}  // namespace dihedral
