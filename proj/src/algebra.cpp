#include "dihedral/algebra.hpp"

#include <algorithm>

namespace dihedral {

UniversalAlgebra::UniversalAlgebra(const Field& f, int cap)
    : field_(f),
      group_(f->cyclotomic() ? DihedralGroup(f->n()) : DihedralGroup::infinite(cap)),
      table_(f, f->cyclotomic() ? f->n() : cap) {
    for (int k = 0; k <= group_.max_len(); ++k) power_sums_.push_back(t_power_sum(f, k));
    const int sz = size();
    mul_cache_.resize(static_cast<std::size_t>(sz) * sz);
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b) {
            auto u = group_.at(a), v = group_.at(b);
            if (!group_.finite() && u.len + v.len > group_.cap()) continue;
            mul_cache_[static_cast<std::size_t>(a) * sz + b] = compute_mul(u, v);
        }
}

ClassVector UniversalAlgebra::zero() const { return ClassVector(size(), FieldElement(field_)); }

ClassVector UniversalAlgebra::basis(const WeylElement& w) const {
    auto v = zero();
    v[group_.index(w)] = FieldElement::from_int(field_, 1);
    return v;
}

std::vector<Term> UniversalAlgebra::compute_mul(const WeylElement& u, const WeylElement& v) const {
    const auto one = FieldElement::from_int(field_, 1);
    if (u.len == 0) return {{v, one}};
    if (v.len == 0) return {{u, one}};
    const int k = u.len, l = v.len;
    auto top_len = top();
    if (top_len && k + l > *top_len) return {};
    std::vector<Term> out;
    auto push = [&](const WeylElement& w, const FieldElement& c) {
        if (!c.is_zero()) out.push_back({w, c});
    };
    if (u.side == v.side) {
        if (top_len && k + l == *top_len) return {};  // [n, k]_t = 0
        push(group_.make(k + l, u.side), table_.binomial(k + l, k));
        return out;
    }
    if (top_len && k + l == *top_len) {
        push(group_.longest(), one);
        return out;
    }
    // u ends in s_1 (length a), v ends in s_2 (length b).
    int a = u.side == 1 ? k : l, b = u.side == 1 ? l : k;
    push(group_.make(a + b, 1), table_.binomial(a + b - 1, a - 1));
    push(group_.make(a + b, 2), table_.binomial(a + b - 1, b - 1));
    return out;
}

const std::vector<Term>& UniversalAlgebra::mul_basis(const WeylElement& u, const WeylElement& v) const {
    if (!group_.finite() && u.len + v.len > group_.cap())
        fail(ErrorKind::CapExceeded, "product degree " + std::to_string(u.len + v.len) + " exceeds cap " + std::to_string(group_.cap()));
    return mul_cache_[static_cast<std::size_t>(group_.index(u)) * size() + group_.index(v)];
}

ClassVector UniversalAlgebra::mul(const ClassVector& a, const ClassVector& b) const {
    auto out = zero();
    for (int i = 0; i < size(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < size(); ++j) {
            if (b[j].is_zero()) continue;
            FieldElement ab = a[i] * b[j];
            for (const auto& t : mul_basis(group_.at(i), group_.at(j))) out[group_.index(t.w)] += ab * t.c;
        }
    }
    return out;
}

ClassVector UniversalAlgebra::product_chain(const std::vector<WeylElement>& ws) const {
    if (ws.empty()) fail(ErrorKind::InvalidParameter, "product_chain needs a nonempty list");
    auto acc = basis(ws.front());
    for (std::size_t p = 1; p < ws.size(); ++p) acc = mul(acc, basis(ws[p]));
    return acc;
}

FieldElement UniversalAlgebra::structure_const(const std::vector<WeylElement>& ws, const WeylElement& y) const {
    return coeff(product_chain(ws), y);
}

ClassVector UniversalAlgebra::weyl_action(int i, const ClassVector& a) const {
    if (i != 1 && i != 2) fail(ErrorKind::InvalidParameter, "generator index must be 1 or 2");
    auto out = zero();
    for (int idx = 0; idx < size(); ++idx) {
        if (a[idx].is_zero()) continue;
        auto w = group_.at(idx);
        if (w.len == 0) {
            out[idx] += a[idx];
        } else if (w.side == 0) {
            out[idx] -= a[idx];
        } else if (w.side != i) {
            out[idx] += a[idx];
        } else {
            out[idx] -= a[idx];
            out[group_.index(group_.make(w.len, 3 - i))] += a[idx] * power_sums_[w.len];
        }
    }
    return out;
}

bool UniversalAlgebra::in_B(const WeylElement& w, int i) const { return group_.in_W(w, i); }

std::vector<WeylElement> UniversalAlgebra::B_basis(int i) const {
    std::vector<WeylElement> out;
    for (const auto& w : group_.elements())
        if (in_B(w, i)) out.push_back(w);
    return out;
}

bool vector_equal(const ClassVector& a, const ClassVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

ClassVector vector_add(const ClassVector& a, const ClassVector& b) {
    ClassVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ClassVector vector_scale(const ClassVector& a, const FieldElement& s) {
    ClassVector r = a;
    for (auto& x : r) x = x * s;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

Field kac_moody_field(int a12, int a21) {
    if (a12 < 1 || a21 < 1) fail(ErrorKind::InvalidParameter, "Cartan entries must be positive");
    switch (a12 * a21) {
    case 1: return make_cyclotomic_field(3);
    case 2: return make_cyclotomic_field(4);
    case 3: return make_cyclotomic_field(6);
    case 4: return make_hyperbolic_field(Rational(1));
    default:
        fail(ErrorKind::UnsupportedCartan, "t + 1/t = sqrt(" + std::to_string(a12 * a21) + ") has no rational or cyclotomic t");
    }
}

}  // namespace

KacMoodyRing::KacMoodyRing(int a12, int a21, int cap)
    : a12_(a12),
      a21_(a21),
      field_(kac_moody_field(a12, a21)),
      group_(field_->cyclotomic() ? DihedralGroup(field_->n()) : DihedralGroup::infinite(cap)) {}

KacMoodyRing::Vector KacMoodyRing::basis(const WeylElement& w) const {
    Vector v(group_.size(), Rational(0));
    v[group_.index(w)] = 1;
    return v;
}

std::pair<Integer, Integer> KacMoodyRing::reflect_root(int i, std::pair<Integer, Integer> x) const {
    // s_i(alpha_i) = -alpha_i, s_i(alpha_j) = alpha_j + a_ij alpha_i
    if (i == 1) return {-x.first + Integer(a12_) * x.second, x.second};
    return {x.first, -x.second + Integer(a21_) * x.first};
}

std::pair<Integer, Integer> KacMoodyRing::act_root(const WeylElement& w, std::pair<Integer, Integer> x) const {
    auto letters = group_.word(w);
    for (std::size_t p = letters.size(); p-- > 0;) x = reflect_root(letters[p], x);
    return x;
}

KacMoodyRing::Vector KacMoodyRing::chevalley_mul(const Vector& a, int i) const {
    if (i != 1 && i != 2) fail(ErrorKind::InvalidParameter, "generator index must be 1 or 2");
    Vector out(group_.size(), Rational(0));
    for (int idx = 0; idx < group_.size(); ++idx) {
        if (a[idx] == 0) continue;
        auto w = group_.at(idx);
        if (!group_.finite() && w.len + 1 > group_.cap())
            fail(ErrorKind::CapExceeded, "Chevalley product exceeds degree cap " + std::to_string(group_.cap()));
        // Length-increasing insertions of a simple reflection happen only at the two ends
        // of the reduced word. Both ends can reach the same element (the same reflection);
        // such a target is counted once.
        std::vector<WeylElement> seen;
        for (int j = 1; j <= 2; ++j) {
            auto ws = group_.compose(w, group_.generator(j));
            if (ws.len != w.len + 1) continue;
            seen.push_back(ws);
            if (j == i) out[group_.index(ws)] += a[idx];
        }
        auto winv = group_.inverse(w);
        for (int j = 1; j <= 2; ++j) {
            auto sw = group_.compose(group_.generator(j), w);
            if (sw.len != w.len + 1) continue;
            if (std::find(seen.begin(), seen.end(), sw) != seen.end()) continue;
            auto root = act_root(winv, j == 1 ? std::pair<Integer, Integer>{1, 0} : std::pair<Integer, Integer>{0, 1});
            const Integer& c = i == 1 ? root.first : root.second;
            if (c != 0) out[group_.index(sw)] += a[idx] * Rational(c);
        }
    }
    return out;
}

KacMoodyRing::Vector KacMoodyRing::mul_basis(const WeylElement& u, const WeylElement& v) const {
    if (u.len == 0) return basis(v);
    if (v.len == 0) return basis(u);
    if (group_.finite() && u.len + v.len > group_.n()) return Vector(group_.size(), Rational(0));
    if (!group_.finite() && u.len + v.len > group_.cap())
        fail(ErrorKind::CapExceeded, "product degree exceeds cap " + std::to_string(group_.cap()));
    // [X_{s_i}]^k = c [X_v] for v of length k and side i.
    const int i = v.side;
    Vector power = basis(group_.identity());
    Vector acc = basis(u);
    for (int step = 0; step < v.len; ++step) {
        power = chevalley_mul(power, i);
        acc = chevalley_mul(acc, i);
    }
    const Rational& c = power[group_.index(v)];
    if (c == 0) fail(ErrorKind::InvalidParameter, "vanishing Chevalley power");
    for (auto& x : acc) x /= c;
    return acc;
}

KacMoodyRing::Vector KacMoodyRing::mul(const Vector& a, const Vector& b) const {
    Vector out(group_.size(), Rational(0));
    for (int i = 0; i < group_.size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < group_.size(); ++j) {
            if (b[j] == 0) continue;
            auto u = group_.at(i), v = group_.at(j);
            if (group_.finite() && u.len + v.len > group_.n()) continue;
            auto p = mul_basis(u, v);
            for (int k = 0; k < group_.size(); ++k)
                if (p[k] != 0) out[k] += a[i] * b[j] * p[k];
        }
    }
    return out;
}

KacMoodyRing::Vector KacMoodyRing::weyl_action_h2(int i, const Vector& a) const {
    if (a.size() != 2) fail(ErrorKind::InvalidParameter, "H^2 vector needs two coordinates");
    Vector r = a;
    int p = i - 1, o = 2 - i;
    Rational aij = i == 1 ? a12_ : a21_;
    r[p] = -a[p];
    r[o] = a[o] + aij * a[p];
    return r;
}

// ---------------------------------------------------------------------------

std::pair<FieldElement, FieldElement> default_iso_scalars(const KacMoodyRing& km) {
    const auto& f = km.field();
    // sqrt(a12 / a21) = sqrt(a12 a21) / a21 = (t + 1/t) / a21.
    return {two_t(f) * Rational(1, km.a21()), FieldElement::from_int(f, 1)};
}

namespace {

FieldElement power(const FieldElement& x, int k) {
    std::vector<Rational> c(x.coeffs().size(), Rational(0));
    c[0] = 1;
    FieldElement r(x.field(), c);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

}  // namespace

IsoReport iso_check(const KacMoodyRing& km, const FieldElement& c1, const FieldElement& c2) {
    const auto& f = km.field();
    if (c1.field() != f.get() || c2.field() != f.get()) fail(ErrorKind::InvalidParameter, "scalars live in a different field");
    if (c1.is_zero() || c2.is_zero()) fail(ErrorKind::UnsupportedCartan, "scalars must be nonzero");
    FieldElement ratio = c1 / c2;
    if (ratio * ratio != FieldElement::from_rational(f, Rational(km.a12(), km.a21())) || sign_of(ratio) <= 0)
        fail(ErrorKind::UnsupportedCartan, "c1 / c2 is not sqrt(a12 / a21)");

    const auto& g = km.group();
    UniversalAlgebra alg(f, g.finite() ? 16 : g.cap());
    auto scale = [&](const WeylElement& w) {
        int side = w.side == 0 ? 1 : w.side;
        const FieldElement& ci = side == 1 ? c1 : c2;
        const FieldElement& cj = side == 1 ? c2 : c1;
        return power(ci, (w.len + 1) / 2) * power(cj, w.len / 2);
    };
    auto psi = [&](const KacMoodyRing::Vector& x) {
        auto out = alg.zero();
        for (int idx = 0; idx < g.size(); ++idx)
            if (x[idx] != 0) out[idx] += scale(g.at(idx)) * x[idx];
        return out;
    };

    IsoReport rep;
    const int max_len = g.max_len();
    for (const auto& u : g.elements())
        for (const auto& v : g.elements()) {
            if (u.len + v.len > max_len && !g.finite()) continue;
            auto lhs = psi(km.mul_basis(u, v));
            auto rhs = alg.mul(psi(km.basis(u)), psi(km.basis(v)));
            ++rep.checks;
            if (!vector_equal(lhs, rhs) && rep.pass) {
                rep.pass = false;
                rep.counterexample = "product " + to_string(u) + " * " + to_string(v);
            }
        }
    // Equivariance on the generators of H^2.
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            KacMoodyRing::Vector e(2, Rational(0));
            e[j - 1] = 1;
            auto image = km.weyl_action_h2(i, e);
            KacMoodyRing::Vector full(g.size(), Rational(0));
            full[g.index(g.generator(1))] = image[0];
            full[g.index(g.generator(2))] = image[1];
            auto lhs = psi(full);
            auto rhs = alg.weyl_action(i, psi(km.basis(g.generator(j))));
            ++rep.checks;
            if (!vector_equal(lhs, rhs) && rep.pass) {
                rep.pass = false;
                rep.counterexample = "equivariance s_" + std::to_string(i) + " on X_" + std::to_string(j);
            }
        }
    return rep;
}

}  // namespace dihedral
