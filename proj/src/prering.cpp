#include "dihedral/prering.hpp"

namespace dihedral {

PreRingCoeff PreRingCoeff::finite(long v, long modulus) {
    if (modulus < 2) fail(ErrorKind::InvalidParameter, "coefficient modulus must be at least 2");
    PreRingCoeff c;
    c.modulus_ = modulus;
    c.value_ = ((v % modulus) + modulus) % modulus;
    return c;
}

PreRingCoeff PreRingCoeff::infinity(long modulus) {
    PreRingCoeff c = finite(0, modulus);
    c.inf_ = true;
    return c;
}

std::string PreRingCoeff::str() const { return inf_ ? "inf" : std::to_string(value_); }

PreRingCoeff operator+(const PreRingCoeff& a, const PreRingCoeff& b) {
    if (a.modulus_ != b.modulus_) fail(ErrorKind::InvalidParameter, "mixed coefficient rings");
    if (a.inf_ && b.inf_) fail(ErrorKind::UndefinedSum, "inf + inf is undefined");
    if (a.inf_ || b.inf_) return PreRingCoeff::infinity(a.modulus_);
    return PreRingCoeff::finite(a.value_ + b.value_, a.modulus_);
}

PreRingCoeff operator*(const PreRingCoeff& a, const PreRingCoeff& b) {
    if (a.modulus_ != b.modulus_) fail(ErrorKind::InvalidParameter, "mixed coefficient rings");
    if (a.is_zero() || b.is_zero()) return PreRingCoeff::zero(a.modulus_);
    if (a.inf_ || b.inf_) return PreRingCoeff::infinity(a.modulus_);
    return PreRingCoeff::finite(a.value_ * b.value_, a.modulus_);
}

PreRingCoeff saturating_add(const PreRingCoeff& a, const PreRingCoeff& b) {
    if (a.is_inf() && b.is_inf()) return a;
    return a + b;
}

// ---------------------------------------------------------------------------

GrassmannPreRing::GrassmannPreRing(int n) : n_(n) {
    if (n < 2) fail(ErrorKind::InvalidParameter, "pre-ring needs n >= 2");
}

PreRingVector GrassmannPreRing::basis(int r) const {
    if (r < 0 || r > n_ - 1) fail(ErrorKind::OutOfRange, "Grassmannian degree " + std::to_string(r) + " out of range");
    auto v = zero();
    v[r] = PreRingCoeff::one();
    return v;
}

PreRingVector GrassmannPreRing::mul_basis(int r1, int r2) const {
    const int d = n_ - 1;
    if (r1 < 0 || r1 > d || r2 < 0 || r2 > d) fail(ErrorKind::OutOfRange, "Grassmannian degree out of range");
    if (r1 == d) return basis(r2);
    if (r2 == d) return basis(r1);
    int r3 = r1 + r2 - d;
    auto v = zero();
    if (r3 < 0) return v;
    v[r3] = r3 == 0 ? PreRingCoeff::one() : PreRingCoeff::infinity();
    return v;
}

PreRingVector GrassmannPreRing::mul_impl(const PreRingVector& a, const PreRingVector& b, bool saturate) const {
    auto out = zero();
    for (int i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j].is_zero()) continue;
            auto p = mul_basis(i, j);
            for (int k = 0; k < n_; ++k) {
                auto term = a[i] * b[j] * p[k];
                out[k] = saturate ? saturating_add(out[k], term) : out[k] + term;
            }
        }
    }
    return out;
}

PreRingVector GrassmannPreRing::mul(const PreRingVector& a, const PreRingVector& b) const { return mul_impl(a, b, false); }

PreRingVector GrassmannPreRing::product(const std::vector<int>& rs) const {
    if (rs.empty()) fail(ErrorKind::InvalidParameter, "empty product");
    auto acc = basis(rs.front());
    for (std::size_t p = 1; p < rs.size(); ++p) acc = mul_impl(acc, basis(rs[p]), true);
    return acc;
}

// ---------------------------------------------------------------------------

FlagPreRing::FlagPreRing(int n) : group_(n) {}

PreRingVector FlagPreRing::basis(const WeylElement& w) const {
    auto v = zero();
    v[group_.index(w)] = PreRingCoeff::one();
    return v;
}

WeylElement FlagPreRing::cell(int r, int l) const { return group_.make(r, (r == 0 || r == n()) ? 0 : l); }

PreRingVector FlagPreRing::mul_basis(const WeylElement& u, const WeylElement& v) const {
    const int n = group_.n();
    if (u.len == n) return basis(v);
    if (v.len == n) return basis(u);
    auto out = zero();
    int r3 = u.len + v.len - n;
    bool same = u.side == v.side && u.len > 0 && v.len > 0;
    if (same) {
        if (r3 > 0) out[group_.index(group_.make(r3, u.side))] = PreRingCoeff::infinity();
        return out;
    }
    if (r3 < 0) return out;
    if (r3 == 0) {
        out[group_.index(group_.identity())] = PreRingCoeff::one();
        return out;
    }
    out[group_.index(group_.make(r3, 1))] = PreRingCoeff::infinity();
    out[group_.index(group_.make(r3, 2))] = PreRingCoeff::infinity();
    return out;
}

PreRingVector FlagPreRing::mul_impl(const PreRingVector& a, const PreRingVector& b, bool saturate) const {
    auto out = zero();
    const int sz = group_.size();
    for (int i = 0; i < sz; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < sz; ++j) {
            if (b[j].is_zero()) continue;
            auto p = mul_basis(group_.at(i), group_.at(j));
            for (int k = 0; k < sz; ++k) {
                if (p[k].is_zero()) continue;
                auto term = a[i] * b[j] * p[k];
                out[k] = saturate ? saturating_add(out[k], term) : out[k] + term;
            }
        }
    }
    return out;
}

PreRingVector FlagPreRing::mul(const PreRingVector& a, const PreRingVector& b) const { return mul_impl(a, b, false); }

PreRingVector FlagPreRing::product(const std::vector<WeylElement>& ws) const {
    if (ws.empty()) fail(ErrorKind::InvalidParameter, "empty product");
    auto acc = basis(ws.front());
    for (std::size_t p = 1; p < ws.size(); ++p) acc = mul_impl(acc, basis(ws[p]), true);
    return acc;
}

PreRingVector FlagPreRing::pullback(const PreRingVector& a, int l) const {
    if (static_cast<int>(a.size()) != n()) fail(ErrorKind::InvalidParameter, "Grassmannian vector has the wrong size");
    auto out = zero();
    for (int r = 0; r < n(); ++r) out[group_.index(cell(r + 1, l))] = a[r];
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<WeylElement>> enumerate_sigma_Am(int n, int m, long budget) {
    if (m < 2) fail(ErrorKind::InvalidParameter, "Sigma_{A,m} needs m >= 2");
    FlagPreRing ring(n);
    const auto& g = ring.group();
    std::vector<std::vector<WeylElement>> out;
    std::vector<WeylElement> cur;
    long visited = 0;
    const int point = g.index(g.identity());
    // Codegrees n - l(u_i) of a tuple with a point-class product sum to n.
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == m) {
            if (remaining != 0) return;
            if (++visited > budget) fail(ErrorKind::BudgetExceeded, "Sigma_{A,m} enumeration exceeded budget " + std::to_string(budget));
            auto p = ring.product(cur);
            if (p[point].is_zero()) return;
            for (int k = 0; k < g.size(); ++k)
                if (k != point && !p[k].is_zero()) return;
            out.push_back(cur);
            return;
        }
        for (const auto& w : g.elements()) {
            int codeg = n - w.len;
            if (codeg > remaining) continue;
            cur.push_back(w);
            self(self, slot + 1, remaining - codeg);
            cur.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace dihedral
