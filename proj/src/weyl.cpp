#include "dihedral/weyl.hpp"

#include <cstdlib>

namespace dihedral {

std::string to_string(const WeylElement& w) {
    if (w.side == 0) return w.len == 0 ? "1" : "w0(" + std::to_string(w.len) + ")";
    return "(" + std::to_string(w.len) + "," + std::to_string(w.side) + ")";
}

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

DihedralGroup::DihedralGroup(int n) : n_(n) {
    if (n < 2) fail(ErrorKind::InvalidParameter, "dihedral group needs n >= 2");
    elements_.push_back(identity());
    for (int k = 1; k < n; ++k) {
        elements_.push_back({k, 1});
        elements_.push_back({k, 2});
    }
    elements_.push_back({n, 0});
    finite_lookup_.assign(2 * n, -1);
    for (int idx = 0; idx < size(); ++idx) {
        auto [rot, refl] = to_pair(elements_[idx]);
        int key = static_cast<int>(mod(rot, n)) * 2 + refl;
        if (finite_lookup_[key] != -1) fail(ErrorKind::InvalidParameter, "dihedral encoding collision");
        finite_lookup_[key] = idx;
    }
}

DihedralGroup DihedralGroup::infinite(int cap) {
    if (cap < 1) fail(ErrorKind::InvalidParameter, "degree cap must be positive");
    DihedralGroup g;
    g.cap_ = cap;
    g.elements_.push_back(g.identity());
    for (int k = 1; k <= cap; ++k) {
        g.elements_.push_back({k, 1});
        g.elements_.push_back({k, 2});
    }
    return g;
}

WeylElement DihedralGroup::longest() const {
    if (!finite()) fail(ErrorKind::UnsupportedMode, "infinite dihedral group has no longest element");
    return {n_, 0};
}

WeylElement DihedralGroup::make(int len, int side) const {
    WeylElement w{len, side};
    if (finite() && len == n_) w.side = 0;
    if (len == 0) w.side = 0;
    if (!valid(w)) fail(ErrorKind::OutOfRange, "invalid Weyl element " + to_string(w));
    return w;
}

bool DihedralGroup::valid(const WeylElement& w) const {
    if (w.len < 0) return false;
    if (w.len == 0) return w.side == 0;
    if (finite()) {
        if (w.len > n_) return false;
        if (w.len == n_) return w.side == 0;
    }
    return w.side == 1 || w.side == 2;
}

int DihedralGroup::size() const { return static_cast<int>(elements_.size()); }

int DihedralGroup::index(const WeylElement& w) const {
    if (!valid(w)) fail(ErrorKind::OutOfRange, "invalid Weyl element " + to_string(w));
    if (w.len == 0) return 0;
    if (finite() && w.len == n_) return 2 * n_ - 1;
    if (!finite() && w.len > cap_) fail(ErrorKind::CapExceeded, "length " + std::to_string(w.len) + " exceeds cap");
    return 2 * w.len - 2 + w.side;
}

WeylElement DihedralGroup::at(int idx) const {
    if (idx < 0 || idx >= size()) fail(ErrorKind::OutOfRange, "basis index out of range");
    return elements_[idx];
}

std::pair<long, int> DihedralGroup::to_pair(const WeylElement& w) const {
    long k = w.len;
    int side = w.side == 0 ? 1 : w.side;
    if (k == 0) return {0, 0};
    long rot;
    int refl;
    if (side == 1) {
        if (k % 2 == 0) {
            rot = -k / 2;
            refl = 0;
        } else {
            rot = (k - 1) / 2;
            refl = 1;
        }
    } else {
        if (k % 2 == 0) {
            rot = k / 2;
            refl = 0;
        } else {
            rot = -(k + 1) / 2;
            refl = 1;
        }
    }
    if (finite()) rot = mod(rot, n_);
    return {rot, refl};
}

WeylElement DihedralGroup::from_pair(long rot, int refl) const {
    if (finite()) {
        int key = static_cast<int>(mod(rot, n_)) * 2 + refl;
        return elements_[finite_lookup_[key]];
    }
    if (refl == 0) {
        if (rot == 0) return identity();
        if (rot > 0) return {static_cast<int>(2 * rot), 2};
        return {static_cast<int>(-2 * rot), 1};
    }
    if (rot >= 0) return {static_cast<int>(2 * rot + 1), 1};
    return {static_cast<int>(-2 * rot - 1), 2};
}

WeylElement DihedralGroup::compose(const WeylElement& u, const WeylElement& v) const {
    auto [a, e] = to_pair(u);
    auto [b, f] = to_pair(v);
    return from_pair(a + (e ? -b : b), e ^ f);
}

WeylElement DihedralGroup::inverse(const WeylElement& w) const {
    auto [a, e] = to_pair(w);
    if (e) return w;
    return from_pair(-a, 0);
}

WeylElement DihedralGroup::pd(const WeylElement& w) const { return compose(longest(), w); }

std::vector<int> DihedralGroup::word(const WeylElement& w) const {
    std::vector<int> letters(w.len);
    int side = w.side == 0 ? 1 : w.side;
    for (int p = 0; p < w.len; ++p) {
        // position from the right: 0 -> side, 1 -> other, ...
        int from_right = w.len - 1 - p;
        letters[p] = from_right % 2 == 0 ? side : 3 - side;
    }
    return letters;
}

int DihedralGroup::first_letter(const WeylElement& w) const {
    if (w.len == 0) return 0;
    return word(w).front();
}

int DihedralGroup::last_letter(const WeylElement& w) const {
    if (w.len == 0) return 0;
    return w.side == 0 ? 1 : w.side;
}

long DihedralGroup::vertex_index(const WeylElement& w, int l) const {
    auto [a, e] = to_pair(w);
    long j0 = l == 1 ? 0 : 1;
    long j = (e ? -j0 : j0) - 2 * a;
    return finite() ? mod(j, 2L * n_) : j;
}

int DihedralGroup::relative_length(const WeylElement& w, int l) const {
    if (l != 1 && l != 2) fail(ErrorKind::InvalidParameter, "relative length index must be 1 or 2");
    long j = vertex_index(w, l);
    if (!finite()) return static_cast<int>(std::min(std::labs(j), std::labs(j - 1)));
    long m = 2L * n_;
    auto cyc = [m](long a, long b) {
        long d = mod(a - b, m);
        return std::min(d, m - d);
    };
    return static_cast<int>(std::min(cyc(j, 0), cyc(j, 1)));
}

bool DihedralGroup::in_W(const WeylElement& w, int i) const {
    WeylElement ws = compose(w, generator(3 - i));
    return ws.len == w.len + 1;
}

// ---------------------------------------------------------------------------

Vec2 mat_apply(const Mat2& m, const Vec2& v) { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

FieldElement dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
Vec2 vec_add(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec2 vec_sub(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
Vec2 vec_scale(const Vec2& a, const FieldElement& s) { return {a[0] * s, a[1] * s}; }
bool vec_equal(const Vec2& a, const Vec2& b) { return a[0] == b[0] && a[1] == b[1]; }

PlaneAction::PlaneAction(const Field& f, const DihedralGroup& g) : field_(f), group_(g) {
    if (!f->cyclotomic() || !g.finite() || f->n() != g.n())
        fail(ErrorKind::UnsupportedMode, "plane action needs the cyclotomic field of the same n");
    zeta_[0] = unit(0);
    zeta_[1] = unit(2);
    const long n = g.n();
    for (const auto& w : g.elements()) {
        auto [a, e] = g.to_pair(w);
        // rho^a is rotation by -2a*pi/n = -4a * pi/(2n).
        FieldElement c = cos_pi_2n(f, -4 * a), s = sin_pi_2n(f, -4 * a);
        Mat2 rot{c, -s, s, c};
        if (e) {
            Mat2 refl{FieldElement::from_int(f, 1), FieldElement(f), FieldElement(f), FieldElement::from_int(f, -1)};
            mats_.push_back(mat_mul(rot, refl));
        } else {
            mats_.push_back(rot);
        }
    }
    wo_ = mats_[g.index(g.longest())];
    sin1_inv_ = sin_pi_2n(f, 2).inverse();
    (void)n;
}

Vec2 PlaneAction::star(const Vec2& v) const {
    Vec2 r = mat_apply(wo_, v);
    return {-r[0], -r[1]};
}

Vec2 PlaneAction::unit(long j) const { return {cos_pi_2n(field_, j), sin_pi_2n(field_, j)}; }

std::pair<FieldElement, FieldElement> PlaneAction::ray_coords(const Vec2& v) const {
    // v = a (1,0) + b (cos(pi/n), sin(pi/n))
    FieldElement b = v[1] * sin1_inv_;
    FieldElement a = v[0] - b * zeta_[1][0];
    return {a, b};
}

Vec2 PlaneAction::from_ray(const FieldElement& a, const FieldElement& b) const {
    return vec_add(vec_scale(zeta_[0], a), vec_scale(zeta_[1], b));
}

// ---------------------------------------------------------------------------

RootWeightFrame::RootWeightFrame(const Field& f, const DihedralGroup& g) : field_(f), group_(g), two_t_(two_t(f)) {
    FieldElement two = FieldElement::from_int(f, 2);
    iota_ = {two, -two_t_, -two_t_, two};
}

Vec2 RootWeightFrame::alpha(int i) const {
    Vec2 v{FieldElement(field_), FieldElement(field_)};
    v[i - 1] = FieldElement::from_int(field_, 1);
    return v;
}

Vec2 RootWeightFrame::omega(int i) const { return alpha(i); }

Vec2 RootWeightFrame::reflect_root(int i, const Vec2& x) const {
    // s_i(alpha_i) = -alpha_i, s_i(alpha_j) = alpha_j + [2]_t alpha_i.
    Vec2 r = x;
    int a = i - 1, b = 2 - i;
    r[a] = -x[a] + two_t_ * x[b];
    return r;
}

Vec2 RootWeightFrame::reflect_weight(int i, const Vec2& x) const {
    // s_i(omega_k) = omega_k - delta_ik iota(alpha_i)
    Vec2 col{iota_[i - 1], iota_[2 + i - 1]};
    return vec_sub(x, vec_scale(col, x[i - 1]));
}

Vec2 RootWeightFrame::act_weight(const WeylElement& w, const Vec2& x) const {
    auto letters = group_.word(w);
    Vec2 r = x;
    for (std::size_t p = letters.size(); p-- > 0;) r = reflect_weight(letters[p], r);
    return r;
}

Vec2 RootWeightFrame::bracket(const WeylElement& w, int i) const {
    auto letters = group_.word(w);
    Vec2 x{FieldElement(field_), FieldElement(field_)};
    for (std::size_t p = letters.size(); p-- > 0;) {
        int j = letters[p];
        x = reflect_root(j, x);
        if (j == i) x = vec_add(x, alpha(i));
    }
    return x;
}

FieldElement RootWeightFrame::phi_side(const WeylElement& w, int i) const {
    Vec2 b = bracket(w, i);
    return b[0] + b[1];
}

FieldElement RootWeightFrame::phi_total(const WeylElement& w) const { return phi_side(w, 1) + phi_side(w, 2); }

FieldElement q_binomial_2(const Field& f, long m) {
    if (m < 2) return FieldElement(f);
    if (f->cyclotomic()) return q_number(f, m) * q_number(f, m - 1) / q_number(f, 2);
    FieldElement r(f);
    for (long j = 1; j <= m - 1; ++j) r += t_number(f, j);
    return r;
}

FieldElement RootWeightFrame::phi_side_closed(const WeylElement& w, int i) const {
    WeylElement ws = group_.compose(w, group_.generator(i));
    long l = w.len;
    return ws.len < w.len ? q_binomial_2(field_, l + 1) : q_binomial_2(field_, l);
}

FieldElement RootWeightFrame::phi_total_closed(const WeylElement& w) const {
    if (field_->cyclotomic() || field_->q()) {
        FieldElement q = q_number(field_, w.len);
        return q * q;
    }
    // [l]_q^2 = sum_{j<l} [2j+1]_q, and odd q-numbers are rational.
    FieldElement r(field_);
    for (long j = 0; j < w.len; ++j) r += q_number(field_, 2 * j + 1);
    return r;
}

}  // namespace dihedral
