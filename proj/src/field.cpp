#include "dihedral/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace dihedral {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) fail(ErrorKind::InvalidParameter, "empty rational");
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    Rational r;
    if (slash == std::string::npos) {
        if (!valid_int(s)) fail(ErrorKind::InvalidParameter, "bad rational '" + text + "'");
        r = Rational(Integer(s[0] == '+' ? s.substr(1) : s));
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den)) fail(ErrorKind::InvalidParameter, "bad rational '" + text + "'");
        Integer d(den[0] == '+' ? den.substr(1) : den);
        if (d == 0) fail(ErrorKind::InvalidParameter, "zero denominator in '" + text + "'");
        r = Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
        r.canonicalize();
    }
    return r;
}

std::string rational_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

namespace {

using IntPoly = std::vector<Integer>;  // low to high

void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient a / b for a monic divisor b.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return IntPoly{0};
    IntPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        Integer c = a[k];
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    return q;
}

IntPoly cyclotomic_poly(int m) {
    static std::mutex mu;
    static std::map<int, IntPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
    }
    IntPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
    trim(p);
    std::lock_guard<std::mutex> lock(mu);
    memo[m] = p;
    return p;
}

// D_0 = 2, D_1 = s, D_j = s D_{j-1} - D_{j-2}; D_j(t + 1/t) = t^j + t^{-j}.
std::vector<IntPoly> dickson_polys(long upto) {
    std::vector<IntPoly> d;
    d.push_back(IntPoly{2});
    if (upto >= 1) d.push_back(IntPoly{0, 1});
    for (long j = 2; j <= upto; ++j) {
        IntPoly next(j + 1, 0);
        for (std::size_t i = 0; i < d[j - 1].size(); ++i) next[i + 1] += d[j - 1][i];
        for (std::size_t i = 0; i < d[j - 2].size(); ++i) next[i] -= d[j - 2][i];
        trim(next);
        d.push_back(next);
    }
    return d;
}

// Minimal polynomial of zeta + zeta^{-1} for a primitive m-th root of unity (m >= 3).
IntPoly real_cyclotomic_poly(int m) {
    IntPoly phi = cyclotomic_poly(m);
    long deg = static_cast<long>(phi.size()) - 1;
    long half = deg / 2;
    auto dk = dickson_polys(half);
    IntPoly psi(half + 1, 0);
    psi[0] += phi[half];
    for (long k = 1; k <= half; ++k)
        for (std::size_t i = 0; i < dk[k].size(); ++i) psi[i] += phi[half + k] * dk[k][i];
    trim(psi);
    return psi;
}

Rational eval_int_poly(const IntPoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + Rational(p[k]);
    return v;
}

double eval_int_poly_double(const IntPoly& p, double x) {
    double v = 0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k].get_d();
    return v;
}

int sgn(const Rational& r) { return ::sgn(r); }

std::optional<Integer> exact_sqrt(const Integer& v) {
    if (v < 0) return std::nullopt;
    Integer r = sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

}  // namespace

Field make_cyclotomic_field(int n) {
    if (n < 2) fail(ErrorKind::InvalidParameter, "cyclotomic field needs n >= 2, got " + std::to_string(n));
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->n_ = n;
    f->min_poly_ = real_cyclotomic_poly(4 * n);
    f->degree_ = static_cast<int>(f->min_poly_.size()) - 1;
    f->theta_ = 2.0 * std::cos(std::numbers::pi / (2.0 * n));

    // Numeric root check in a 1e-9 window around 2cos(pi/2n).
    double a = eval_int_poly_double(f->min_poly_, f->theta_ - 1e-9);
    double b = eval_int_poly_double(f->min_poly_, f->theta_ + 1e-9);
    if (!(a * b < 0)) fail(ErrorKind::InvalidParameter, "minimal polynomial root check failed for n=" + std::to_string(n));

    // theta is the largest real root; a dyadic bracket of width 2^-30 isolates it,
    // then exact bisection tightens it.
    const long scale = 1L << 30;
    Rational lo(Integer(static_cast<long>(std::floor(f->theta_ * scale)) - 1), Integer(scale));
    Rational hi(Integer(static_cast<long>(std::floor(f->theta_ * scale)) + 2), Integer(scale));
    lo.canonicalize();
    hi.canonicalize();
    int slo = sgn(eval_int_poly(f->min_poly_, lo));
    int shi = sgn(eval_int_poly(f->min_poly_, hi));
    if (slo == 0 || shi == 0 || slo == shi) fail(ErrorKind::InvalidParameter, "isolating interval check failed");
    for (int it = 0; it < 40; ++it) {
        Rational mid = (lo + hi) / 2;
        int sm = sgn(eval_int_poly(f->min_poly_, mid));
        if (sm == 0) {
            lo = hi = mid;
            break;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    f->lo_ = lo;
    f->hi_ = hi;
    f->theta_pow_.resize(f->degree_);
    double p = 1.0;
    for (int i = 0; i < f->degree_; ++i, p *= f->theta_) f->theta_pow_[i] = p;
    return f;
}

Field make_hyperbolic_field(const Rational& t) {
    if (t <= 0) fail(ErrorKind::InvalidParameter, "hyperbolic t must be positive, got " + t.get_str());
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->t_ = t;
    f->degree_ = 1;
    Rational th = t + 1 / t;
    f->theta_ = th.get_d();
    f->theta_pow_ = {1.0};
    f->lo_ = f->hi_ = th;
    auto sn = exact_sqrt(t.get_num());
    auto sd = exact_sqrt(t.get_den());
    if (sn && sd) {
        Rational q(*sn, *sd);
        q.canonicalize();
        f->q_ = q;
    }
    return f;
}

std::string FieldDescriptor::describe() const {
    std::ostringstream os;
    if (cyclotomic())
        os << "Q(2cos(pi/" << 2 * n_ << ")), degree " << degree_;
    else
        os << "Q, hyperbolic t=" << t_.get_str();
    return os.str();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const Field& f) : f_(f.get()), c_(f->degree(), Rational(0)) {}

FieldElement::FieldElement(const FieldDescriptor* f, std::vector<Rational> coeffs) : f_(f), c_(std::move(coeffs)) {
    if (f_ && static_cast<int>(c_.size()) != f_->degree())
        fail(ErrorKind::InvalidParameter, "coefficient vector length does not match field degree");
    for (auto& x : c_) x.canonicalize();
}

FieldElement FieldElement::from_rational(const Field& f, const Rational& r) {
    FieldElement e(f);
    e.c_[0] = r;
    e.c_[0].canonicalize();
    return e;
}

FieldElement FieldElement::theta(const Field& f) {
    FieldElement e(f);
    if (f->cyclotomic()) {
        if (f->degree() == 1)
            e.c_[0] = -Rational(f->min_poly()[0]);
        else
            e.c_[1] = 1;
    } else {
        e.c_[0] = f->t() + 1 / f->t();
    }
    return e;
}

void FieldElement::bind(const FieldDescriptor* f) {
    if (!f_) {
        f_ = f;
        c_.assign(f->degree(), Rational(0));
    }
}

bool FieldElement::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) fail(ErrorKind::DomainError, "element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (!o.f_) return *this;
    bind(o.f_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (!o.f_) return *this;
    bind(o.f_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElement& FieldElement::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    *this = *this * o;
    return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const FieldDescriptor* f = a.f_ ? a.f_ : b.f_;
    if (!f) return FieldElement();
    if (!a.f_ || !b.f_) return FieldElement(f, std::vector<Rational>(f->degree(), Rational(0)));
    const int d = f->degree();
    if (d == 1) return FieldElement(f, {a.c_[0] * b.c_[0]});
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    Rational tmp;
    for (int i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            prod[i + j] += tmp;
        }
    }
    const auto& mp = f->min_poly();
    for (int k = 2 * d - 2; k >= d; --k) {
        if (prod[k] == 0) continue;
        for (int i = 0; i < d; ++i) {
            if (mp[i] == 0) continue;
            prod[k - d + i] -= prod[k] * mp[i];
        }
    }
    prod.resize(d);
    return FieldElement(f, std::move(prod));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.f_ || !b.f_) return a.is_zero() && b.is_zero();
    return a.c_ == b.c_;
}

bool repr_less(const FieldElement& a, const FieldElement& b) {
    std::size_t d = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < d; ++i) {
        Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
        Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
        if (x != y) return x < y;
    }
    return false;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder in Q[x]; both arguments trimmed, b nonzero.
void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Rational c = r.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back();
        qtrim(r);
    }
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    QPoly prod(q.empty() || b.empty() ? 0 : q.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += q[i] * b[j];
    QPoly r(std::max(a.size(), prod.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < prod.size(); ++i) r[i] -= prod[i];
    qtrim(r);
    return r;
}

}  // namespace

FieldElement FieldElement::inverse() const {
    if (!f_ || is_zero()) fail(ErrorKind::DomainError, "inverse of zero");
    const int d = f_->degree();
    if (d == 1) return FieldElement(f_, {1 / c_[0]});
    // Extended Euclid: s*a + t*m = g, with g a nonzero constant since m is irreducible.
    QPoly m(f_->min_poly().begin(), f_->min_poly().end());
    QPoly a = c_;
    qtrim(a);
    QPoly r0 = m, r1 = a, s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s = qsub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational g = r1[0];
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / g;
    return FieldElement(f_, std::move(out));
}

double FieldElement::to_double() const {
    if (!f_) return 0.0;
    double v = 0;
    const auto& tp = f_->theta_powers();
    for (std::size_t i = 0; i < c_.size(); ++i) v += c_[i].get_d() * tp[i];
    return v;
}

int FieldElement::sign() const { return sign_of(*this); }

std::vector<std::string> FieldElement::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : c_) out.push_back(rational_string(c));
    return out;
}

std::string FieldElement::str() const {
    if (!f_ || is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i == 1) os << "*th";
        if (i > 1) os << "*th^" << i;
    }
    return os.str();
}

namespace {

struct Interval {
    Rational lo, hi;
};

// Horner evaluation of sum c_i x^i for x in [a, b] with 0 < a <= b.
Interval eval_interval(const std::vector<Rational>& c, const Rational& a, const Rational& b) {
    Interval v{c.back(), c.back()};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        Interval w;
        if (v.lo >= 0) {
            w.lo = v.lo * a;
            w.hi = v.hi * b;
        } else if (v.hi <= 0) {
            w.lo = v.lo * b;
            w.hi = v.hi * a;
        } else {
            w.lo = v.lo * b;
            w.hi = v.hi * b;
        }
        w.lo += c[k];
        w.hi += c[k];
        v = std::move(w);
    }
    return v;
}

}  // namespace

int sign_of(const FieldElement& e) {
    const FieldDescriptor* f = e.field();
    if (!f || e.is_zero()) return 0;
    const auto& c = e.coeffs();
    if (f->degree() == 1 || e.is_rational()) return sgn(c[0]);

    // Floating filter with a conservative rounding bound.
    const auto& tp = f->theta_powers();
    double s = 0, mag = 0;
    bool finite = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        double ci = c[i].get_d();
        if (!std::isfinite(ci)) {
            finite = false;
            break;
        }
        s += ci * tp[i];
        mag += std::fabs(ci) * tp[i];
    }
    if (finite) {
        double bound = mag * (4.0 * c.size() + 8.0) * 1.2e-16 + 1e-290;
        if (s > bound) return 1;
        if (s < -bound) return -1;
    }

    // Exact refinement on a shrinking rational isolating interval for theta.
    Rational lo = f->isolating_lo(), hi = f->isolating_hi();
    const auto& mp = f->min_poly();
    int slo = sgn(eval_int_poly(mp, lo));
    for (int it = 0; it < 100000; ++it) {
        Interval v = eval_interval(c, lo, hi);
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
        Rational mid = (lo + hi) / 2;
        int sm = sgn(eval_int_poly(mp, mid));
        if (sm == 0) {
            // theta would be rational; only possible for degree 1, handled above.
            Rational val = 0;
            for (std::size_t k = c.size(); k-- > 0;) val = val * mid + c[k];
            return sgn(val);
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    fail(ErrorKind::DomainError, "sign refinement did not terminate");
}

// ---------------------------------------------------------------------------

FieldElement two_t(const Field& f) {
    if (f->cyclotomic()) {
        FieldElement th = FieldElement::theta(f);
        return th * th - FieldElement::from_int(f, 2);
    }
    return FieldElement::from_rational(f, f->t() + 1 / f->t());
}

FieldElement t_number(const Field& f, long k) {
    if (k < 0) fail(ErrorKind::InvalidParameter, "t_number with negative argument");
    if (k == 0) return FieldElement(f);
    FieldElement prev(f), cur = FieldElement::from_int(f, 1);
    FieldElement s = two_t(f);
    for (long j = 1; j < k; ++j) {
        FieldElement next = s * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FieldElement t_factorial(const Field& f, long k) {
    if (k < 0) fail(ErrorKind::InvalidParameter, "t_factorial with negative argument");
    FieldElement r = FieldElement::from_int(f, 1);
    for (long j = 2; j <= k; ++j) r *= t_number(f, j);
    return r;
}

FieldElement t_power_sum(const Field& f, long k) {
    if (k < 0) k = -k;
    if (f->cyclotomic()) return two_cos_pi_2n(f, 2 * k);
    Rational tk = 1;
    for (long i = 0; i < k; ++i) tk *= f->t();
    return FieldElement::from_rational(f, tk + 1 / tk);
}

FieldElement q_number(const Field& f, long k) {
    if (k < 0) fail(ErrorKind::InvalidParameter, "q_number with negative argument");
    if (k == 0) return FieldElement(f);
    FieldElement step;
    if (f->cyclotomic()) {
        step = FieldElement::theta(f);
    } else if (f->q()) {
        step = FieldElement::from_rational(f, *f->q() + 1 / *f->q());
    } else {
        if (k % 2 == 1) return t_number(f, k / 2 + 1) + t_number(f, k / 2);
        fail(ErrorKind::UnsupportedMode, "even q-number needs t to be a rational square");
    }
    FieldElement prev(f), cur = FieldElement::from_int(f, 1);
    for (long j = 1; j < k; ++j) {
        FieldElement next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FieldElement two_cos_pi_2n(const Field& f, long j) {
    if (!f->cyclotomic()) fail(ErrorKind::UnsupportedMode, "trigonometric values need cyclotomic mode");
    const long period = 4L * f->n();
    j %= period;
    if (j < 0) j += period;
    if (j > period / 2) j = period - j;
    FieldElement prev = FieldElement::from_int(f, 2);
    if (j == 0) return prev;
    FieldElement th = FieldElement::theta(f);
    FieldElement cur = th;
    for (long i = 1; i < j; ++i) {
        FieldElement next = th * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FieldElement cos_pi_2n(const Field& f, long j) { return two_cos_pi_2n(f, j) * Rational(1, 2); }

FieldElement sin_pi_2n(const Field& f, long j) { return cos_pi_2n(f, static_cast<long>(f->n()) - j); }

// ---------------------------------------------------------------------------

Integer LaurentPoly::at(long e) const {
    if (e < low || e > high()) return 0;
    return coeffs[e - low];
}

namespace {

LaurentPoly shifted_sum(const LaurentPoly& a, long sa, const LaurentPoly& b, long sb) {
    // t^sa * a + t^sb * b
    bool ea = a.coeffs.empty(), eb = b.coeffs.empty();
    if (ea && eb) return LaurentPoly{};
    long lo = std::min(ea ? b.low + sb : a.low + sa, eb ? a.low + sa : b.low + sb);
    long hi = std::max(ea ? b.high() + sb : a.high() + sa, eb ? a.high() + sa : b.high() + sb);
    LaurentPoly r;
    r.low = lo;
    r.coeffs.assign(hi - lo + 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.low + sa + i - lo] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.low + sb + i - lo] += b.coeffs[i];
    return r;
}

// Rows 0..max_m of the Gaussian binomial triangle.
std::vector<std::vector<LaurentPoly>> laurent_triangle(long max_m) {
    std::vector<std::vector<LaurentPoly>> rows;
    rows.push_back({LaurentPoly{0, {Integer(1)}}});
    for (long m = 1; m <= max_m; ++m) {
        std::vector<LaurentPoly> row(m + 1);
        for (long k = 0; k <= m; ++k) {
            LaurentPoly up = k <= m - 1 ? rows[m - 1][k] : LaurentPoly{};
            LaurentPoly left = k >= 1 ? rows[m - 1][k - 1] : LaurentPoly{};
            row[k] = shifted_sum(up, k, left, k - m);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

FieldElement laurent_to_field(const Field& f, const LaurentPoly& p, const std::vector<FieldElement>& power_sums) {
    FieldElement r(f);
    r += FieldElement::from_rational(f, Rational(p.at(0)));
    for (long e = 1; e <= p.high(); ++e) {
        Integer c = p.at(e);
        if (c == 0) continue;
        r += power_sums[e] * Rational(c);
    }
    return r;
}

std::vector<FieldElement> power_sum_table(const Field& f, long upto) {
    std::vector<FieldElement> ps;
    if (f->cyclotomic()) {
        // t^e + t^{-e} = 2cos(e*pi/n), periodic in e with period 2n.
        const long period = 2L * f->n();
        std::vector<FieldElement> base;
        for (long e = 0; e < std::min(upto + 1, period); ++e) base.push_back(two_cos_pi_2n(f, 2 * e));
        for (long e = 0; e <= upto; ++e) ps.push_back(base[e % period]);
    } else {
        Rational tk = 1;
        for (long e = 0; e <= upto; ++e) {
            ps.push_back(FieldElement::from_rational(f, tk + 1 / tk));
            tk *= f->t();
        }
    }
    return ps;
}

}  // namespace

LaurentPoly gaussian_binomial_laurent(long m, long k) {
    if (m < 0 || k < 0) fail(ErrorKind::InvalidParameter, "binomial with negative argument");
    if (k > m) return LaurentPoly{0, {Integer(0)}};
    return laurent_triangle(m)[m][k];
}

std::vector<Integer> binomial_in_two_t(long m, long k) {
    LaurentPoly p = gaussian_binomial_laurent(m, k);
    long top = std::max(0L, p.high());
    auto dk = dickson_polys(top);
    IntPoly r(top + 1, 0);
    r[0] += p.at(0);
    for (long e = 1; e <= top; ++e) {
        Integer c = p.at(e);
        if (c == 0) continue;
        for (std::size_t i = 0; i < dk[e].size(); ++i) r[i] += c * dk[e][i];
    }
    trim(r);
    return r;
}

FieldElement eval_in_two_t(const Field& f, const std::vector<Integer>& poly) {
    FieldElement s = two_t(f);
    FieldElement v(f);
    for (std::size_t k = poly.size(); k-- > 0;) v = v * s + FieldElement::from_rational(f, Rational(poly[k]));
    return v;
}

FieldElement t_binomial(const Field& f, long m, long k) {
    if (m < 0 || k < 0) fail(ErrorKind::InvalidParameter, "binomial with negative argument");
    if (k > m) return FieldElement(f);
    LaurentPoly p = gaussian_binomial_laurent(m, k);
    return laurent_to_field(f, p, power_sum_table(f, std::max(0L, p.high())));
}

TNumberTable::TNumberTable(const Field& f, long max_m) : max_m_(max_m), zero_(f) {
    if (max_m < 0) fail(ErrorKind::InvalidParameter, "negative table size");
    numbers_.push_back(FieldElement(f));
    if (max_m + 1 >= 1) numbers_.push_back(FieldElement::from_int(f, 1));
    FieldElement s = two_t(f);
    for (long k = 2; k <= max_m + 1; ++k) numbers_.push_back(s * numbers_[k - 1] - numbers_[k - 2]);
    auto tri = laurent_triangle(max_m);
    long top = 0;
    for (const auto& row : tri)
        for (const auto& p : row) top = std::max(top, p.high());
    auto ps = power_sum_table(f, top);
    binomials_.resize(max_m + 1);
    for (long m = 0; m <= max_m; ++m)
        for (long k = 0; k <= m; ++k) binomials_[m].push_back(laurent_to_field(f, tri[m][k], ps));
}

const FieldElement& TNumberTable::number(long k) const {
    if (k < 0 || k >= static_cast<long>(numbers_.size())) fail(ErrorKind::OutOfRange, "t-number index outside table");
    return numbers_[k];
}

const FieldElement& TNumberTable::binomial(long m, long k) const {
    if (m < 0 || k < 0) fail(ErrorKind::InvalidParameter, "binomial with negative argument");
    if (m > max_m_) fail(ErrorKind::OutOfRange, "binomial outside table");
    if (k > m) return zero_;
    return binomials_[m][k];
}

}  // namespace dihedral
