#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dihedral/errors.hpp"

namespace dihedral {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& r);

class FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

// Q(theta) with theta = 2cos(pi/2n), or Q with a rational parameter t > 0.
Field make_cyclotomic_field(int n);
Field make_hyperbolic_field(const Rational& t);

class FieldDescriptor {
public:
    bool cyclotomic() const { return n_ > 0; }
    int n() const { return n_; }
    const Rational& t() const { return t_; }
    int degree() const { return degree_; }
    // Monic, coefficients low to high. Hyperbolic mode: x - (t + 1/t).
    const std::vector<Integer>& min_poly() const { return min_poly_; }
    // nullopt stands for n_t = infinity.
    std::optional<int> n_t() const { return cyclotomic() ? std::optional<int>(n_) : std::nullopt; }
    double theta_value() const { return theta_; }
    // q = t^{1/2} when it is rational (hyperbolic mode only).
    const std::optional<Rational>& q() const { return q_; }

    const std::vector<double>& theta_powers() const { return theta_pow_; }
    const Rational& isolating_lo() const { return lo_; }
    const Rational& isolating_hi() const { return hi_; }

    std::string describe() const;

private:
    friend Field make_cyclotomic_field(int n);
    friend Field make_hyperbolic_field(const Rational& t);

    int n_ = 0;
    Rational t_;
    int degree_ = 1;
    std::vector<Integer> min_poly_;
    double theta_ = 0.0;
    std::vector<double> theta_pow_;
    Rational lo_, hi_;
    std::optional<Rational> q_;
};

// Coordinates in the power basis of theta, reduced modulo the minimal polynomial.
// A default-constructed element is an unbound zero that adopts the field of
// whatever it is combined with.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(const Field& f);
    FieldElement(const FieldDescriptor* f, std::vector<Rational> coeffs);

    static FieldElement from_rational(const Field& f, const Rational& r);
    static FieldElement from_int(const Field& f, long v) { return from_rational(f, Rational(v)); }
    // The generator theta; in hyperbolic mode theta = t + 1/t.
    static FieldElement theta(const Field& f);

    const FieldDescriptor* field() const { return f_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()
    int sign() const;
    double to_double() const;
    FieldElement inverse() const;
    FieldElement abs() const { return sign() < 0 ? -*this : *this; }

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator*=(const Rational& r);
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(FieldElement a, const Rational& r) { return a *= r; }
    friend FieldElement operator*(const Rational& r, FieldElement a) { return a *= r; }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // Total order on representations (not on real values); used for canonical sorting.
    friend bool repr_less(const FieldElement& a, const FieldElement& b);

    std::vector<std::string> to_strings() const;
    std::string str() const;

private:
    void bind(const FieldDescriptor* f);

    const FieldDescriptor* f_ = nullptr;
    std::vector<Rational> c_;
};

int sign_of(const FieldElement& e);
inline int compare(const FieldElement& a, const FieldElement& b) { return sign_of(a - b); }

// t-numbers and relatives. All of them are polynomials in [2]_t = t + 1/t.
FieldElement two_t(const Field& f);
FieldElement t_number(const Field& f, long k);
FieldElement t_factorial(const Field& f, long k);
FieldElement t_binomial(const Field& f, long m, long k);
// t^k + t^{-k}
FieldElement t_power_sum(const Field& f, long k);
FieldElement q_number(const Field& f, long k);

// 2cos(j*pi/2n), cos(j*pi/2n), sin(j*pi/2n) in the cyclotomic field.
FieldElement two_cos_pi_2n(const Field& f, long j);
FieldElement cos_pi_2n(const Field& f, long j);
FieldElement sin_pi_2n(const Field& f, long j);

// Symmetric Laurent polynomial in t with integer coefficients.
struct LaurentPoly {
    long low = 0;                 // exponent of coeffs[0]
    std::vector<Integer> coeffs;  // consecutive exponents low, low+1, ...
    Integer at(long e) const;
    long high() const { return low + static_cast<long>(coeffs.size()) - 1; }
};

// Gaussian binomial by the Pascal recursion [m,k] = t^k[m-1,k] + t^{k-m}[m-1,k-1].
LaurentPoly gaussian_binomial_laurent(long m, long k);
// The same binomial written as an integer polynomial in s = t + 1/t (low to high).
std::vector<Integer> binomial_in_two_t(long m, long k);
// Evaluate an integer polynomial in s at s = [2]_t.
FieldElement eval_in_two_t(const Field& f, const std::vector<Integer>& poly);

// Precomputed [k]_t and binomials for 0 <= k <= m <= max_m.
class TNumberTable {
public:
    TNumberTable(const Field& f, long max_m);
    const FieldElement& number(long k) const;
    const FieldElement& binomial(long m, long k) const;
    long max_m() const { return max_m_; }

private:
    long max_m_;
    std::vector<FieldElement> numbers_;
    std::vector<std::vector<FieldElement>> binomials_;
    FieldElement zero_;
};

}  // namespace dihedral
