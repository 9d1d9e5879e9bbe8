#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dihedral/weyl.hpp"

namespace dihedral {

// Element of R-hat = R u {inf} with R = Z/modulus (Z/2 by default).
class PreRingCoeff {
public:
    PreRingCoeff() = default;
    static PreRingCoeff finite(long v, long modulus = 2);
    static PreRingCoeff infinity(long modulus = 2);
    static PreRingCoeff zero(long modulus = 2) { return finite(0, modulus); }
    static PreRingCoeff one(long modulus = 2) { return finite(1, modulus); }

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && value_ == 0; }
    long value() const { return value_; }
    long modulus() const { return modulus_; }
    std::string str() const;  // "0", "1", ..., "inf"

    // inf + inf is undefined and raises undefined-sum.
    friend PreRingCoeff operator+(const PreRingCoeff& a, const PreRingCoeff& b);
    friend PreRingCoeff operator*(const PreRingCoeff& a, const PreRingCoeff& b);
    friend bool operator==(const PreRingCoeff& a, const PreRingCoeff& b) = default;

private:
    bool inf_ = false;
    long value_ = 0;
    long modulus_ = 2;
};

// Sum where inf + inf = inf; used to accumulate terms of folded products.
PreRingCoeff saturating_add(const PreRingCoeff& a, const PreRingCoeff& b);

using PreRingVector = std::vector<PreRingCoeff>;

// H_*(X_l): basis C_0, ..., C_{n-1}; C_{n-1} is the unit.
class GrassmannPreRing {
public:
    explicit GrassmannPreRing(int n);
    int n() const { return n_; }
    PreRingVector zero() const { return PreRingVector(n_, PreRingCoeff::zero()); }
    PreRingVector basis(int r) const;
    PreRingVector mul_basis(int r1, int r2) const;
    // Strict bilinear product; raises undefined-sum if two infinite terms collide.
    PreRingVector mul(const PreRingVector& a, const PreRingVector& b) const;
    // Left-to-right product of generators with saturating accumulation.
    PreRingVector product(const std::vector<int>& rs) const;

private:
    PreRingVector mul_impl(const PreRingVector& a, const PreRingVector& b, bool saturate) const;
    int n_;
};

// H_*(X): basis C_w, w in W, with C_w = C_{l(w), side(w)}; C_1 is the point class
// and C_{w_o} is the unit.
class FlagPreRing {
public:
    explicit FlagPreRing(int n);
    int n() const { return group_.n(); }
    const DihedralGroup& group() const { return group_; }
    PreRingVector zero() const { return PreRingVector(group_.size(), PreRingCoeff::zero()); }
    PreRingVector basis(const WeylElement& w) const;
    // The class C_{r,l}; r = 0 and r = n ignore l.
    WeylElement cell(int r, int l) const;
    PreRingVector mul_basis(const WeylElement& u, const WeylElement& v) const;
    PreRingVector mul(const PreRingVector& a, const PreRingVector& b) const;
    PreRingVector product(const std::vector<WeylElement>& ws) const;
    WeylElement pd(const WeylElement& w) const { return group_.pd(w); }
    // Pull-back p_l^*: C_r -> C_{r+1,l}.
    PreRingVector pullback(const PreRingVector& a, int l) const;

private:
    PreRingVector mul_impl(const PreRingVector& a, const PreRingVector& b, bool saturate) const;
    DihedralGroup group_;
};

// Tuples (u_1, ..., u_m) whose flag product is a nonzero multiple of the point class.
std::vector<std::vector<WeylElement>> enumerate_sigma_Am(int n, int m, long budget = 2000000);

}  // namespace dihedral
