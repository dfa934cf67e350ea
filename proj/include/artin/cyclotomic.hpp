#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "artin/poly.hpp"
#include "artin/rational.hpp"

namespace artin {

// Element of the cyclotomic field of a fixed order N, written on the power
// basis 1, z, ..., z^{phi(N)-1} with z a primitive N-th root of unity,
// reduced eagerly modulo the N-th cyclotomic polynomial.
//
// Storage is an integer numerator vector over a single positive denominator,
// normalized so gcd(content(num), den) = 1. That keeps multiplication an
// integer convolution and makes the coefficient sequence canonical, which the
// group-closure code relies on for deterministic ordering.
class CycNum {
public:
    CycNum() : CycNum(1) {}
    explicit CycNum(unsigned order);

    static CycNum zero(unsigned order) { return CycNum(order); }
    static CycNum one(unsigned order);
    static CycNum from_rat(const Rat& q, unsigned order = 1);
    static CycNum from_int(long v, unsigned order = 1);
    // z_order^power
    static CycNum root(unsigned order, long power = 1);

    unsigned order() const { return n_; }
    std::vector<Rat> coeffs() const;
    bool is_zero() const;
    bool is_rational() const;
    Rat to_rat() const;  // throws if not rational

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum inverse() const;  // throws DivisionByZero on zero
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    // total order after promotion to the common field; used for canonical
    // sorting, no arithmetic meaning
    static int cmp(const CycNum& a, const CycNum& b);

    // apply z -> z^j; requires gcd(j, order) = 1
    CycNum galois(long j) const;
    // complex conjugation z -> z^{-1}
    CycNum conj() const { return galois(static_cast<long>(n_) - 1); }
    // reinterpret in the order-M field, M a multiple of order
    CycNum promoted(unsigned m) const;
    // express in the order-D subfield if the value lies there, D | order
    std::optional<CycNum> demoted(unsigned d) const;

    // multiplicative order if this is a root of unity, otherwise nullopt
    std::optional<unsigned> root_of_unity_order() const;

    std::string str() const;

private:
    void normalize();
    static unsigned common_order(const CycNum& a, const CycNum& b);

    unsigned n_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

// monic rational polynomial with root a, degree = size of the Galois orbit
PolyQ minimal_polynomial(const CycNum& a);

// evaluate a rational polynomial at a cyclotomic point
CycNum eval_poly(const PolyQ& f, const CycNum& x);

// the N-th cyclotomic polynomial with integer coefficients
PolyQ cyclotomic_polynomial(unsigned n);

}  // namespace artin
