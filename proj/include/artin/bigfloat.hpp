#pragma once

#include <mpfr.h>

#include <string>

#include "artin/cyclotomic.hpp"
#include "artin/rational.hpp"

namespace artin {

// Arbitrary-precision real, round-to-nearest. Precision is the significand
// bit count, fixed per value and inherited by results (larger operand wins).
class BigFloat {
public:
    static constexpr unsigned kDefaultPrec = 64;

    explicit BigFloat(unsigned prec = kDefaultPrec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_double(double v, unsigned prec = kDefaultPrec);
    static BigFloat from_long(long v, unsigned prec = kDefaultPrec);
    static BigFloat from_rat(const Rat& q, unsigned prec = kDefaultPrec);
    static BigFloat pi(unsigned prec = kDefaultPrec);

    unsigned prec() const { return prec_; }
    double to_double() const;
    std::string str(int digits = 20) const;

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    bool operator<(const BigFloat& o) const;
    bool operator==(const BigFloat& o) const;

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat cos() const;
    BigFloat sin() const;
    BigFloat exp() const;
    BigFloat log() const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
    unsigned prec_;
};

// Complex value carrying a conservative absolute error bound on each part.
// The bound tracks rounding of every operation that produced the value; it is
// an overestimate, never an underestimate, as the embedding tests rely on.
struct ComplexApprox {
    BigFloat re, im;
    double err;  // absolute bound valid for both parts

    explicit ComplexApprox(unsigned prec = BigFloat::kDefaultPrec)
        : re(prec), im(prec), err(0.0) {}

    unsigned prec() const { return re.prec(); }
    ComplexApprox operator+(const ComplexApprox& o) const;
    ComplexApprox operator-(const ComplexApprox& o) const;
    ComplexApprox operator*(const ComplexApprox& o) const;
    ComplexApprox operator/(const ComplexApprox& o) const;  // throws on zero modulus bound
    double abs2_double() const;
    double dist_double(double re_v, double im_v) const;
    std::string str() const;
};

// evaluate at the principal primitive root: z_N -> exp(2 pi i / N)
ComplexApprox embed(const CycNum& a, unsigned prec = BigFloat::kDefaultPrec);

// q^{-s} for real q > 0 and complex s, with error bound
ComplexApprox power_negatives(double q, const ComplexApprox& s);

}  // namespace artin
