#include "artin/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin {

BigFloat::BigFloat(unsigned prec) : prec_(prec) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(x_, prec_);
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(x_, prec_);
    mpfr_swap(x_, o.x_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(x_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) {
        mpfr_swap(x_, o.x_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(x_); }

BigFloat BigFloat::from_double(double v, unsigned prec) {
    BigFloat r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long v, unsigned prec) {
    BigFloat r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rat(const Rat& q, unsigned prec) {
    BigFloat r(prec);
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(unsigned prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

double BigFloat::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

#define ARTIN_BF_BINOP(name, fn)                                  \
    BigFloat BigFloat::name(const BigFloat& o) const {            \
        BigFloat r(std::max(prec_, o.prec_));                     \
        fn(r.x_, x_, o.x_, MPFR_RNDN);                            \
        return r;                                                 \
    }
ARTIN_BF_BINOP(operator+, mpfr_add)
ARTIN_BF_BINOP(operator-, mpfr_sub)
ARTIN_BF_BINOP(operator*, mpfr_mul)
ARTIN_BF_BINOP(operator/, mpfr_div)
#undef ARTIN_BF_BINOP

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

bool BigFloat::operator<(const BigFloat& o) const { return mpfr_cmp(x_, o.x_) < 0; }
bool BigFloat::operator==(const BigFloat& o) const { return mpfr_cmp(x_, o.x_) == 0; }

#define ARTIN_BF_UNOP(name, fn)               \
    BigFloat BigFloat::name() const {         \
        BigFloat r(prec_);                    \
        fn(r.x_, x_, MPFR_RNDN);              \
        return r;                             \
    }
ARTIN_BF_UNOP(abs, mpfr_abs)
ARTIN_BF_UNOP(sqrt, mpfr_sqrt)
ARTIN_BF_UNOP(cos, mpfr_cos)
ARTIN_BF_UNOP(sin, mpfr_sin)
ARTIN_BF_UNOP(exp, mpfr_exp)
ARTIN_BF_UNOP(log, mpfr_log)
#undef ARTIN_BF_UNOP

namespace {

double mag(const BigFloat& v) {
    double d = std::fabs(v.to_double());
    return std::isfinite(d) ? d : 1e308;
}

double finite_or_huge(double d) { return std::isfinite(d) ? d : 1e308; }

// one rounding step at precision p contributes at most |v| * 2^{1-p}
double ulp_of(double magnitude, unsigned prec) {
    return magnitude * std::ldexp(1.0, 1 - static_cast<int>(prec));
}

}  // namespace

ComplexApprox ComplexApprox::operator+(const ComplexApprox& o) const {
    ComplexApprox r(std::max(prec(), o.prec()));
    r.re = re + o.re;
    r.im = im + o.im;
    r.err = err + o.err + ulp_of(std::max(mag(r.re), mag(r.im)), r.prec());
    return r;
}

ComplexApprox ComplexApprox::operator-(const ComplexApprox& o) const {
    ComplexApprox r(std::max(prec(), o.prec()));
    r.re = re - o.re;
    r.im = im - o.im;
    r.err = err + o.err + ulp_of(std::max(mag(r.re), mag(r.im)), r.prec());
    return r;
}

ComplexApprox ComplexApprox::operator*(const ComplexApprox& o) const {
    ComplexApprox r(std::max(prec(), o.prec()));
    r.re = re * o.re - im * o.im;
    r.im = re * o.im + im * o.re;
    double a = finite_or_huge(std::sqrt(abs2_double()));
    double b = finite_or_huge(std::sqrt(o.abs2_double()));
    // |d(uv)| <= |v||du| + |u||dv| + |du||dv| with |u| <= a + err, |v| <= b + o.err;
    // the inflation covers the double-precision slop in the magnitude estimates
    double prop = a * o.err + b * err + 3.0 * err * o.err;
    r.err = 1.000001 * prop + 6.0 * ulp_of(std::max(a * b + prop, 1e-300), r.prec());
    return r;
}

ComplexApprox ComplexApprox::operator/(const ComplexApprox& o) const {
    double b2 = o.abs2_double();
    double bmod = std::sqrt(b2);
    if (!(bmod > 2.0 * o.err))
        throw DivisionByZero("ComplexApprox: divisor not bounded away from zero");
    ComplexApprox r(std::max(prec(), o.prec()));
    BigFloat denom = o.re * o.re + o.im * o.im;
    r.re = (re * o.re + im * o.im) / denom;
    r.im = (im * o.re - re * o.im) / denom;
    double a = finite_or_huge(std::sqrt(abs2_double()));
    // u'/v' - u/v = (du * v - u * dv) / (v' * v) with |v'| = bmod and
    // bmod - o.err <= |v| <= bmod + o.err, |u| <= a + err; the guard above
    // keeps the denominator bound positive, and the inflation covers the
    // double-precision slop in the magnitude estimates
    double prop = (err * (bmod + o.err) + (a + err) * o.err) / (bmod * (bmod - o.err));
    r.err = 1.000001 * prop + 8.0 * ulp_of(std::max(a / bmod + prop, 1e-300), r.prec());
    return r;
}

double ComplexApprox::abs2_double() const {
    double a = re.to_double(), b = im.to_double();
    return a * a + b * b;
}

double ComplexApprox::dist_double(double re_v, double im_v) const {
    double a = re.to_double() - re_v, b = im.to_double() - im_v;
    return std::sqrt(a * a + b * b);
}

std::string ComplexApprox::str() const {
    return re.str() + (mpfr_sgn(im.raw()) < 0 ? " - " : " + ") + im.abs().str() + "i (err<=" +
           std::to_string(err) + ")";
}

ComplexApprox embed(const CycNum& a, unsigned prec) {
    const unsigned n = a.order();
    std::vector<Rat> c = a.coeffs();
    ComplexApprox acc(prec);
    BigFloat two_pi = BigFloat::pi(prec + 8) + BigFloat::pi(prec + 8);
    double total = 0.0;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        BigFloat angle = two_pi * BigFloat::from_long(static_cast<long>(k), prec + 8) /
                         BigFloat::from_long(static_cast<long>(n), prec + 8);
        BigFloat coeff = BigFloat::from_rat(c[k], prec);
        acc.re = acc.re + coeff * angle.cos();
        acc.im = acc.im + coeff * angle.sin();
        total += std::fabs(coeff.to_double());
    }
    // each term: coefficient exact, trig correct to ~1 ulp, plus the
    // accumulation; bound with a generous per-term constant
    acc.err = (total + 1.0) * 8.0 * std::ldexp(1.0, 1 - static_cast<int>(prec)) *
              static_cast<double>(c.size() + 1);
    return acc;
}

ComplexApprox power_negatives(double q, const ComplexApprox& s) {
    if (!(q > 0)) throw std::invalid_argument("power_negatives: base must be positive");
    unsigned prec = s.prec();
    BigFloat lq = BigFloat::from_double(q, prec).log();
    // q^{-s} = exp(-sigma ln q) * (cos(t ln q) - i sin(t ln q))
    BigFloat modulus = (-(s.re * lq)).exp();
    BigFloat phase = s.im * lq;
    ComplexApprox r(prec);
    r.re = modulus * phase.cos();
    r.im = -(modulus * phase.sin());
    double m = std::fabs(modulus.to_double());
    double lq_d = std::fabs(lq.to_double());
    r.err = m * (s.err * (lq_d + 1.0) * 4.0 + 16.0 * std::ldexp(1.0, 1 - static_cast<int>(prec)));
    return r;
}

}  // namespace artin
