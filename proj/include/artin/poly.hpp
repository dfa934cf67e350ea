#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

// Dense univariate polynomial over Rat. Invariant: no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector and
// degree -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs);
    static PolyQ constant(const Rat& c);
    static PolyQ monomial(int degree, const Rat& c = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integer() const;  // every coefficient integral
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const;

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rat& s) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

    // quotient and remainder; divisor must be nonzero
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;
    PolyQ monic() const;
    PolyQ derivative() const;
    Rat eval(const Rat& x) const;
    // substitute x -> x^k
    PolyQ inflate(int k) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

PolyQ poly_gcd(PolyQ a, PolyQ b);  // monic gcd, or zero if both zero
bool poly_squarefree(const PolyQ& f);

}  // namespace artin
