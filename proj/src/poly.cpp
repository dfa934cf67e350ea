#include "artin/poly.hpp"

#include <stdexcept>

#include "artin/errors.hpp"

namespace artin {

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::constant(const Rat& c) { return PolyQ(std::vector<Rat>{c}); }

PolyQ PolyQ::monomial(int degree, const Rat& c) {
    if (degree < 0) throw std::invalid_argument("PolyQ::monomial: negative degree");
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool PolyQ::is_integer() const {
    for (const Rat& q : c_)
        if (!rat_is_integer(q)) return false;
    return true;
}

const Rat& PolyQ::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& PolyQ::lead() const {
    if (c_.empty()) throw std::invalid_argument("PolyQ::lead: zero polynomial");
    return c_.back();
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (Rat& q : r.c_) q = -q;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const Rat& s) const {
    if (s == 0) return PolyQ();
    PolyQ r = *this;
    for (Rat& q : r.c_) q *= s;
    return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("PolyQ::divmod: zero divisor");
    PolyQ rem = *this;
    int dd = divisor.degree();
    if (rem.degree() < dd) return {PolyQ(), rem};
    std::vector<Rat> q(rem.degree() - dd + 1, Rat(0));
    const Rat& lc = divisor.lead();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rat factor = rem.lead() / lc;
        q[shift] = factor;
        // rem -= factor * x^shift * divisor
        std::vector<Rat> v = rem.c_;
        for (int i = 0; i <= dd; ++i) v[i + shift] -= factor * divisor.c_[i];
        rem = PolyQ(std::move(v));
    }
    return {PolyQ(std::move(q)), rem};
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return PolyQ();
    return *this * (Rat(1) / lead());
}

PolyQ PolyQ::derivative() const {
    if (degree() < 1) return PolyQ();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return PolyQ(std::move(v));
}

Rat PolyQ::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyQ PolyQ::inflate(int k) const {
    if (k < 1) throw std::invalid_argument("PolyQ::inflate: k must be positive");
    if (is_zero()) return PolyQ();
    std::vector<Rat> v(static_cast<size_t>(degree()) * k + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return PolyQ(std::move(v));
}

std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& q = c_[i];
        if (q == 0) continue;
        Rat a = q;
        if (!out.empty()) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool unit = (a == 1 && i > 0);
        if (!unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();  // renormalize each step to keep coefficients small
    }
    return a.monic();
}

bool poly_squarefree(const PolyQ& f) {
    if (f.degree() < 1) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace artin
