#include "artin/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"

namespace artin {

namespace {

using ZVec = std::vector<mpz_class>;

// x^n - 1 divided exactly by the product of cyclotomic polynomials of the
// proper divisors of n; all arithmetic over Z, quotients exact.
ZVec cyclo_coeffs(unsigned n) {
    static std::map<unsigned, ZVec> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZVec xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        ZVec phi_d = cyclo_coeffs(d);
        // exact division of xn by the monic phi_d
        int qd = static_cast<int>(xn.size() - phi_d.size());
        ZVec q(qd + 1, 0);
        ZVec rem = xn;
        for (int shift = qd; shift >= 0; --shift) {
            mpz_class f = rem[shift + phi_d.size() - 1];
            q[shift] = f;
            if (f == 0) continue;
            for (size_t i = 0; i < phi_d.size(); ++i) rem[shift + i] -= f * phi_d[i];
        }
        for (const mpz_class& r : rem)
            if (r != 0) throw CheckFailed("cyclotomic polynomial division not exact");
        xn = std::move(q);
    }
    cache[n] = xn;
    return xn;
}

struct Field {
    unsigned n = 1;
    unsigned phi = 1;
    ZVec modulus;                 // cyclotomic polynomial, degree phi
    std::vector<ZVec> power_row;  // power_row[e] = x^e mod modulus, e in [0, n)
    std::vector<unsigned> units;  // residues coprime to n, ascending
};

const Field& field(unsigned n) {
    static std::map<unsigned, Field> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    Field f;
    f.n = n;
    f.phi = euler_phi(n);
    f.modulus = cyclo_coeffs(n);
    f.power_row.resize(n == 1 ? 1 : n);
    ZVec cur(f.phi, 0);
    cur[0] = 1;
    f.power_row[0] = cur;
    for (unsigned e = 1; e < f.power_row.size(); ++e) {
        // multiply by x, reduce by the monic modulus
        mpz_class carry = cur[f.phi - 1];
        for (unsigned k = f.phi - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (carry != 0)
            for (unsigned k = 0; k < f.phi; ++k) cur[k] -= carry * f.modulus[k];
        f.power_row[e] = cur;
    }
    for (unsigned j = 0; j < n; ++j)
        if (std::gcd(j, n) == 1) f.units.push_back(j);
    if (n == 1) f.units = {0};
    return cache.emplace(n, std::move(f)).first->second;
}

}  // namespace

PolyQ cyclotomic_polynomial(unsigned n) {
    ZVec z = cyclo_coeffs(n);
    std::vector<Rat> v(z.size());
    for (size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i]);
    return PolyQ(std::move(v));
}

CycNum::CycNum(unsigned order) : n_(order), num_(field(order).phi, 0), den_(1) {}

CycNum CycNum::one(unsigned order) {
    CycNum r(order);
    r.num_[0] = 1;
    return r;
}

CycNum CycNum::from_rat(const Rat& q, unsigned order) {
    CycNum r(order);
    r.num_[0] = q.get_num();
    r.den_ = q.get_den();
    r.normalize();
    return r;
}

CycNum CycNum::from_int(long v, unsigned order) { return from_rat(Rat(v), order); }

CycNum CycNum::root(unsigned order, long power) {
    const Field& f = field(order);
    long e = power % static_cast<long>(order);
    if (e < 0) e += order;
    CycNum r(order);
    const ZVec& row = f.power_row[static_cast<unsigned>(e)];
    for (unsigned k = 0; k < f.phi; ++k) r.num_[k] = row[k];
    return r;
}

void CycNum::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (mpz_class& z : num_) z = -z;
    }
    mpz_class g = den_;
    for (const mpz_class& z : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (mpz_class& z : num_) z /= g;
    }
    bool zero = true;
    for (const mpz_class& z : num_)
        if (z != 0) { zero = false; break; }
    if (zero) den_ = 1;
}

std::vector<Rat> CycNum::coeffs() const {
    std::vector<Rat> out(num_.size());
    for (size_t k = 0; k < num_.size(); ++k) {
        out[k] = Rat(num_[k], den_);
        out[k].canonicalize();
    }
    return out;
}

bool CycNum::is_zero() const {
    for (const mpz_class& z : num_)
        if (z != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t k = 1; k < num_.size(); ++k)
        if (num_[k] != 0) return false;
    return true;
}

Rat CycNum::to_rat() const {
    if (!is_rational()) throw std::invalid_argument("CycNum::to_rat: value not rational");
    Rat q(num_[0], den_);
    q.canonicalize();
    return q;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (mpz_class& z : r.num_) z = -z;
    return r;
}

unsigned CycNum::common_order(const CycNum& a, const CycNum& b) {
    return std::lcm(a.n_, b.n_);
}

CycNum CycNum::operator+(const CycNum& o) const {
    unsigned m = common_order(*this, o);
    if (n_ != m) return promoted(m) + o;
    if (o.n_ != m) return *this + o.promoted(m);
    CycNum r(m);
    r.den_ = den_ * o.den_;
    for (size_t k = 0; k < num_.size(); ++k) r.num_[k] = num_[k] * o.den_ + o.num_[k] * den_;
    r.normalize();
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    unsigned m = common_order(*this, o);
    if (n_ != m) return promoted(m) * o;
    if (o.n_ != m) return *this * o.promoted(m);
    const Field& f = field(m);
    const unsigned phi = f.phi;
    // raw convolution, exponents then folded through the power table
    ZVec conv(2 * phi - 1, 0);
    for (unsigned i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.num_[j] == 0) continue;
            conv[i + j] += num_[i] * o.num_[j];
        }
    }
    CycNum r(m);
    for (unsigned k = 0; k < phi; ++k) r.num_[k] = conv[k];
    for (unsigned e = phi; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        const ZVec& row = f.power_row[e % m];
        for (unsigned k = 0; k < phi; ++k)
            if (row[k] != 0) r.num_[k] += conv[e] * row[k];
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("CycNum::inverse: zero has no inverse");
    // extended Euclid in Q[x] against the cyclotomic modulus
    PolyQ mod = cyclotomic_polynomial(n_);
    PolyQ a(coeffs());
    PolyQ r0 = mod, r1 = a;
    PolyQ s0, s1 = PolyQ::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        PolyQ s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw CheckFailed("CycNum::inverse: nonunit gcd with cyclotomic modulus");
    PolyQ inv = s0 * (Rat(1) / r0.coeff(0));
    CycNum r(n_);
    mpz_class lcm_den = 1;
    for (int i = 0; i <= inv.degree(); ++i)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), inv.coeff(i).get_den().get_mpz_t());
    r.den_ = lcm_den;
    for (int i = 0; i <= inv.degree(); ++i) {
        const Rat& c = inv.coeff(i);
        r.num_[i] = c.get_num() * (lcm_den / c.get_den());
    }
    r.normalize();
    return r;
}

bool CycNum::operator==(const CycNum& o) const { return cmp(*this, o) == 0; }

int CycNum::cmp(const CycNum& a, const CycNum& b) {
    unsigned m = common_order(a, b);
    if (a.n_ != m) return cmp(a.promoted(m), b);
    if (b.n_ != m) return cmp(a, b.promoted(m));
    for (size_t k = 0; k < a.num_.size(); ++k) {
        mpz_class lhs = a.num_[k] * b.den_;
        mpz_class rhs = b.num_[k] * a.den_;
        int c = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

CycNum CycNum::galois(long j) const {
    long jm = j % static_cast<long>(n_);
    if (jm < 0) jm += n_;
    if (n_ > 1 && std::gcd(static_cast<unsigned>(jm), n_) != 1)
        throw std::invalid_argument("CycNum::galois: exponent not coprime to order");
    const Field& f = field(n_);
    CycNum r(n_);
    r.den_ = den_;
    for (unsigned k = 0; k < f.phi; ++k) {
        if (num_[k] == 0) continue;
        const ZVec& row = f.power_row[(static_cast<unsigned long>(jm) * k) % n_];
        for (unsigned t = 0; t < f.phi; ++t)
            if (row[t] != 0) r.num_[t] += num_[k] * row[t];
    }
    r.normalize();
    return r;
}

CycNum CycNum::promoted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("CycNum::promoted: target order not a multiple");
    const Field& f = field(m);
    unsigned step = m / n_;
    CycNum r(m);
    r.den_ = den_;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        const ZVec& row = f.power_row[(k * step) % m];
        for (unsigned t = 0; t < f.phi; ++t)
            if (row[t] != 0) r.num_[t] += num_[k] * row[t];
    }
    r.normalize();
    return r;
}

std::optional<CycNum> CycNum::demoted(unsigned d) const {
    if (d == n_) return *this;
    if (d == 0 || n_ % d != 0) throw std::invalid_argument("CycNum::demoted: target order not a divisor");
    unsigned phi_d = field(d).phi;
    unsigned phi_n = field(n_).phi;
    // columns: the order-d power basis promoted into this field; solve for
    // rational coordinates by Gaussian elimination
    std::vector<std::vector<Rat>> mat(phi_n, std::vector<Rat>(phi_d + 1, Rat(0)));
    for (unsigned c = 0; c < phi_d; ++c) {
        CycNum basis = CycNum::root(d, c).promoted(n_);
        std::vector<Rat> col = basis.coeffs();
        for (unsigned r = 0; r < phi_n; ++r) mat[r][c] = col[r];
    }
    std::vector<Rat> rhs = coeffs();
    for (unsigned r = 0; r < phi_n; ++r) mat[r][phi_d] = rhs[r];

    unsigned row = 0;
    std::vector<int> pivot_col(phi_d, -1);
    for (unsigned c = 0; c < phi_d && row < phi_n; ++c) {
        unsigned p = row;
        while (p < phi_n && mat[p][c] == 0) ++p;
        if (p == phi_n) continue;
        std::swap(mat[p], mat[row]);
        Rat inv = Rat(1) / mat[row][c];
        for (unsigned t = c; t <= phi_d; ++t) mat[row][t] *= inv;
        for (unsigned r2 = 0; r2 < phi_n; ++r2) {
            if (r2 == row || mat[r2][c] == 0) continue;
            Rat f0 = mat[r2][c];
            for (unsigned t = c; t <= phi_d; ++t) mat[r2][t] -= f0 * mat[row][t];
        }
        pivot_col[c] = static_cast<int>(row);
        ++row;
    }
    for (unsigned r2 = row; r2 < phi_n; ++r2)
        if (mat[r2][phi_d] != 0) return std::nullopt;  // not in the subfield
    CycNum out(d);
    mpz_class lcm_den = 1;
    std::vector<Rat> sol(phi_d, Rat(0));
    for (unsigned c = 0; c < phi_d; ++c)
        if (pivot_col[c] >= 0) sol[c] = mat[static_cast<unsigned>(pivot_col[c])][phi_d];
    for (const Rat& q : sol) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
    out.den_ = lcm_den;
    for (unsigned c = 0; c < phi_d; ++c)
        out.num_[c] = sol[c].get_num() * (lcm_den / sol[c].get_den());
    out.normalize();
    return out;
}

std::optional<unsigned> CycNum::root_of_unity_order() const {
    // the roots of unity of the order-n field form the group of order
    // lcm(2, n), so odd orders must scan the doubled circle
    unsigned m = n_ % 2 == 0 ? n_ : 2 * n_;
    for (unsigned e = 0; e < m; ++e) {
        if (*this == CycNum::root(m, e)) {
            unsigned g = std::gcd(e, m);
            return e == 0 ? 1 : m / g;
        }
    }
    return std::nullopt;
}

std::string CycNum::str() const {
    std::string out = "(";
    std::vector<Rat> c = coeffs();
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!first) out += " + ";
        out += c[k].get_str();
        if (k > 0) out += "*z^" + std::to_string(k);
        first = false;
    }
    if (first) out += "0";
    out += ")@" + std::to_string(n_);
    return out;
}

CycNum eval_poly(const PolyQ& f, const CycNum& x) {
    CycNum acc = CycNum::zero(x.order());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * x + CycNum::from_rat(f.coeff(i), x.order());
    }
    return acc;
}

PolyQ minimal_polynomial(const CycNum& a) {
    const unsigned n = a.order();
    std::vector<CycNum> orbit;
    for (unsigned j = 0; j < n; ++j) {
        if (n > 1 && std::gcd(j, n) != 1) continue;
        if (n == 1 && j != 0) continue;
        CycNum im = a.galois(n == 1 ? 1 : static_cast<long>(j));
        bool seen = false;
        for (const CycNum& o : orbit)
            if (o == im) { seen = true; break; }
        if (!seen) orbit.push_back(im);
    }
    // expand prod (x - o_i) with cyclotomic coefficients
    std::vector<CycNum> poly{CycNum::one(n)};
    for (const CycNum& o : orbit) {
        std::vector<CycNum> next(poly.size() + 1, CycNum::zero(n));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * o;
        }
        poly = std::move(next);
    }
    std::vector<Rat> coeffs(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i].is_rational())
            throw CheckFailed("minimal_polynomial: orbit product has irrational coefficient");
        coeffs[i] = poly[i].to_rat();
    }
    return PolyQ(std::move(coeffs));
}

}  // namespace artin
