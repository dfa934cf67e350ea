#include "artin/numberfield.hpp"

#include <algorithm>
#include <numeric>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"

namespace artin {

PolyQ reduce_mod(const PolyQ& value, const PolyQ& f) {
    check(f.is_monic(), "reduce_mod: modulus must be monic");
    return value.divmod(f).second;
}

PolyQ mul_mod(const PolyQ& a, const PolyQ& b, const PolyQ& f) {
    return reduce_mod(a * b, f);
}

PolyQ pow_mod(const PolyQ& a, unsigned k, const PolyQ& f) {
    PolyQ r = PolyQ::constant(Rat(1));
    PolyQ base = reduce_mod(a, f);
    while (k) {
        if (k & 1) r = mul_mod(r, base, f);
        base = mul_mod(base, base, f);
        k >>= 1;
    }
    return r;
}

PolyQ inverse_mod(const PolyQ& a, const PolyQ& f) {
    // extended Euclid on (f, a): maintain r = s * a mod f
    PolyQ r0 = f, r1 = reduce_mod(a, f);
    PolyQ s0 = PolyQ(), s1 = PolyQ::constant(Rat(1));
    if (r1.is_zero()) throw DivisionByZero("inverse_mod: zero element");
    while (!r1.is_zero()) {
        auto [q, rem] = r0.divmod(r1);
        r0 = r1;
        r1 = rem;
        PolyQ s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw DivisionByZero("inverse_mod: element is a zero divisor");
    return reduce_mod(s0 * PolyQ::constant(Rat(1) / r0.coeff(0)), f);
}

std::optional<std::vector<Rat>> RatSpan::insert(std::vector<Rat> v) {
    check(v.size() == width_, "RatSpan: width mismatch");
    std::vector<Rat> combo(inserted_ + 1, Rat(0));
    combo[inserted_] = 1;

    // process stored rows in ascending pivot order; each row is zero left of
    // its pivot, so one pass clears every pivot position of v
    std::vector<size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return pivots_[i] < pivots_[j]; });
    for (size_t i : order) {
        const Rat& c = v[pivots_[i]];
        if (c == 0) continue;
        Rat factor = c;
        for (size_t k = 0; k < width_; ++k) v[k] -= factor * rows_[i][k];
        for (size_t k = 0; k < combos_[i].size(); ++k) combo[k] -= factor * combos_[i][k];
    }

    size_t piv = width_;
    for (size_t k = 0; k < width_; ++k) {
        if (v[k] != 0) { piv = k; break; }
    }
    if (piv == width_) {
        // dependent: v_original = sum lambda_j * inserted_j
        std::vector<Rat> lambda(inserted_);
        for (size_t j = 0; j < inserted_; ++j) lambda[j] = -combo[j];
        ++inserted_;
        return lambda;
    }
    Rat lead = v[piv];
    for (Rat& q : v) q /= lead;
    for (Rat& q : combo) q /= lead;
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    ++inserted_;
    return std::nullopt;
}

PolyQ minimal_polynomial_mod(const PolyQ& a, const PolyQ& f) {
    const size_t n = static_cast<size_t>(f.degree());
    check(n > 0, "minimal_polynomial_mod: constant modulus");
    RatSpan span(n);
    PolyQ power = PolyQ::constant(Rat(1));
    PolyQ base = reduce_mod(a, f);
    for (size_t k = 0; k <= n; ++k) {
        std::vector<Rat> vec(n, Rat(0));
        for (int i = 0; i <= power.degree(); ++i) vec[static_cast<size_t>(i)] = power.coeff(i);
        if (auto dep = span.insert(std::move(vec))) {
            std::vector<Rat> coeffs(k + 1, Rat(0));
            for (size_t j = 0; j < k; ++j) coeffs[j] = -(*dep)[j];
            coeffs[k] = 1;
            return PolyQ(std::move(coeffs));
        }
        power = mul_mod(power, base, f);
    }
    throw CheckFailed("minimal_polynomial_mod: no dependency within the dimension");
}

Rat field_norm(const PolyQ& a, const PolyQ& f) {
    PolyQ m = minimal_polynomial_mod(a, f);
    int d = m.degree(), n = f.degree();
    check(d > 0 && n % d == 0, "field_norm: minimal polynomial degree must divide the field degree");
    Rat prod = m.coeff(0);
    if (d % 2 != 0) prod = -prod;  // product of the roots of a monic polynomial
    Rat norm(1);
    for (int i = 0; i < n / d; ++i) norm *= prod;
    return norm;
}

PolyQ base_quintic() {
    return PolyQ({Rat(1), Rat(3), Rat(-3), Rat(-4), Rat(1), Rat(1)});
}

PolyQ base_sigma(const PolyQ& a) {
    // substitute x -> x^2 - 2, then reduce
    const PolyQ f = base_quintic();
    const PolyQ image({Rat(-2), Rat(0), Rat(1)});
    PolyQ r;
    for (int i = a.degree(); i >= 0; --i) {
        r = reduce_mod(r * image + PolyQ::constant(a.coeff(i)), f);
    }
    return r;
}

PolyQ cos_multiple(unsigned k) {
    const PolyQ f = base_quintic();
    PolyQ prev = PolyQ::constant(Rat(2));
    PolyQ cur = PolyQ::monomial(1);
    if (k == 0) return prev;
    for (unsigned i = 1; i < k; ++i) {
        PolyQ next = reduce_mod(PolyQ::monomial(1) * cur - prev, f);
        prev = cur;
        cur = next;
    }
    return cur;
}

PolyQ radicand_a() {
    return reduce_mod(PolyQ::constant(Rat(3)) + cos_multiple(5), base_quintic());
}

PolyQ radicand_b() {
    const PolyQ f = base_quintic();
    PolyQ a1 = cos_multiple(1), a3 = cos_multiple(3);
    PolyQ a1sq = mul_mod(a1, a1, f);
    return reduce_mod(PolyQ::constant(Rat(1)) + a1sq + mul_mod(a1sq, mul_mod(a3, a3, f), f), f);
}

PolyQ radicand_c() {
    const PolyQ f = base_quintic();
    return reduce_mod(cos_multiple(2) + cos_multiple(4) + PolyQ::constant(Rat(4)), f);
}

std::vector<uint64_t> poly_mod(const PolyQ& g, uint64_t p) {
    check(p >= 2, "poly_mod: modulus must be at least 2");
    std::vector<uint64_t> out(static_cast<size_t>(g.degree()) + 1, 0);
    if (g.is_zero()) return {};
    for (int i = 0; i <= g.degree(); ++i) {
        const Rat& q = g.coeff(i);
        uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
        uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        check(den != 0, "poly_mod: denominator vanishes mod p");
        // inversion needs p prime only when a denominator is nontrivial
        uint64_t inv = den == 1 ? 1 : powmod_u64(den, p - 2, p);
        out[static_cast<size_t>(i)] = mulmod_u64(num, inv, p);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

uint64_t eval_poly_mod(const PolyQ& g, uint64_t x, uint64_t p) {
    auto c = poly_mod(g, p);
    uint64_t r = 0;
    for (size_t i = c.size(); i-- > 0;) r = (mulmod_u64(r, x % p, p) + c[i]) % p;
    return r;
}

int legendre_u64(uint64_t v, uint64_t p) {
    check(p > 2 && p % 2 == 1, "legendre_u64: p must be an odd prime");
    v %= p;
    if (v == 0) return 0;
    return powmod_u64(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

// F_2 row reduction over uint32 rows; returns true if the row was new rank
bool f2_absorb(std::vector<uint32_t>& basis, uint32_t row) {
    for (uint32_t b : basis) row = std::min(row, row ^ b);
    if (row == 0) return false;
    for (uint32_t& b : basis) b = std::min(b, b ^ row);
    basis.push_back(row);
    return true;
}

}  // namespace

SquareClassCertificate residue_rank_certificate(const std::vector<PolyQ>& family,
                                                const PolyQ& f,
                                                uint64_t prime_bound) {
    check(!family.empty() && family.size() <= 32, "residue probe: family size must be 1..32");
    SquareClassCertificate cert;
    cert.family_size = family.size();
    std::vector<uint32_t> basis;
    for (uint64_t p = 3; p <= prime_bound && !cert.complete(); p += 2) {
        if (!is_prime_u64(p)) continue;
        auto fp = poly_mod(f, p);
        if (fp.size() != static_cast<size_t>(f.degree()) + 1) continue;
        // only places where the reduction stays squarefree are trusted
        std::vector<uint64_t> roots;
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t v = 0;
            for (size_t i = fp.size(); i-- > 0;) v = (mulmod_u64(v, x, p) + fp[i]) % p;
            if (v == 0) roots.push_back(x);
        }
        if (roots.empty()) continue;
        auto df = fp;
        for (size_t i = 0; i + 1 < df.size(); ++i) df[i] = mulmod_u64(df[i + 1], i + 1, p);
        df.pop_back();
        bool squarefree = true;
        for (uint64_t r : roots) {
            uint64_t v = 0;
            for (size_t i = df.size(); i-- > 0;) v = (mulmod_u64(v, r, p) + df[i]) % p;
            if (v == 0) squarefree = false;
        }
        if (!squarefree) continue;
        for (uint64_t r : roots) {
            uint32_t row = 0;
            bool usable = true;
            for (size_t i = 0; i < family.size() && usable; ++i) {
                uint64_t v = eval_poly_mod(family[i], r, p);
                int ls = legendre_u64(v, p);
                if (ls == 0) usable = false;
                if (ls == -1) row |= (uint32_t{1} << i);
            }
            if (!usable) continue;
            if (f2_absorb(basis, row)) {
                cert.rank = static_cast<int>(basis.size());
                cert.place_primes.push_back(p);
                cert.place_roots.push_back(r);
                cert.rows.push_back(row);
                if (cert.complete()) break;
            }
        }
    }
    return cert;
}

std::vector<PolyQ> tower_square_class_family() {
    std::vector<PolyQ> fam;
    for (const PolyQ& x : {radicand_a(), radicand_b(), radicand_c()}) {
        PolyQ v = x;
        for (int k = 0; k < 5; ++k) {
            fam.push_back(v);
            v = base_sigma(v);
        }
    }
    fam.push_back(PolyQ::constant(Rat(-1)));
    return fam;
}

SquareClassCertificate certify_tower_square_classes() {
    SquareClassCertificate cert =
        residue_rank_certificate(tower_square_class_family(), base_quintic(), 10000);
    check(cert.complete(), "square class probe exhausted without reaching full rank");
    return cert;
}

}  // namespace artin
