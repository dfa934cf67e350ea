#include <doctest.h>

#include <set>

#include "artin/cyclotomic.hpp"
#include "artin/errors.hpp"
#include "artin/numberfield.hpp"

using namespace artin;

namespace {

PolyQ make(std::initializer_list<long> coeffs_low_to_high) {
    std::vector<Rat> v;
    for (long c : coeffs_low_to_high) v.emplace_back(c);
    return PolyQ(std::move(v));
}

PolyQ reversed_monic(const PolyQ& m) {
    std::vector<Rat> c;
    for (int i = m.degree(); i >= 0; --i) c.push_back(m.coeff(i));
    return PolyQ(std::move(c)).monic();
}

}  // namespace

TEST_CASE("the base quintic is the minimal polynomial of 2 cos(2 pi / 11)") {
    CycNum alpha = CycNum::root(11, 1) + CycNum::root(11, 10);
    CHECK(minimal_polynomial(alpha) == base_quintic());
}

TEST_CASE("cosine multiples follow the doubling recursion") {
    CHECK(cos_multiple(0) == make({2}));
    CHECK(cos_multiple(1) == make({0, 1}));
    CHECK(cos_multiple(2) == make({-2, 0, 1}));
    CHECK(cos_multiple(3) == make({0, -3, 0, 1}));
    CHECK(cos_multiple(4) == make({2, 0, -4, 0, 1}));
    CHECK(cos_multiple(5) == make({-1, 2, 3, -1, -1}));
    // the cyclotomic oracle agrees: each multiple evaluated at alpha is
    // z^k + z^-k
    CycNum alpha = CycNum::root(11, 1) + CycNum::root(11, 10);
    for (unsigned k = 0; k <= 5; ++k) {
        CHECK(eval_poly(cos_multiple(k), alpha) ==
              CycNum::root(11, k) + CycNum::root(11, 11 - k == 11 ? 0 : 11 - k));
    }
}

TEST_CASE("the Galois generator squares the angle and has order five") {
    const PolyQ f = base_quintic();
    PolyQ x = PolyQ::monomial(1);
    CHECK(base_sigma(x) == make({-2, 0, 1}));
    PolyQ v = x;
    for (int i = 0; i < 5; ++i) v = base_sigma(v);
    CHECK(v == x);
    // ring homomorphism on a sample pair
    PolyQ u = make({1, 2, 0, 1}), w = make({-3, 0, 5});
    CHECK(base_sigma(mul_mod(u, w, f)) == mul_mod(base_sigma(u), base_sigma(w), f));
}

TEST_CASE("radicands reduce to the frozen coordinates") {
    CHECK(radicand_a() == make({2, 2, 3, -1, -1}));
    CHECK(radicand_b() == make({1, 1, 5, -1, -1}));
    CHECK(radicand_c() == make({4, 0, -3, 0, 1}));
    // the third radicand is the sum of the squares of the first two cosines
    const PolyQ f = base_quintic();
    PolyQ a1 = cos_multiple(1), a2 = cos_multiple(2);
    CHECK(reduce_mod(mul_mod(a1, a1, f) + mul_mod(a2, a2, f), f) == radicand_c());
}

TEST_CASE("minimal polynomials of the radicands match the frozen quintics") {
    const PolyQ f = base_quintic();
    PolyQ ma = minimal_polynomial_mod(radicand_a(), f);
    PolyQ mb = minimal_polynomial_mod(radicand_b(), f);
    PolyQ mc = minimal_polynomial_mod(radicand_c(), f);
    CHECK(ma == make({-89, 210, -183, 74, -14, 1}));
    CHECK(mb == make({-1627, 2579, -1299, 285, -28, 1}));
    CHECK(mc == make({-373, 625, -401, 123, -18, 1}));
    // each radicand generates the whole field
    CHECK(ma.degree() == 5);
    CHECK(mb.degree() == 5);
    CHECK(mc.degree() == 5);
    // the cyclotomic oracle gives the same minimal polynomial independently
    CycNum alpha5 = CycNum::root(11, 5) + CycNum::root(11, 6);
    CHECK(minimal_polynomial(CycNum::from_int(3) + alpha5) == ma);
}

TEST_CASE("norms of the radicands are the frozen primes") {
    const PolyQ f = base_quintic();
    CHECK(field_norm(radicand_a(), f) == Rat(89));
    CHECK(field_norm(radicand_b(), f) == Rat(1627));
    CHECK(field_norm(radicand_c(), f) == Rat(373));
    CHECK(field_norm(PolyQ::constant(Rat(2)), f) == Rat(32));
    CHECK(field_norm(PolyQ::monomial(1), f) == Rat(-1));
}

TEST_CASE("conjugate radicands share the minimal polynomial") {
    const PolyQ f = base_quintic();
    PolyQ ma = minimal_polynomial_mod(radicand_a(), f);
    PolyQ v = radicand_a();
    for (int k = 0; k < 5; ++k) {
        CHECK(minimal_polynomial_mod(v, f) == ma);
        v = base_sigma(v);
    }
}

TEST_CASE("inversion multiplies back to one and reverses the resolvent") {
    const PolyQ f = base_quintic();
    for (const PolyQ& v : {radicand_a(), radicand_b(), radicand_c(), make({1, 1})}) {
        PolyQ inv = inverse_mod(v, f);
        CHECK(mul_mod(v, inv, f) == PolyQ::constant(Rat(1)));
    }
    // the inverse radicand's resolvent is the reversed polynomial, monic
    PolyQ ma = minimal_polynomial_mod(radicand_a(), f);
    PolyQ mi = minimal_polynomial_mod(inverse_mod(radicand_a(), f), f);
    CHECK(mi == reversed_monic(ma));
}

TEST_CASE("row space tracks dependencies with exact coefficients") {
    RatSpan span(3);
    CHECK(!span.insert({Rat(1), Rat(0), Rat(2)}).has_value());
    CHECK(!span.insert({Rat(0), Rat(1), Rat(-1)}).has_value());
    auto dep = span.insert({Rat(2), Rat(3), Rat(1)});
    REQUIRE(dep.has_value());
    CHECK((*dep)[0] == Rat(2));
    CHECK((*dep)[1] == Rat(3));
    CHECK(span.rank() == 2);
    CHECK(!span.insert({Rat(0), Rat(0), Rat(1)}).has_value());
    CHECK(span.rank() == 3);
}

TEST_CASE("residue helpers reduce rational coefficients") {
    PolyQ g({Rat(1, 2), Rat(3)});
    auto c = poly_mod(g, 7);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == 4);  // 1/2 = 4 mod 7
    CHECK(c[1] == 3);
    CHECK(eval_poly_mod(g, 2, 7) == 3);  // 4 + 6 = 10 = 3
    CHECK(legendre_u64(2, 7) == 1);
    CHECK(legendre_u64(3, 7) == -1);
    CHECK(legendre_u64(14, 7) == 0);
}

TEST_CASE("the sixteen tower square classes are independent") {
    auto fam = tower_square_class_family();
    REQUIRE(fam.size() == 16);
    SquareClassCertificate cert = certify_tower_square_classes();
    CHECK(cert.complete());
    CHECK(cert.rank == 16);
    CHECK(cert.place_primes.size() == 16);
    // the base quintic only has roots at primes that are +-1 mod 11
    for (uint64_t p : cert.place_primes) {
        CHECK((p % 11 == 1 || p % 11 == 10));
    }
    // deterministic: a second run reproduces the same places and rows
    SquareClassCertificate again = certify_tower_square_classes();
    CHECK(again.place_primes == cert.place_primes);
    CHECK(again.place_roots == cert.place_roots);
    CHECK(again.rows == cert.rows);
}

TEST_CASE("a multiplicatively dependent family stalls below full rank") {
    const PolyQ f = base_quintic();
    // replace the third orbit by the products of the first two: the probe
    // must see the forced relations and stop at rank 11
    std::vector<PolyQ> fam;
    PolyQ va = radicand_a(), vb = radicand_b();
    for (int k = 0; k < 5; ++k) {
        fam.push_back(va);
        va = base_sigma(va);
    }
    for (int k = 0; k < 5; ++k) {
        fam.push_back(vb);
        vb = base_sigma(vb);
    }
    va = radicand_a();
    vb = radicand_b();
    for (int k = 0; k < 5; ++k) {
        fam.push_back(mul_mod(va, vb, f));
        va = base_sigma(va);
        vb = base_sigma(vb);
    }
    fam.push_back(PolyQ::constant(Rat(-1)));
    SquareClassCertificate cert = residue_rank_certificate(fam, f, 10000);
    CHECK(!cert.complete());
    CHECK(cert.rank == 11);
}
