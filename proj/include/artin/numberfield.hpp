#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/poly.hpp"
#include "artin/rational.hpp"

namespace artin {

// Absolute number field presented by a monic integer defining polynomial.
// Fields below the top of a tower also carry a relative presentation: the
// base field's label and a defining polynomial whose coefficients are
// elements of the base, written as polynomials in the base generator.
struct NumberField {
    std::string label;
    PolyQ defining_poly;
    int degree = 0;
    std::string base_label;
    std::vector<PolyQ> relative_poly;  // ascending degree, empty when absolute
    // primitive element = radical generator + shift * base generator
    int shift = 0;
};

// ---- arithmetic in Q[x]/(f), f monic ----

PolyQ reduce_mod(const PolyQ& value, const PolyQ& f);
PolyQ mul_mod(const PolyQ& a, const PolyQ& b, const PolyQ& f);
PolyQ pow_mod(const PolyQ& a, unsigned k, const PolyQ& f);
// throws DivisionByZero when a is not a unit mod f
PolyQ inverse_mod(const PolyQ& a, const PolyQ& f);
// monic minimal polynomial of a over Q; its degree is the dimension of Q[a]
PolyQ minimal_polynomial_mod(const PolyQ& a, const PolyQ& f);
// product of all conjugates of a, taken with multiplicity deg(f)/deg(minpoly)
Rat field_norm(const PolyQ& a, const PolyQ& f);

// Incremental row space over Q. insert() reduces the vector against the
// stored basis: an independent vector is absorbed and nullopt returned; a
// dependent one yields the coefficients expressing it in terms of the
// vectors inserted so far, in insertion order.
class RatSpan {
public:
    explicit RatSpan(size_t width) : width_(width) {}
    std::optional<std::vector<Rat>> insert(std::vector<Rat> v);
    size_t rank() const { return rows_.size(); }

private:
    size_t width_;
    size_t inserted_ = 0;
    std::vector<std::vector<Rat>> rows_;    // echelon, pivot 1
    std::vector<std::vector<Rat>> combos_;  // rows_[i] over inserted vectors
    std::vector<size_t> pivots_;
};

// ---- the degree-5 base field Q(alpha), alpha = 2 cos(2 pi / 11) ----

// x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1
PolyQ base_quintic();
// the Galois generator alpha -> alpha^2 - 2, applied to an element
PolyQ base_sigma(const PolyQ& a);
// 2 cos(2 pi k / 11) as a polynomial in alpha, reduced
PolyQ cos_multiple(unsigned k);

// the three quadratic radicands the tower is built from
PolyQ radicand_a();  // 3 + 2 cos(10 pi / 11), norm 89
PolyQ radicand_b();  // 1 + alpha^2 (1 + (2 cos(6 pi / 11))^2), norm 1627
PolyQ radicand_c();  // alpha^4 - 3 alpha^2 + 4, norm 373

// ---- residue computations at split places ----

// coefficients reduced mod p, ascending, length deg(f)+1; throws CheckFailed
// when a denominator vanishes mod p
std::vector<uint64_t> poly_mod(const PolyQ& g, uint64_t p);
uint64_t eval_poly_mod(const PolyQ& g, uint64_t x, uint64_t p);
// Legendre symbol, p an odd prime: +1 residue, -1 non-residue, 0 when p | v
int legendre_u64(uint64_t v, uint64_t p);

// Quadratic-residue fingerprint of a family of elements of Q[x]/(f) across
// split places of f, one F_2 row per place, bit i set when family[i] is a
// non-residue there. Any multiplicative relation among the classes modulo
// squares forces the same linear relation on every row, so reaching full
// rank proves the family independent in the square-class group.
struct SquareClassCertificate {
    size_t family_size = 0;
    int rank = 0;
    std::vector<uint64_t> place_primes;  // prime of each used place
    std::vector<uint64_t> place_roots;   // root of f mod that prime
    std::vector<uint32_t> rows;
    bool complete() const { return rank == static_cast<int>(family_size); }
};

// Deterministic probe: primes ascending, roots ascending; places where any
// family member vanishes are skipped; stops at full rank or the bound.
SquareClassCertificate residue_rank_certificate(const std::vector<PolyQ>& family,
                                                const PolyQ& f,
                                                uint64_t prime_bound = 10000);

// the sixteen classes under the tower: the five Galois conjugates of each
// radicand plus -1
std::vector<PolyQ> tower_square_class_family();
// full-rank certificate for the family above; throws CheckFailed if the
// probe cannot reach rank 16
SquareClassCertificate certify_tower_square_classes();

}  // namespace artin
