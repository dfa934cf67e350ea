#pragma once
// Exact Euler local factors derived from character values, the classical
// product identities checked as exact polynomial equalities, and numeric
// partial Euler products driven by a per-prime Frobenius class source.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "artin/bigfloat.hpp"
#include "artin/character.hpp"
#include "artin/group.hpp"
#include "artin/matrix.hpp"
#include "artin/poly.hpp"

namespace artin {

// det(1 - g T) with exact cyclotomic coefficients, ascending in T.
// Constant coefficient 1; the degree equals the character degree.
struct LocalFactor {
    std::vector<CycNum> coeffs;

    size_t degree() const { return coeffs.size() - 1; }
    std::string str() const;
};

bool operator==(const LocalFactor& a, const LocalFactor& b);
inline bool operator!=(const LocalFactor& a, const LocalFactor& b) { return !(a == b); }

LocalFactor lf_one();
LocalFactor lf_mul(const LocalFactor& a, const LocalFactor& b);
LocalFactor lf_pow(const LocalFactor& a, unsigned long k);
// substitute T -> w T
LocalFactor lf_scale_t(const LocalFactor& a, const CycNum& w);

// Coefficients recovered from the power sums chi(c), chi(c^2), ... by
// Newton's identities; throws CheckFailed when chi(1) is not a non-negative
// integer, the detectable way a class function fails to be a character here.
LocalFactor local_factor(const Character& chi, size_t c);

// det(1 - m T) by evaluation at five scalar points and Lagrange
// interpolation; shares nothing with the Newton path, so the two
// implementations serve as mutual oracles.
LocalFactor det_one_minus_t(const Mat4& m);

// Outcome of one exact identity checked case by case; cases are conjugacy
// classes, or ascending primes for the Dirichlet cross check.
struct IdentityReport {
    std::string name;
    std::vector<bool> ok;
    long counterexample = -1;  // first failing case, -1 when none

    bool pass() const { return counterexample < 0; }
};

// factor(chi) = product over parts of factor(part) on every class
IdentityReport verify_direct_sum(const Character& chi, const std::vector<Character>& parts);

// Induction through an index five normal subgroup: h lists the subgroup
// ascending inside cd's group, lam is linear on the subgroup's own table
// indexed by position in h. Per class the factor of the induced character
// must equal the product over coset orbits of (1 - lam(orbit product) T^f),
// f the common orbit length.
IdentityReport verify_inductivity(const Character& lam, const std::vector<Elt>& h,
                                  const ClassData& cd);

// Regular representation factorization: per class of element order m the
// product over the table of factor^degree equals (1 - T^m)^{|G|/m}.
IdentityReport verify_dedekind(const ClassData& cd, const std::vector<Character>& table);

// Splitting shapes of the quintic against the five characters of the cyclic
// quotient: for every prime p <= bound whose reduction is squarefree, the
// shape-derived factor prod (1 - T^f) equals prod_j (1 - w^{j pos(p)} T)
// with w of order five; primes with a repeated factor are skipped and their
// entry stays true. One entry per prime, ascending. Requires bound >= 100.
IdentityReport dirichlet_cross_check(const PolyQ& quintic, uint64_t bound);

// ---- numeric partial products ----

// Candidate classes a Frobenius source assigns to one prime.
struct PrimeClasses {
    std::vector<size_t> candidates;
    bool skipped = false;
    std::string reason;
};

using ClassSource = std::function<PrimeClasses(uint64_t)>;

struct SkippedPrime {
    uint64_t p = 0;
    std::string reason;
};

struct PartialL {
    uint64_t bound = 0;
    ComplexApprox s;
    ComplexApprox value;
    uint64_t used = 0;
    std::vector<SkippedPrime> skipped;
};

// Product over ascending primes p <= bound of 1/factor(p^{-s}), restricted
// to primes whose candidate set is a single class; every other prime lands
// in skipped with its reason ("excluded", "ramified" or "ambiguous").
// Requires Re s > 1. Coefficients are embedded once per class at the given
// precision, so reruns are bit identical.
PartialL partial_l(const Character& chi, const ClassSource& source, double s_re, double s_im,
                   uint64_t bound, unsigned prec = BigFloat::kDefaultPrec);

// Bound on |log| of the omitted Euler tail past x for a factor of the given
// degree: 2 deg x^{1-sigma}/(sigma-1), valid since |log(1-t)| <= 2t on the
// range a prime power at sigma > 1 can reach.
double euler_tail_bound(unsigned deg, double sigma, uint64_t x);

// every prime -> the identity class, nothing skipped
ClassSource identity_source();
// singleton {cyclic_position(p)} on the classes of the order five cyclic
// group; multiples of eleven are ramified
ClassSource dirichlet_source();

// Candidate matrix-group classes for each orbit-model class, matched through
// the common order-80 quotient. The central classes stay paired by the sign
// ambiguity, the weight one and four vector classes land on the class of the
// least noncentral involution, the other vector classes keep both order-4
// classes, and the order 5 and 10 classes pair up by cyclic label.
struct ClassTransport {
    std::vector<std::vector<size_t>> candidates;  // orbit class -> matrix classes
};

// cd must belong to the standard order-160 matrix group
ClassTransport orbit_to_matrix_transport(const ClassData& cd);

// Frobenius source reading the orbit-model fingerprints of the column
// polynomials and transporting the candidates to matrix-group classes.
ClassSource matrix_class_source(const ClassTransport& transport, std::vector<PolyQ> column_polys);

}  // namespace artin
