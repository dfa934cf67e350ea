#pragma once
// Prime splitting data: factorization shapes of the tower polynomials mod p,
// coset fingerprint tables for a permutation model group, and the Chebotarev
// histogram comparing observed shapes against class densities.

#include <cstdint>
#include <string>
#include <vector>

#include "artin/group.hpp"
#include "artin/poly.hpp"

namespace artin {

// Factor-degree multiset of a polynomial mod p, degrees ascending. When the
// reduction has a repeated factor the flag is set and degrees lists the
// distinct factor degrees of the radical instead.
struct SplittingType {
    std::vector<int> degrees;
    bool ramified = false;

    bool operator==(const SplittingType& o) const = default;
    std::string str() const;  // "1,1,2" with a trailing "*" when ramified
};

// Distinct-degree factorization of f mod p; p must be prime and must not
// divide any coefficient denominator.
SplittingType split_prime(const PolyQ& f, uint64_t p);

// Residue degree of p in the quintic base field: 1 when p is +-1 mod 11,
// otherwise 5. Throws when 11 divides p.
int base_field_residue_degree(uint64_t p);

// Position of p in the cyclic quotient (Z/11)*/{+-1} written as a power of
// the class of 2, in 0..4. Throws when 11 divides p.
int cyclic_position(uint64_t p);

// Primes excluded from every matching pass: 2 and 5 interfere with the
// quadratic layers and the cyclic degree, 11 ramifies in the base field.
inline bool excluded_prime(uint64_t p) { return p == 2 || p == 5 || p == 11; }

// ---- coset fingerprints ----

// One row per conjugacy class: the cycle-type splitting shape each class
// induces on the cosets of every stabilizer column.
struct FingerprintTable {
    std::vector<std::vector<Elt>> classes;  // ascending members per class
    std::vector<size_t> class_of;           // element -> class index
    std::vector<std::string> columns;
    std::vector<std::vector<SplittingType>> rows;  // rows[class][column]
    std::vector<int> labels;                // per class, -1 until attached
    size_t group_order = 0;

    size_t class_size(size_t c) const { return classes[c].size(); }
    bool labeled() const;
};

// Cycle types of left multiplication on the cosets of each stabilizer.
FingerprintTable fingerprint_table(const Group& g,
                                   const std::vector<std::vector<Elt>>& stabilizers,
                                   const std::vector<std::string>& columns);

// Copies a per-element label onto classes; throws CheckFailed when a label
// is not constant on some class.
void attach_cyclic_labels(FingerprintTable& table, const std::vector<int>& element_label);

// ---- Frobenius candidates ----

struct FrobeniusReport {
    uint64_t p = 0;
    bool skipped = false;
    std::string skip_reason;  // "excluded" or "ramified"
    std::vector<SplittingType> observed;
    int cyclic_pos = -1;
    std::vector<size_t> raw_candidates;  // classes matching the observed shapes
    std::vector<size_t> candidates;      // refined by the cyclic label
};

// Matches the observed splitting shapes of the column polynomials at p
// against the table rows; the refined list is always a subset of the raw one.
FrobeniusReport frobenius_class(const FingerprintTable& table,
                                const std::vector<PolyQ>& column_polys, uint64_t p);

// ---- Chebotarev histogram ----

// A cell is a maximal set of classes sharing a fingerprint row and label,
// the finest resolution the observables can reach.
struct ChebotarevCell {
    std::string key;  // class indices joined with '+'
    std::vector<size_t> classes;
    double expected = 0;  // density: total class size / group order
    uint64_t count = 0;
};

struct ChebotarevReport {
    uint64_t bound = 0;
    uint64_t used = 0;
    std::vector<uint64_t> skipped;
    std::vector<ChebotarevCell> cells;
    double max_sigma = 0;  // worst binomial deviation across cells
};

ChebotarevReport chebotarev_histogram(const FingerprintTable& table,
                                      const std::vector<PolyQ>& column_polys,
                                      uint64_t bound);

// ---- the orbit closure model ----

// Group of order 160 acting on one Galois orbit of square roots: elements
// 32 j + v with v in F_2^5 a sign pattern and j a power of the base
// automorphism rotating the five roots. stab_base fixes the quintic field,
// stab_quad additionally fixes the first square root.
struct OrbitModel {
    Group gamma;
    std::vector<int> label_of;      // element -> j component
    std::vector<Elt> stab_base;     // (v, 0), index 5
    std::vector<Elt> stab_quad;     // (v, 0) with v_0 = 0, index 10
};

const OrbitModel& orbit_model();

// Fingerprint table of the orbit model over its two stabilizer columns,
// cyclic labels attached.
const FingerprintTable& orbit_table();

}  // namespace artin
