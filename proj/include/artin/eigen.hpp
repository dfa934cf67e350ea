#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artin/character.hpp"
#include "artin/group.hpp"
#include "artin/matrix.hpp"

namespace artin {

// Four dimensional matrix realization of a group, one matrix per element.
// All eigenvalue machinery below assumes the matrices multiply like the
// group table; certify with rep_is_homomorphism when that is in doubt.
struct MatrixRep {
    const ClassData* cd = nullptr;
    std::vector<Mat4> mats;
};

MatrixRep rep_from_matrix_group(const MatrixGroup& mg, const ClassData& cd);
// multiply every matrix by the value of a degree one character
MatrixRep twist_rep(const MatrixRep& rep, const Character& linear);
MatrixRep restrict_rep(const MatrixRep& rep, const std::vector<Elt>& h, const ClassData& hcd);
// exact check of the multiplication table on all pairs; quadratic cost
bool rep_is_homomorphism(const MatrixRep& rep);

Character char_of_rep(const MatrixRep& rep);

// sorted multiset of the four eigenvalues, each a root of unity whose order
// divides the group exponent
using EigenMultiset = std::vector<CycNum>;

// Eigenvalues of rep at g, found by deflating the characteristic polynomial
// at every exponent-th root of unity. Throws if any root lies elsewhere.
EigenMultiset eigen_multiset(const MatrixRep& rep, Elt g);

// the six pairwise products s_i s_j with i < j, sorted
EigenMultiset pair_products(const EigenMultiset& s);
EigenMultiset power_multiset(const EigenMultiset& s, unsigned k);

// All ordered pairs (g, h) whose exterior square eigenvalues and fifth power
// eigenvalues both agree while the eigenvalue multisets differ. Empty means
// the two derived multisets pin the eigenvalues down.
std::vector<std::pair<Elt, Elt>> ambiguity_scan(const MatrixRep& rep);

struct SignFlipWitness {
    CycNum a, b, ratio;  // b = ratio * a with ratio of multiplicative order 10
    unsigned ratio_order;
};

// If -s differs from s as a multiset yet both have the same fifth power
// multiset, produce a pair inside s and its negation whose ratio has order
// ten. Returns nothing when the hypothesis fails.
std::optional<SignFlipWitness> sign_flip_witness(const EigenMultiset& s);

struct InvariantForm {
    Mat4 j;        // first nonzero entry normalized to one
    Character nu;  // similitude character: g^T j g = nu(g) j
};

// Solve g^T J g = nu(g) J over the given generators, trying each degree one
// character as nu; exactly one must leave a line of solutions. The returned
// form is certified antisymmetric, invertible, and invariant under every
// element of the group.
InvariantForm symplectic_form(const MatrixRep& rep, const std::vector<Character>& linears,
                              const std::vector<Elt>& gens);

}  // namespace artin
