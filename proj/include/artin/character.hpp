#pragma once

#include <vector>

#include "artin/cyclotomic.hpp"
#include "artin/group.hpp"
#include "artin/rational.hpp"

namespace artin {

// Conjugacy class bookkeeping shared by every character on one group.
// Characters hold a pointer to the instance they were built from, so keep
// it alive as long as its characters and build one instance per group.
struct ClassData {
    const Group* group;
    std::vector<std::vector<Elt>> classes;
    std::vector<size_t> class_of;  // element -> class index
    std::vector<Elt> reps;         // class -> least member

    explicit ClassData(const Group& g);
    size_t size() const { return classes.size(); }
    // class of rep^k
    size_t power_class(size_t c, long k) const;
    size_t inverse_class(size_t c) const;
};

// Class function with one exact cyclotomic value per conjugacy class.
struct Character {
    const ClassData* cd = nullptr;
    std::vector<CycNum> values;

    const CycNum& at_class(size_t c) const { return values[c]; }
    const CycNum& at(Elt g) const { return values[cd->class_of[g]]; }
    CycNum degree() const { return values[0]; }
};

Character trivial_character(const ClassData& cd);
Character conj_character(const Character& chi);

Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
// pointwise product, the character of the tensor product
Character operator*(const Character& a, const Character& b);
bool operator==(const Character& a, const Character& b);
inline bool operator!=(const Character& a, const Character& b) { return !(a == b); }

// (1/|G|) sum over g of chi(g) conj(psi(g)); exact, throws on a
// non-rational result or mismatched class data
Rat inner(const Character& chi, const Character& psi);

Character exterior_square(const Character& chi);
Character symmetric_square(const Character& chi);

// (1/|G|) sum over g of chi(g^2)
Rat fs_indicator(const Character& chi);

// h lists the subgroup's elements ascending inside chi's group; hcd is the
// class data of the subgroup's own table, indexed by position in h
Character restrict_character(const Character& chi, const std::vector<Elt>& h, const ClassData& hcd);

// Frobenius formula; lam lives on the subgroup listed by h inside gcd's group
Character induce_character(const Character& lam, const std::vector<Elt>& h, const ClassData& gcd);

// elementary symmetric functions e_1..e_n recovered from power sums p_1..p_n
std::vector<CycNum> newton_elementary(const std::vector<CycNum>& power_sums);

// value of the determinant character, e_dim of the eigenvalues, per class
Character determinant_character(const Character& chi, unsigned dim);

// Complete list of irreducible characters with exact cyclotomic values,
// computed by Dixon's method modulo the least prime p = 1 mod exponent with
// p^2 > 4|G|, then lifted. Rows are sorted by degree, then value rows.
// Verifies row orthogonality and the degree sum before returning.
std::vector<Character> character_table(const ClassData& cd, size_t cap = 256);

}  // namespace artin
