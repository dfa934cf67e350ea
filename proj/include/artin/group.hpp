#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "artin/matrix.hpp"

namespace artin {

using Elt = uint16_t;

// Finite group given by its full multiplication table. Element 0 is the
// identity; the constructor validates the identity row and column and that
// every element has a two-sided inverse.
class Group {
public:
    explicit Group(std::vector<std::vector<Elt>> table);

    size_t size() const { return table_.size(); }
    Elt mul(Elt a, Elt b) const { return table_[a][b]; }
    Elt inv(Elt a) const { return inv_[a]; }
    Elt power(Elt a, long k) const;
    // g x g^{-1}
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv_[g]); }

    unsigned element_order(Elt a) const;
    unsigned exponent() const;
    std::map<unsigned, size_t> order_histogram() const;
    bool is_abelian() const;
    std::vector<Elt> center() const;
    bool check_associativity() const;

    // Classes with ascending members, listed by (size, element order, least
    // member). The identity class always comes first.
    std::vector<std::vector<Elt>> conjugacy_classes() const;
    // element -> position in conjugacy_classes()
    std::vector<size_t> class_map(const std::vector<std::vector<Elt>>& classes) const;

    // smallest subgroup containing gens, ascending
    std::vector<Elt> closure(const std::vector<Elt>& gens) const;
    bool is_subgroup(const std::vector<Elt>& h) const;
    bool is_normal(const std::vector<Elt>& h) const;
    // every subgroup, found by closing the cyclic subgroups under pairwise
    // join; ordered by (order, members)
    std::vector<std::vector<Elt>> all_subgroups() const;
    // multiplication table of a subgroup on positions into h (h ascending)
    Group subgroup(const std::vector<Elt>& h) const;
    // left transversal of h, ascending least representatives
    std::vector<Elt> transversal(const std::vector<Elt>& h) const;

    struct Quotient;
    Quotient quotient(const std::vector<Elt>& normal) const;

private:
    std::vector<std::vector<Elt>> table_;
    std::vector<Elt> inv_;
};

struct Group::Quotient {
    Group group;
    std::vector<Elt> proj;                 // element -> coset index
    std::vector<std::vector<Elt>> cosets;  // indexed by coset, ascending members
};

Group cyclic_group(unsigned n);

// Closure of matrix generators under multiplication. Elements are indexed
// with the identity first, then breadth-first layers, each layer sorted by
// the entrywise matrix order, so the numbering is reproducible. words[k]
// holds (parent index, generator position) for one fixed derivation of
// element k; the identity has (-1, -1).
struct MatrixGroup {
    Group group;
    std::vector<Mat4> elems;
    std::vector<std::pair<int, int>> words;
    std::vector<Elt> gen_index;

    Elt find(const Mat4& m) const;  // throws if absent
};

MatrixGroup close_generators(const std::vector<Mat4>& gens, size_t cap);

}  // namespace artin
