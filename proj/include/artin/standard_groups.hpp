#pragma once

#include <cstdint>
#include <vector>

#include "artin/group.hpp"

namespace artin {

// The three groups the toolkit revolves around, realized concretely:
//
//   e32   order 32, the two-qubit phase group generated by
//         i(X x I), i(Z x I), I x X, I x Z, entries in the order-4 field
//   g     order 160, e32 extended by an order-5 determinant-1 matrix u
//         normalizing it, entries in the order-40 field
//   gbar  order 80, g modulo its center {I, -I}
//
// u is pinned down reproducibly: frattini_bits is the lexicographically
// least order-5 bit matrix preserving the squaring form on e32 modulo
// center, lift_signs the least sign pattern making the induced generator
// map a genuine order-5 automorphism, and u the unique (up to scalar)
// intertwiner for that automorphism, scaled so u^5 = I and det u = 1.
struct StandardPack {
    MatrixGroup e32;
    MatrixGroup g;
    Group gbar;
    std::vector<Elt> gbar_proj;                 // g element -> gbar element
    std::vector<std::vector<Elt>> gbar_cosets;  // gbar element -> its two members in g

    Mat4 u;
    Elt u_in_g;
    Elt minus_one_e32;
    Elt minus_one_g;
    std::vector<Elt> e32_in_g;   // e32 element -> the same matrix's index in g
    std::vector<Elt> sigma_e32;  // conjugation by u as a permutation of e32

    uint16_t frattini_bits;  // 4x4 bit matrix, row major, bit 4r+c
    unsigned lift_signs;     // bit i set: generator i maps to minus its image
};

// built once, then shared
const StandardPack& standard_pack();

std::vector<Mat4> phase_group_generators();  // the e32 generators above
std::vector<Mat4> tensor_group_generators(); // X x I, Z x I, I x X, I x Z

// row-vector conventions: v is a 4-bit row, bits low to high
unsigned f2_apply(unsigned v, uint16_t m);
uint16_t f2_mul(uint16_t a, uint16_t b);
unsigned squaring_form(unsigned v);  // exponent of -I in s(v)^2

}  // namespace artin
