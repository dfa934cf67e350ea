#pragma once
// Iterated square-root extensions of the real quintic field: exact algebra
// arithmetic, minimal polynomials by Krylov elimination, and the list of
// number fields the splitting tables run over.

#include <optional>
#include <string>
#include <vector>

#include "artin/numberfield.hpp"
#include "artin/poly.hpp"
#include "artin/rational.hpp"

namespace artin {

// Commutative Q-algebra B[s_1..s_k], B = Q[x]/(base), with each s_{j+1}^2
// prescribed as an element of the level below it. Elements are coordinate
// vectors of length deg(base) * 2^k in the basis x^i * prod_{j in mask} s_j,
// stored at index i + deg(base) * mask.
class TowerAlgebra {
public:
    // relations[j] is s_{j+1}^2, given over the first j radicals
    // (length deg(base) * 2^j)
    TowerAlgebra(PolyQ base, std::vector<std::vector<Rat>> relations);

    size_t dim() const { return dim_; }
    size_t levels() const { return rel_.size(); }
    const PolyQ& base() const { return base_; }

    std::vector<Rat> zero() const { return std::vector<Rat>(dim_, Rat(0)); }
    std::vector<Rat> one() const;
    std::vector<Rat> embed_base(const PolyQ& a) const;  // mask-0 block
    std::vector<Rat> radical(size_t j) const;           // s_{j+1}
    bool is_zero(const std::vector<Rat>& u) const;

    std::vector<Rat> add(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
    std::vector<Rat> sub(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
    std::vector<Rat> mul(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
    std::vector<Rat> scale(const Rat& c, const std::vector<Rat>& u) const;
    // m(u) with rational coefficients
    std::vector<Rat> eval(const PolyQ& m, const std::vector<Rat>& u) const;
    // m(u) with coefficients in the base field, acting through embed_base
    std::vector<Rat> eval_over_base(const std::vector<PolyQ>& m,
                                    const std::vector<Rat>& u) const;

private:
    std::vector<Rat> mul_rec(size_t level, const Rat* u, const Rat* v) const;

    PolyQ base_;
    size_t dim_ = 0;
    std::vector<std::vector<Rat>> rel_;
};

// ---- minimal polynomials by Krylov elimination ----

struct PrimitiveElement {
    PolyQ min_poly;              // monic, degree == algebra dimension
    int shift = 0;               // generator = seed + shift * x
    std::vector<Rat> generator;  // the shifted element itself
};

// Smallest shift c >= 0 such that seed + c * x generates the whole algebra
// over Q, with its minimal polynomial; the polynomial is required squarefree.
// Throws CheckFailed when no shift up to the cap works.
PrimitiveElement primitive_element(const TowerAlgebra& alg, const std::vector<Rat>& seed,
                                   int shift_cap = 16);

// Monic minimal polynomial of u over the base field, coefficients ascending.
std::vector<PolyQ> min_poly_over_base(const TowerAlgebra& alg, const std::vector<Rat>& u);

// ---- the fixed tower ----

// Presentation of one tower field: its defining algebra and the seed element
// whose (possibly shifted) powers span it.
struct TowerPresentation {
    TowerAlgebra algebra;
    std::vector<Rat> seed;
};

// Labels: "E" (the quintic), "EA"/"EB"/"EC" (one square root each),
// "K" and "M" (degree 40). Throws CheckFailed on any other label.
TowerPresentation tower_presentation(const std::string& label);

// All six fields with defining polynomials over Q and relative polynomials
// over E, validated monic, integral, and squarefree. Degrees 5, 10, 10, 10,
// 40, 40.
std::vector<NumberField> build_tower();

// ---- cache ----

// Versioned JSON snapshot of a built tower. load_tower returns nullopt on a
// missing file, malformed content, or a version tag it does not recognize.
void save_tower(const std::vector<NumberField>& fields, const std::string& path);
std::optional<std::vector<NumberField>> load_tower(const std::string& path);

}  // namespace artin
