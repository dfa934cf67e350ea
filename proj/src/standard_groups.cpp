#include "artin/standard_groups.hpp"

#include <array>

#include "artin/errors.hpp"

namespace artin {

namespace {

std::array<CycNum, 4> pauli_i() {
    CycNum o = CycNum::one(4), z = CycNum::zero(4);
    return {o, z, z, o};
}
std::array<CycNum, 4> pauli_x() {
    CycNum o = CycNum::one(4), z = CycNum::zero(4);
    return {z, o, o, z};
}
std::array<CycNum, 4> pauli_z() {
    CycNum o = CycNum::one(4), z = CycNum::zero(4);
    return {o, z, z, -o};
}

}  // namespace

std::vector<Mat4> phase_group_generators() {
    CycNum im = CycNum::root(4, 1);
    return {mat_scale(im, kron(pauli_x(), pauli_i())), mat_scale(im, kron(pauli_z(), pauli_i())),
            kron(pauli_i(), pauli_x()), kron(pauli_i(), pauli_z())};
}

std::vector<Mat4> tensor_group_generators() {
    return {kron(pauli_x(), pauli_i()), kron(pauli_z(), pauli_i()), kron(pauli_i(), pauli_x()),
            kron(pauli_i(), pauli_z())};
}

unsigned f2_apply(unsigned v, uint16_t m) {
    unsigned out = 0;
    for (unsigned c = 0; c < 4; ++c) {
        unsigned bit = 0;
        for (unsigned r = 0; r < 4; ++r) bit ^= (v >> r & 1) & (m >> (4 * r + c) & 1);
        out |= bit << c;
    }
    return out;
}

uint16_t f2_mul(uint16_t a, uint16_t b) {
    uint16_t out = 0;
    for (unsigned r = 0; r < 4; ++r) {
        unsigned row = f2_apply((a >> (4 * r)) & 0xf, b);
        out |= static_cast<uint16_t>(row << (4 * r));
    }
    return out;
}

unsigned squaring_form(unsigned v) {
    unsigned a1 = v & 1, a2 = v >> 1 & 1, a3 = v >> 2 & 1, a4 = v >> 3 & 1;
    return a1 ^ a2 ^ (a1 & a2) ^ (a3 & a4);
}

namespace {

constexpr uint16_t kF2Identity = 0x8421;  // bits 0, 5, 10, 15

uint16_t find_order5_isometry() {
    for (uint32_t bits = 0; bits < 0x10000; ++bits) {
        uint16_t a = static_cast<uint16_t>(bits);
        if (a == kF2Identity) continue;
        uint16_t p = a;
        for (int k = 1; k < 5; ++k) p = f2_mul(p, a);
        if (p != kF2Identity) continue;
        bool ok = true;
        for (unsigned v = 0; v < 16 && ok; ++v) ok = squaring_form(f2_apply(v, a)) == squaring_form(v);
        for (unsigned v = 1; v < 16 && ok; ++v) ok = f2_apply(v, a) != v;
        if (ok) return a;
    }
    throw CheckFailed("find_order5_isometry: no order-5 form-preserving bit matrix");
}

// s(v) = g1^{v1} g2^{v2} g3^{v3} g4^{v4} in that order
Mat4 section(unsigned v, const std::vector<Mat4>& gens) {
    Mat4 m = mat_identity(4);
    for (unsigned i = 0; i < 4; ++i)
        if (v >> i & 1) m = m * gens[i];
    return m;
}

struct Lift {
    unsigned signs;
    std::vector<Elt> sigma;     // permutation of e32
    std::vector<Mat4> images;   // generator images, order-4 entries
};

Lift find_order5_lift(const MatrixGroup& e32, const std::vector<Mat4>& gens, uint16_t a_bits) {
    const size_t n = e32.elems.size();
    for (unsigned signs = 0; signs < 16; ++signs) {
        std::vector<Mat4> img;
        for (unsigned i = 0; i < 4; ++i) {
            Mat4 m = section(f2_apply(1u << i, a_bits), gens);
            img.push_back(signs >> i & 1 ? -m : m);
        }
        std::vector<Mat4> smat(n, mat_identity(4));
        std::vector<Elt> sigma(n, 0);
        bool ok = true;
        for (size_t k = 1; k < n; ++k) {
            auto [p, gi] = e32.words[k];
            smat[k] = smat[static_cast<size_t>(p)] * img[static_cast<size_t>(gi)];
            try {
                sigma[k] = e32.find(smat[k]);
            } catch (const CheckFailed&) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (Elt x = 0; x < n && ok; ++x)
            for (Elt y = 0; y < n && ok; ++y)
                ok = sigma[e32.group.mul(x, y)] == e32.group.mul(sigma[x], sigma[y]);
        if (!ok) continue;
        std::vector<char> hit(n, 0);
        for (Elt x = 0; x < n; ++x) hit[sigma[x]] = 1;
        for (Elt x = 0; x < n && ok; ++x) ok = hit[x];
        if (!ok) continue;
        std::vector<Elt> p5(n);
        for (Elt x = 0; x < n; ++x) {
            Elt y = x;
            for (int k = 0; k < 5; ++k) y = sigma[y];
            p5[x] = y;
        }
        bool identity5 = true, trivial = true;
        for (Elt x = 0; x < n; ++x) {
            identity5 = identity5 && p5[x] == x;
            trivial = trivial && sigma[x] == x;
        }
        if (!identity5 || trivial) continue;
        return Lift{signs, std::move(sigma), std::move(img)};
    }
    throw CheckFailed("find_order5_lift: no sign pattern yields an order-5 automorphism");
}

// one-dimensional solution space of u gen_i = img_i u over the order-40
// field; returns the basis vector as a matrix
Mat4 solve_intertwiner(const std::vector<Mat4>& gens40, const std::vector<Mat4>& img40) {
    const unsigned kOrd = 40;
    std::vector<std::vector<CycNum>> rows;
    for (size_t i = 0; i < gens40.size(); ++i) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                std::vector<CycNum> eq(16, CycNum::zero(kOrd));
                for (int k = 0; k < 4; ++k) {
                    eq[static_cast<size_t>(4 * r + k)] =
                        eq[static_cast<size_t>(4 * r + k)] + gens40[i].at(k, c);
                    eq[static_cast<size_t>(4 * k + c)] =
                        eq[static_cast<size_t>(4 * k + c)] - img40[i].at(r, k);
                }
                rows.push_back(std::move(eq));
            }
    }
    size_t rank = 0;
    std::vector<int> pivot_of_col(16, -1);
    for (size_t col = 0; col < 16 && rank < rows.size(); ++col) {
        size_t p = rank;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        CycNum inv = rows[rank][col].inverse();
        for (size_t t = 0; t < 16; ++t) rows[rank][t] = rows[rank][t] * inv;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rank || rows[r2][col].is_zero()) continue;
            CycNum f = rows[r2][col];
            for (size_t t = 0; t < 16; ++t) rows[r2][t] = rows[r2][t] - f * rows[rank][t];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    check(rank == 15, "solve_intertwiner: solution space is not one-dimensional");
    int free_col = -1;
    for (int c = 0; c < 16; ++c)
        if (pivot_of_col[c] < 0) free_col = c;
    Mat4 u = mat_zero(kOrd);
    u.a[static_cast<size_t>(free_col)] = CycNum::one(kOrd);
    for (int c = 0; c < 16; ++c)
        if (pivot_of_col[c] >= 0)
            u.a[static_cast<size_t>(c)] =
                -rows[static_cast<size_t>(pivot_of_col[c])][static_cast<size_t>(free_col)];
    return u;
}

StandardPack build_pack() {
    std::vector<Mat4> gens = phase_group_generators();
    MatrixGroup e32 = close_generators(gens, 64);
    check(e32.elems.size() == 32, "build_pack: phase group has wrong order");

    uint16_t a_bits = find_order5_isometry();
    Lift lift = find_order5_lift(e32, gens, a_bits);

    std::vector<Mat4> gens40, img40;
    for (const Mat4& m : gens) gens40.push_back(mat_promoted(m, 40));
    for (const Mat4& m : lift.images) img40.push_back(mat_promoted(m, 40));
    Mat4 u0 = solve_intertwiner(gens40, img40);

    Mat4 u5 = mat_pow(u0, 5);
    CycNum c = u5.at(0, 0);
    check(!c.is_zero() && u5 == mat_scale(c, mat_identity(40)),
          "build_pack: fifth power of the intertwiner is not scalar");
    CycNum d = det(u0);
    Mat4 u = mat_scale(d * c.inverse(), u0);
    check(mat_pow(u, 5) == mat_identity(40), "build_pack: u does not have order 5");
    check(det(u) == CycNum::one(40), "build_pack: u does not have determinant 1");
    Mat4 uinv = mat_pow(u, 4);
    for (size_t i = 0; i < gens40.size(); ++i)
        check(u * gens40[i] * uinv == img40[i], "build_pack: u realizes the wrong automorphism");

    std::vector<Mat4> g_gens = gens40;
    g_gens.push_back(u);
    MatrixGroup g = close_generators(g_gens, 256);
    check(g.elems.size() == 160, "build_pack: extended group has wrong order");

    std::vector<Elt> e32_in_g;
    for (const Mat4& m : e32.elems) e32_in_g.push_back(g.find(mat_promoted(m, 40)));
    Elt minus_one_e32 = e32.find(-mat_identity(4));
    Elt minus_one_g = g.find(-mat_identity(40));

    auto q = g.group.quotient({0, minus_one_g});
    check(q.group.size() == 80, "build_pack: quotient has wrong order");

    return StandardPack{std::move(e32),
                        std::move(g),
                        std::move(q.group),
                        std::move(q.proj),
                        std::move(q.cosets),
                        u,
                        0,
                        minus_one_e32,
                        minus_one_g,
                        std::move(e32_in_g),
                        std::move(lift.sigma),
                        a_bits,
                        lift.signs};
}

}  // namespace

const StandardPack& standard_pack() {
    static StandardPack pack = [] {
        StandardPack p = build_pack();
        p.u_in_g = p.g.find(p.u);
        return p;
    }();
    return pack;
}

}  // namespace artin
