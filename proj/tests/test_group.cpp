#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "artin/errors.hpp"
#include "artin/group.hpp"
#include "artin/intutil.hpp"
#include "artin/standard_groups.hpp"

using namespace artin;

namespace {

std::vector<Elt> sorted_copy(std::vector<Elt> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<size_t> class_sizes(const std::vector<std::vector<Elt>>& classes) {
    std::vector<size_t> out;
    for (const auto& c : classes) out.push_back(c.size());
    return out;
}

std::vector<unsigned> class_orders(const Group& g, const std::vector<std::vector<Elt>>& classes) {
    std::vector<unsigned> out;
    for (const auto& c : classes) out.push_back(g.element_order(c.front()));
    return out;
}

std::map<unsigned, size_t> subgroup_order_counts(const std::vector<std::vector<Elt>>& subs) {
    std::map<unsigned, size_t> out;
    for (const auto& h : subs) ++out[static_cast<unsigned>(h.size())];
    return out;
}

// commutators x y x^{-1} y^{-1} generate the derived subgroup
std::vector<Elt> derived_subgroup(const Group& g) {
    std::set<Elt> comms;
    for (Elt x = 0; x < g.size(); ++x)
        for (Elt y = 0; y < g.size(); ++y)
            comms.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    return g.closure(std::vector<Elt>(comms.begin(), comms.end()));
}

// entrywise reduction of an order-40 matrix at z_40 -> w in F_p, p = 1 mod 40
struct ModEval {
    std::uint64_t p;
    std::uint64_t w;
    std::vector<std::uint64_t> wpow;

    explicit ModEval(std::uint64_t prime) : p(prime) {
        REQUIRE(p % 40 == 1);
        w = 0;
        for (std::uint64_t x = 2; x < p; ++x) {
            if (powmod_u64(x, 40, p) == 1 && powmod_u64(x, 20, p) != 1 && powmod_u64(x, 8, p) != 1) {
                w = x;
                break;
            }
        }
        REQUIRE(w != 0);
        wpow.resize(16);
        for (unsigned k = 0; k < 16; ++k) wpow[k] = powmod_u64(w, k, p);
    }

    std::uint64_t rat(const Rat& q) const {
        mpz_class num = q.get_num(), den = q.get_den();
        std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p));
        std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
        REQUIRE(d != 0);
        return mulmod_u64(n, powmod_u64(d, p - 2, p), p);
    }

    std::array<std::uint64_t, 16> mat(const Mat4& m) const {
        std::array<std::uint64_t, 16> out{};
        for (int k = 0; k < 16; ++k) {
            const auto coeffs = m.a[static_cast<size_t>(k)].coeffs();
            REQUIRE(coeffs.size() == 16);
            std::uint64_t acc = 0;
            for (unsigned j = 0; j < 16; ++j) acc = (acc + mulmod_u64(rat(coeffs[j]), wpow[j], p)) % p;
            out[static_cast<size_t>(k)] = acc;
        }
        return out;
    }
};

}  // namespace

TEST_CASE("cyclic group tables") {
    Group c12 = cyclic_group(12);
    CHECK(c12.size() == 12);
    CHECK(c12.is_abelian());
    CHECK(c12.exponent() == 12);
    CHECK(c12.check_associativity());
    std::map<unsigned, size_t> expected{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}};
    CHECK(c12.order_histogram() == expected);
    CHECK(c12.conjugacy_classes().size() == 12);
    CHECK(c12.all_subgroups().size() == 6);
    CHECK(c12.center().size() == 12);
    CHECK(c12.power(1, 7) == 7);
    CHECK(c12.power(5, -1) == c12.inv(5));
}

TEST_CASE("group table validation rejects a missing inverse") {
    std::vector<std::vector<Elt>> bad{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(Group(std::move(bad)), CheckFailed);
}

TEST_CASE("phase generator relations") {
    auto gens = phase_group_generators();
    REQUIRE(gens.size() == 4);
    Mat4 id = mat_identity(4);
    Mat4 neg = -id;
    CHECK(gens[0] * gens[0] == neg);
    CHECK(gens[1] * gens[1] == neg);
    CHECK(gens[2] * gens[2] == id);
    CHECK(gens[3] * gens[3] == id);
    // same-qubit pairs anticommute, cross-qubit pairs commute
    CHECK(gens[0] * gens[1] == -(gens[1] * gens[0]));
    CHECK(gens[2] * gens[3] == -(gens[3] * gens[2]));
    CHECK(gens[0] * gens[2] == gens[2] * gens[0]);
    CHECK(gens[0] * gens[3] == gens[3] * gens[0]);
    CHECK(gens[1] * gens[2] == gens[2] * gens[1]);
    CHECK(gens[1] * gens[3] == gens[3] * gens[1]);
    for (const auto& m : gens) CHECK(det(m) == CycNum::one(4));
}

TEST_CASE("phase group closure") {
    const auto& pack = standard_pack();
    const auto& e32 = pack.e32;
    REQUIRE(e32.elems.size() == 32);
    CHECK(e32.group.check_associativity());
    std::map<unsigned, size_t> expected{{1, 1}, {2, 11}, {4, 20}};
    CHECK(e32.group.order_histogram() == expected);
    CHECK(e32.group.exponent() == 4);
    CHECK_FALSE(e32.group.is_abelian());

    CHECK(e32.elems[pack.minus_one_e32] == -mat_identity(4));
    CHECK(e32.group.center() == std::vector<Elt>{0, pack.minus_one_e32});

    auto classes = e32.group.conjugacy_classes();
    REQUIRE(classes.size() == 17);
    std::vector<size_t> sizes{1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2};
    CHECK(class_sizes(classes) == sizes);
    std::vector<unsigned> orders{1, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4};
    CHECK(class_orders(e32.group, classes) == orders);
    // noncentral classes are the sign pairs {m, -m}
    for (size_t k = 2; k < classes.size(); ++k) {
        Elt a = classes[k][0], b = classes[k][1];
        CHECK(e32.group.mul(pack.minus_one_e32, a) == b);
    }

    auto cmap = e32.group.class_map(classes);
    for (size_t k = 0; k < classes.size(); ++k)
        for (Elt x : classes[k]) CHECK(cmap[x] == k);
}

TEST_CASE("phase group multiplication table matches matrix products") {
    const auto& e32 = standard_pack().e32;
    for (Elt i = 0; i < 32; ++i)
        for (Elt j = 0; j < 32; ++j)
            CHECK(e32.elems[i] * e32.elems[j] == e32.elems[e32.group.mul(i, j)]);
}

TEST_CASE("closure numbering is reproducible") {
    const auto& pack = standard_pack();
    auto again = close_generators(phase_group_generators(), 64);
    REQUIRE(again.elems.size() == pack.e32.elems.size());
    for (size_t k = 0; k < again.elems.size(); ++k) CHECK(again.elems[k] == pack.e32.elems[k]);

    auto gens = phase_group_generators();
    REQUIRE(pack.e32.gen_index.size() == 4);
    for (size_t i = 0; i < gens.size(); ++i) CHECK(pack.e32.elems[pack.e32.gen_index[i]] == gens[i]);
    for (size_t k = 1; k < pack.e32.elems.size(); ++k) {
        auto [parent, gi] = pack.e32.words[k];
        REQUIRE(parent >= 0);
        CHECK(pack.e32.elems[k] == pack.e32.elems[static_cast<size_t>(parent)] * gens[static_cast<size_t>(gi)]);
    }
}

TEST_CASE("closure cap overflow throws") {
    CHECK_THROWS_AS(close_generators(phase_group_generators(), 16), ClosureOverflow);
}

TEST_CASE("find rejects a matrix outside the group") {
    const auto& e32 = standard_pack().e32;
    Mat4 two = mat_scale(CycNum::from_int(2, 4), mat_identity(4));
    CHECK_THROWS_AS(e32.find(two), CheckFailed);
}

TEST_CASE("unsigned tensor generators close to the other order-32 type") {
    auto plus = close_generators(tensor_group_generators(), 64);
    REQUIRE(plus.elems.size() == 32);
    std::map<unsigned, size_t> expected{{1, 1}, {2, 19}, {4, 12}};
    CHECK(plus.group.order_histogram() == expected);
}

TEST_CASE("squaring form is the five-singular-vector type") {
    const auto& e32 = standard_pack().e32;
    auto gens = phase_group_generators();
    unsigned singular = 0;
    for (unsigned v = 1; v < 16; ++v)
        if (squaring_form(v) == 0) ++singular;
    CHECK(singular == 5);
    // the form reads off the square of the ordered generator section
    for (unsigned v = 0; v < 16; ++v) {
        Mat4 s = mat_identity(4);
        for (unsigned i = 0; i < 4; ++i)
            if (v & (1u << i)) s = s * gens[i];
        Mat4 sq = s * s;
        if (squaring_form(v) == 0)
            CHECK(sq == mat_identity(4));
        else
            CHECK(sq == -mat_identity(4));
    }
    (void)e32;
}

TEST_CASE("frattini bit matrix is the least order-5 form isometry") {
    const auto& pack = standard_pack();
    const uint16_t id = 0x8421;
    CHECK(f2_mul(pack.frattini_bits, id) == pack.frattini_bits);

    auto qualifies = [&](uint16_t m) {
        uint16_t m5 = m;
        for (int k = 0; k < 4; ++k) m5 = f2_mul(m5, m);
        if (m5 != id || m == id) return false;
        for (unsigned v = 0; v < 16; ++v)
            if (squaring_form(f2_apply(v, m)) != squaring_form(v)) return false;
        return true;
    };
    uint32_t least = 0x10000;
    for (uint32_t m = 0; m < 0x10000; ++m) {
        if (qualifies(static_cast<uint16_t>(m))) {
            least = m;
            break;
        }
    }
    REQUIRE(least < 0x10000);
    CHECK(static_cast<uint16_t>(least) == pack.frattini_bits);
    // order-5 bit matrices act freely away from zero
    for (unsigned v = 1; v < 16; ++v) CHECK(f2_apply(v, pack.frattini_bits) != v);
}

TEST_CASE("conjugation by u is an order-5 automorphism of the phase group") {
    const auto& pack = standard_pack();
    const auto& sig = pack.sigma_e32;
    REQUIRE(sig.size() == 32);

    std::vector<Elt> image(sig.begin(), sig.end());
    std::sort(image.begin(), image.end());
    for (Elt k = 0; k < 32; ++k) CHECK(image[k] == k);

    for (Elt x = 0; x < 32; ++x)
        for (Elt y = 0; y < 32; ++y)
            CHECK(sig[pack.e32.group.mul(x, y)] == pack.e32.group.mul(sig[x], sig[y]));

    bool moved = false;
    for (Elt x = 0; x < 32; ++x) {
        Elt y = x;
        for (int k = 0; k < 5; ++k) y = sig[y];
        CHECK(y == x);
        if (sig[x] != x) moved = true;
    }
    CHECK(moved);
    CHECK(sig[pack.minus_one_e32] == pack.minus_one_e32);
}

TEST_CASE("u realizes the automorphism and has order 5 with determinant 1") {
    const auto& pack = standard_pack();
    Mat4 id40 = mat_identity(40);
    CHECK(mat_pow(pack.u, 5) == id40);
    CHECK(pack.u != id40);
    CHECK(det(pack.u) == CycNum::one(40));
    CHECK(pack.g.group.element_order(pack.u_in_g) == 5);

    Mat4 uinv = mat_pow(pack.u, 4);
    for (Elt k = 0; k < 32; ++k) {
        Mat4 m = mat_promoted(pack.e32.elems[k], 40);
        Mat4 want = mat_promoted(pack.e32.elems[pack.sigma_e32[k]], 40);
        CHECK(pack.u * m * uinv == want);
        CHECK(pack.g.group.conj(pack.u_in_g, pack.e32_in_g[k]) == pack.e32_in_g[pack.sigma_e32[k]]);
    }
}

TEST_CASE("extended group structure") {
    const auto& pack = standard_pack();
    const Group& g = pack.g.group;
    REQUIRE(g.size() == 160);
    std::map<unsigned, size_t> expected{{1, 1}, {2, 11}, {4, 20}, {5, 64}, {10, 64}};
    CHECK(g.order_histogram() == expected);
    CHECK(g.exponent() == 20);
    CHECK(g.center() == std::vector<Elt>{0, pack.minus_one_g});
    CHECK(pack.g.elems[pack.minus_one_g] == -mat_identity(40));

    auto classes = g.conjugacy_classes();
    REQUIRE(classes.size() == 13);
    std::vector<size_t> sizes{1, 1, 10, 10, 10, 16, 16, 16, 16, 16, 16, 16, 16};
    CHECK(class_sizes(classes) == sizes);
    std::vector<unsigned> orders{1, 2, 2, 4, 4, 5, 5, 5, 5, 10, 10, 10, 10};
    CHECK(class_orders(g, classes) == orders);

    // the phase subgroup sits inside as the same matrices
    for (Elt k = 0; k < 32; ++k)
        CHECK(pack.g.elems[pack.e32_in_g[k]] == mat_promoted(pack.e32.elems[k], 40));
    auto inside = sorted_copy(pack.e32_in_g);
    CHECK(std::unique(inside.begin(), inside.end()) == inside.end());
    CHECK(g.is_subgroup(inside));
    CHECK(g.is_normal(inside));

    // fifth powers land in the phase subgroup
    std::set<Elt> phase(inside.begin(), inside.end());
    for (Elt x = 0; x < 160; ++x) CHECK(phase.count(g.power(x, 5)) == 1);

    Group sub = g.subgroup(inside);
    std::map<unsigned, size_t> sub_expected{{1, 1}, {2, 11}, {4, 20}};
    CHECK(sub.order_histogram() == sub_expected);

    CHECK(g.transversal(inside).size() == 5);

    auto c5 = g.closure({pack.u_in_g});
    CHECK(c5.size() == 5);
    CHECK_FALSE(g.is_normal(c5));
    auto c10 = g.closure({pack.u_in_g, pack.minus_one_g});
    CHECK(c10.size() == 10);
    CHECK(g.subgroup(c10).is_abelian());
}

TEST_CASE("extended group multiplication table matches matrix products modulo two primes") {
    const auto& pack = standard_pack();
    for (std::uint64_t p : {41ull, 241ull}) {
        ModEval ev(p);
        std::vector<std::array<std::uint64_t, 16>> mats;
        mats.reserve(160);
        for (const auto& m : pack.g.elems) mats.push_back(ev.mat(m));
        for (Elt i = 0; i < 160; ++i) {
            for (Elt j = 0; j < 160; ++j) {
                const auto& a = mats[i];
                const auto& b = mats[j];
                const auto& c = mats[pack.g.group.mul(i, j)];
                for (int r = 0; r < 4; ++r) {
                    for (int col = 0; col < 4; ++col) {
                        std::uint64_t acc = 0;
                        for (int k = 0; k < 4; ++k)
                            acc = (acc + mulmod_u64(a[static_cast<size_t>(4 * r + k)],
                                                    b[static_cast<size_t>(4 * k + col)], p)) % p;
                        CHECK(acc == c[static_cast<size_t>(4 * r + col)]);
                    }
                }
            }
        }
    }
}

TEST_CASE("extended group table matches exact matrix products on an initial block") {
    const auto& pack = standard_pack();
    for (Elt i = 0; i < 20; ++i)
        for (Elt j = 0; j < 20; ++j)
            CHECK(pack.g.elems[i] * pack.g.elems[j] == pack.g.elems[pack.g.group.mul(i, j)]);
}

TEST_CASE("derived series and low-index subgroups of the extended group") {
    const auto& pack = standard_pack();
    const Group& g = pack.g.group;

    auto derived = derived_subgroup(g);
    CHECK(derived == sorted_copy(pack.e32_in_g));
    auto ab = g.quotient(derived);
    CHECK(ab.group.size() == 5);
    CHECK(ab.group.is_abelian());
    CHECK(ab.group.exponent() == 5);

    std::vector<Elt> order5;
    for (Elt x = 0; x < 160; ++x)
        if (g.element_order(x) == 5) order5.push_back(x);
    CHECK(order5.size() == 64);
    CHECK(g.closure(order5).size() == 160);

    auto subs = g.all_subgroups();
    CHECK(subs.size() == 111);
    std::map<unsigned, size_t> counts{{1, 1}, {2, 11}, {4, 15}, {5, 16}, {8, 35},
                                      {10, 16}, {16, 15}, {32, 1}, {160, 1}};
    CHECK(subgroup_order_counts(subs) == counts);
    // no subgroup of index 2, 4, or 8
    CHECK(subgroup_order_counts(subs).count(80) == 0);
    CHECK(subgroup_order_counts(subs).count(40) == 0);
    CHECK(subgroup_order_counts(subs).count(20) == 0);
}

TEST_CASE("phase group subgroup lattice and extraspecial certificates") {
    const auto& pack = standard_pack();
    const Group& e = pack.e32.group;

    auto subs = e.all_subgroups();
    CHECK(subs.size() == 78);
    std::map<unsigned, size_t> counts{{1, 1}, {2, 11}, {4, 15}, {8, 35}, {16, 15}, {32, 1}};
    CHECK(subgroup_order_counts(subs) == counts);

    // center, derived subgroup, and intersection of the maximal subgroups agree
    std::vector<Elt> center{0, pack.minus_one_e32};
    CHECK(e.center() == center);
    CHECK(derived_subgroup(e) == center);
    std::set<Elt> frattini;
    for (Elt x = 0; x < 32; ++x) frattini.insert(x);
    for (const auto& h : subs) {
        if (h.size() != 16) continue;
        std::set<Elt> keep;
        for (Elt x : h)
            if (frattini.count(x)) keep.insert(x);
        frattini = keep;
    }
    CHECK(std::vector<Elt>(frattini.begin(), frattini.end()) == center);
}

TEST_CASE("central quotient structure") {
    const auto& pack = standard_pack();
    const Group& q = pack.gbar;
    REQUIRE(q.size() == 80);
    std::map<unsigned, size_t> expected{{1, 1}, {2, 15}, {5, 64}};
    CHECK(q.order_histogram() == expected);
    CHECK(q.order_histogram().count(10) == 0);
    CHECK(q.exponent() == 10);
    CHECK(q.center() == std::vector<Elt>{0});
    CHECK_FALSE(q.is_abelian());

    auto classes = q.conjugacy_classes();
    REQUIRE(classes.size() == 8);
    std::vector<size_t> sizes{1, 5, 5, 5, 16, 16, 16, 16};
    CHECK(class_sizes(classes) == sizes);
    std::vector<unsigned> orders{1, 2, 2, 2, 5, 5, 5, 5};
    CHECK(class_orders(q, classes) == orders);

    auto subs = q.all_subgroups();
    CHECK(subs.size() == 84);
    std::map<unsigned, size_t> counts{{1, 1}, {2, 15}, {4, 35}, {5, 16}, {8, 15}, {16, 1}, {80, 1}};
    CHECK(subgroup_order_counts(subs) == counts);

    auto derived = derived_subgroup(q);
    CHECK(derived.size() == 16);
    auto ab = q.quotient(derived);
    CHECK(ab.group.size() == 5);
    CHECK(ab.group.exponent() == 5);
}

TEST_CASE("projection to the central quotient is a homomorphism with sign-pair fibers") {
    const auto& pack = standard_pack();
    const Group& g = pack.g.group;
    const auto& proj = pack.gbar_proj;
    REQUIRE(proj.size() == 160);

    for (Elt x = 0; x < 160; ++x)
        for (Elt y = 0; y < 160; ++y)
            CHECK(proj[g.mul(x, y)] == pack.gbar.mul(proj[x], proj[y]));

    REQUIRE(pack.gbar_cosets.size() == 80);
    for (Elt c = 0; c < 80; ++c) {
        const auto& fiber = pack.gbar_cosets[c];
        REQUIRE(fiber.size() == 2);
        CHECK(proj[fiber[0]] == c);
        CHECK(proj[fiber[1]] == c);
        CHECK(g.mul(pack.minus_one_g, fiber[0]) == fiber[1]);
    }
}

TEST_CASE("order-5 action on the quotient is free away from the identity") {
    const auto& pack = standard_pack();
    const Group& q = pack.gbar;
    Elt ubar = pack.gbar_proj[pack.u_in_g];
    CHECK(q.element_order(ubar) == 5);

    std::set<Elt> image16;
    for (Elt k = 0; k < 32; ++k) image16.insert(pack.gbar_proj[pack.e32_in_g[k]]);
    REQUIRE(image16.size() == 16);

    for (Elt x : image16) {
        if (x == 0) continue;
        CHECK(q.conj(ubar, x) != x);
        // every coset element of the complement has order 5
        CHECK(q.power(q.mul(x, ubar), 5) == 0);
    }
}
