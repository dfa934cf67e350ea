#include <doctest.h>

#include <algorithm>
#include <map>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"
#include "artin/splitting.hpp"
#include "artin/standard_groups.hpp"
#include "artin/tower.hpp"

using namespace artin;

namespace {

const std::vector<NumberField>& tower() {
    static const std::vector<NumberField> t = build_tower();
    return t;
}

const PolyQ& poly_of(const std::string& label) {
    for (const NumberField& nf : tower()) {
        if (nf.label == label) return nf.defining_poly;
    }
    throw CheckFailed("no field " + label);
}

std::vector<PolyQ> orbit_columns(const std::string& quad) {
    return {poly_of("E"), poly_of(quad)};
}

SplittingType plain(std::vector<int> degrees) { return {std::move(degrees), false}; }

SplittingType flagged(std::vector<int> degrees) { return {std::move(degrees), true}; }

int weight(Elt e) { return __builtin_popcount(static_cast<unsigned>(e) & 31u); }

}  // namespace

TEST_CASE("splitting shapes at spot primes match the factor oracle") {
    const PolyQ& fE = poly_of("E");
    const PolyQ& fEA = poly_of("EA");

    CHECK(split_prime(fE, 23) == plain({1, 1, 1, 1, 1}));
    CHECK(split_prime(fE, 7) == plain({5}));
    CHECK(split_prime(fE, 11) == flagged({1}));

    CHECK(split_prime(fEA, 23) == plain({1, 1, 1, 1, 2, 2, 2}));
    CHECK(split_prime(fEA, 67) == plain({1, 1, 2, 2, 2, 2}));
    CHECK(split_prime(fEA, 199) == plain({1, 1, 1, 1, 1, 1, 2, 2}));
    CHECK(split_prime(fEA, 89) == flagged({1, 1, 1, 1, 1, 2, 2}));
    CHECK(split_prime(fEA, 11) == flagged({1, 1}));
    CHECK(split_prime(fEA, 7) == plain({10}));
    CHECK(split_prime(fEA, 17) == plain({5, 5}));

    CHECK(split_prime(poly_of("EB"), 23) == flagged({1, 1, 1, 1, 1, 1, 2}));
    CHECK(split_prime(poly_of("EC"), 23) == plain({2, 2, 2, 2, 2}));

    CHECK(split_prime(fEA, 23).str() == "1,1,1,1,2,2,2");
    CHECK(split_prime(fEA, 89).str() == "1,1,1,1,1,2,2*");

    CHECK_THROWS_AS(split_prime(fE, 15), CheckFailed);
}

TEST_CASE("cyclic position is the discrete log of p up to sign") {
    CHECK(cyclic_position(23) == 0);
    CHECK(cyclic_position(2) == 1);
    CHECK(cyclic_position(7) == 2);
    CHECK(cyclic_position(3) == 3);
    CHECK(cyclic_position(13) == 1);
    CHECK(cyclic_position(17) == 4);
    CHECK(cyclic_position(19) == 3);
    CHECK(cyclic_position(29) == 2);
    CHECK(cyclic_position(89) == 0);
    for (uint64_t r = 1; r <= 10; ++r) {
        CAPTURE(r);
        uint64_t two_pow = powmod_u64(2, static_cast<uint64_t>(cyclic_position(r)), 11);
        CHECK((two_pow == r || (11 - two_pow) == r));
    }
    CHECK_THROWS_AS(cyclic_position(11), CheckFailed);
    CHECK_THROWS_AS(cyclic_position(121), CheckFailed);

    CHECK(base_field_residue_degree(23) == 1);
    CHECK(base_field_residue_degree(43) == 1);
    CHECK(base_field_residue_degree(7) == 5);
    CHECK(base_field_residue_degree(2) == 5);

    CHECK(excluded_prime(2));
    CHECK(excluded_prime(5));
    CHECK(excluded_prime(11));
    CHECK(!excluded_prime(7));
}

TEST_CASE("the orbit model has the frozen class structure") {
    const OrbitModel& m = orbit_model();
    CHECK(m.gamma.size() == 160);
    CHECK(m.gamma.exponent() == 10);

    std::map<unsigned, size_t> expected_orders{{1, 1}, {2, 31}, {5, 64}, {10, 64}};
    CHECK(m.gamma.order_histogram() == expected_orders);

    CHECK(m.gamma.center() == std::vector<Elt>{0, 31});

    auto classes = m.gamma.conjugacy_classes();
    REQUIRE(classes.size() == 16);
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 5, 5, 5, 5, 5, 5, 16, 16, 16, 16, 16, 16, 16, 16});

    CHECK(m.stab_base.size() == 32);
    CHECK(m.stab_quad.size() == 16);
    CHECK(m.gamma.is_subgroup(m.stab_base));
    CHECK(m.gamma.is_subgroup(m.stab_quad));

    auto quot = m.gamma.quotient({0, 31});
    CHECK(quot.group.size() == 80);
    CHECK(quot.group.order_histogram() == standard_pack().gbar.order_histogram());
    auto qc = quot.group.conjugacy_classes();
    auto bc = standard_pack().gbar.conjugacy_classes();
    REQUIRE(qc.size() == bc.size());
    for (size_t i = 0; i < qc.size(); ++i) CHECK(qc[i].size() == bc[i].size());
}

TEST_CASE("fingerprint rows are the frozen coset shapes") {
    const FingerprintTable& t = orbit_table();
    REQUIRE(t.columns.size() == 2);
    REQUIRE(t.rows.size() == 16);
    CHECK(t.labeled());

    for (size_t c = 0; c < t.classes.size(); ++c) {
        Elt rep = t.classes[c][0];
        int j = rep / 32;
        int w = weight(rep);
        CAPTURE(c);
        CAPTURE(rep);
        CHECK(t.labels[c] == j);
        if (j == 0) {
            CHECK(t.rows[c][0] == plain({1, 1, 1, 1, 1}));
            std::vector<int> quad(static_cast<size_t>(w), 2);
            quad.insert(quad.begin(), static_cast<size_t>(10 - 2 * w), 1);
            std::sort(quad.begin(), quad.end());
            CHECK(t.rows[c][1] == plain(quad));
        } else {
            CHECK(t.rows[c][0] == plain({5}));
            CHECK(t.rows[c][1] == (w % 2 == 0 ? plain({5, 5}) : plain({10})));
        }
    }

    // the observables cannot separate the two weight-2 or the two weight-3
    // classes; every other class sits in its own cell
    std::map<std::string, int> cell_count;
    for (size_t c = 0; c < t.classes.size(); ++c) {
        std::string key = std::to_string(t.labels[c]);
        for (const auto& s : t.rows[c]) key += "|" + s.str();
        ++cell_count[key];
    }
    CHECK(cell_count.size() == 14);
    size_t doubles = 0;
    for (const auto& [key, n] : cell_count) {
        CHECK(n <= 2);
        if (n == 2) ++doubles;
    }
    CHECK(doubles == 2);
}

TEST_CASE("frobenius candidates at spot primes") {
    const FingerprintTable& t = orbit_table();
    auto cols = orbit_columns("EA");

    auto fr = frobenius_class(t, cols, 23);
    CHECK(!fr.skipped);
    CHECK(fr.cyclic_pos == 0);
    REQUIRE(fr.candidates.size() == 2);
    for (size_t c : fr.candidates) CHECK(weight(t.classes[c][0]) == 3);
    CHECK(fr.candidates == fr.raw_candidates);

    fr = frobenius_class(t, cols, 7);
    REQUIRE(fr.candidates.size() == 1);
    CHECK(t.labels[fr.candidates[0]] == 2);
    CHECK(t.classes[fr.candidates[0]].size() == 16);
    CHECK(orbit_model().gamma.element_order(t.classes[fr.candidates[0]][0]) == 10);

    fr = frobenius_class(t, cols, 17);
    REQUIRE(fr.candidates.size() == 1);
    CHECK(t.labels[fr.candidates[0]] == 4);
    CHECK(orbit_model().gamma.element_order(t.classes[fr.candidates[0]][0]) == 5);

    fr = frobenius_class(t, cols, 373);
    REQUIRE(fr.candidates.size() == 1);
    CHECK(t.classes[fr.candidates[0]] == std::vector<Elt>{0});

    fr = frobenius_class(t, cols, 571);
    REQUIRE(fr.candidates.size() == 1);
    CHECK(t.classes[fr.candidates[0]] == std::vector<Elt>{31});

    fr = frobenius_class(t, cols, 89);
    CHECK(fr.skipped);
    CHECK(fr.skip_reason == "ramified");
    for (uint64_t p : {2, 5, 11}) {
        fr = frobenius_class(t, cols, p);
        CHECK(fr.skipped);
        CHECK(fr.skip_reason == "excluded");
    }
}

TEST_CASE("the base rule holds and candidates never vanish up to ten thousand") {
    const FingerprintTable& t = orbit_table();
    auto cols = orbit_columns("EA");
    size_t used = 0, skipped = 0;
    for (uint32_t p : primes_up_to(10000)) {
        FrobeniusReport fr = frobenius_class(t, cols, p);
        if (fr.skipped) {
            ++skipped;
            continue;
        }
        ++used;
        CAPTURE(p);
        REQUIRE(!fr.candidates.empty());
        CHECK(fr.observed[0] ==
              (fr.cyclic_pos == 0 ? plain({1, 1, 1, 1, 1}) : plain({5})));
        for (size_t c : fr.candidates) {
            CHECK(std::find(fr.raw_candidates.begin(), fr.raw_candidates.end(), c) !=
                  fr.raw_candidates.end());
        }
    }
    CHECK(used + skipped == primes_up_to(10000).size());
    CHECK(skipped * 100 < used);
}

TEST_CASE("histogram cells close within five sigma at ten thousand") {
    ChebotarevReport rep = chebotarev_histogram(orbit_table(), orbit_columns("EA"), 10000);
    REQUIRE(rep.cells.size() == 14);

    double total = 0;
    size_t doubles = 0;
    for (const auto& cell : rep.cells) {
        total += cell.expected;
        CHECK(cell.classes.size() <= 2);
        if (cell.classes.size() == 2) ++doubles;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doubles == 2);

    CHECK(rep.used + rep.skipped.size() == primes_up_to(10000).size());
    CHECK(rep.skipped.size() * 100 < rep.used);
    CHECK(rep.max_sigma <= 5.0);
}

TEST_CASE("the matrix group model leaves the central shape unexplained") {
    const StandardPack& pack = standard_pack();
    const Group& g = pack.g.group;

    std::vector<Elt> e32set(pack.e32_in_g.begin(), pack.e32_in_g.end());
    std::sort(e32set.begin(), e32set.end());
    REQUIRE(g.is_subgroup(e32set));

    std::vector<std::vector<Elt>> index_ten;
    for (const auto& h : g.all_subgroups()) {
        if (h.size() == 16) index_ten.push_back(h);
    }
    REQUIRE(index_ten.size() == 15);

    const std::vector<SplittingType> central{plain({1, 1, 1, 1, 1}), plain({2, 2, 2, 2, 2})};
    for (const auto& h : index_ten) {
        CHECK(std::find(h.begin(), h.end(), pack.minus_one_g) != h.end());
        FingerprintTable t = fingerprint_table(g, {e32set, h}, {"E", "quad"});
        for (const auto& row : t.rows) CHECK(row != central);

        // 571 realizes the central shape, so this model explains nothing there
        FrobeniusReport fr = frobenius_class(t, orbit_columns("EA"), 571);
        CHECK(!fr.skipped);
        CHECK(fr.raw_candidates.empty());
        CHECK(fr.candidates.empty());
    }
}

TEST_CASE("labels must be constant on classes") {
    const OrbitModel& m = orbit_model();
    FingerprintTable t =
        fingerprint_table(m.gamma, {m.stab_base, m.stab_quad}, {"E", "E(sqrt)"});
    CHECK(!t.labeled());

    FrobeniusReport fr = frobenius_class(t, orbit_columns("EA"), 7);
    CHECK(fr.candidates == fr.raw_candidates);

    std::vector<int> bad(m.gamma.size());
    for (size_t e = 0; e < bad.size(); ++e) bad[e] = static_cast<int>(e % 5);
    CHECK_THROWS_AS(attach_cyclic_labels(t, bad), CheckFailed);

    attach_cyclic_labels(t, m.label_of);
    CHECK(t.labeled());
}

TEST_CASE("degree forty columns keep full degree at good primes") {
    std::vector<int> k7 = split_prime(poly_of("K"), 7).degrees;
    CHECK(k7 == std::vector<int>{20, 20});
    CHECK(split_prime(poly_of("M"), 7) == plain({10, 10, 10, 10}));
    CHECK(split_prime(poly_of("M"), 23) == plain({4, 4, 4, 4, 4, 4, 4, 4, 4, 4}));
    CHECK(split_prime(poly_of("K"), 373) ==
          plain({1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 4}));
}
