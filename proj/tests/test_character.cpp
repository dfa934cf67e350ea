#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "artin/character.hpp"
#include "artin/errors.hpp"
#include "artin/group.hpp"
#include "artin/standard_groups.hpp"

using namespace artin;

namespace {

const ClassData& g_cd() {
    static ClassData cd(standard_pack().g.group);
    return cd;
}

const std::vector<Character>& g_table() {
    static std::vector<Character> t = character_table(g_cd());
    return t;
}

const std::vector<Elt>& phase_elts() {
    static std::vector<Elt> h = [] {
        std::vector<Elt> v = standard_pack().e32_in_g;
        std::sort(v.begin(), v.end());
        return v;
    }();
    return h;
}

const ClassData& phase_cd() {
    static Group hg = standard_pack().g.group.subgroup(phase_elts());
    static ClassData cd(hg);
    return cd;
}

const std::vector<Character>& phase_table() {
    static std::vector<Character> t = character_table(phase_cd());
    return t;
}

const ClassData& quot_cd() {
    static ClassData cd(standard_pack().gbar);
    return cd;
}

long degree_of(const Character& chi) { return chi.degree().to_rat().get_num().get_si(); }

std::vector<long> degree_line(const std::vector<Character>& table) {
    std::vector<long> out;
    for (const auto& chi : table) out.push_back(degree_of(chi));
    return out;
}

std::vector<Character> rows_of_degree(const std::vector<Character>& table, long d) {
    std::vector<Character> out;
    for (const auto& chi : table)
        if (degree_of(chi) == d) out.push_back(chi);
    return out;
}

size_t count_in_table(const std::vector<Character>& table, const Character& chi) {
    size_t hits = 0;
    for (const auto& row : table)
        if (row == chi) ++hits;
    return hits;
}

// the character of the defining four dimensional matrix realization
Character natural_character() {
    const StandardPack& pack = standard_pack();
    Character chi;
    chi.cd = &g_cd();
    for (size_t c = 0; c < g_cd().size(); ++c)
        chi.values.push_back(trace(pack.g.elems[g_cd().reps[c]]));
    return chi;
}

}  // namespace

TEST_CASE("newton recovers elementary symmetric functions") {
    CycNum two = CycNum::from_int(2), three = CycNum::from_int(3);
    std::vector<CycNum> ps{two + three, two * two + three * three};
    auto el = newton_elementary(ps);
    REQUIRE(el.size() == 2);
    CHECK(el[0] == CycNum::from_int(5));
    CHECK(el[1] == CycNum::from_int(6));

    // roots 1, -1, i, -i: power sums 0, 0, 0, 4 and determinant -1
    std::vector<CycNum> ps4{CycNum::zero(1), CycNum::zero(1), CycNum::zero(1),
                            CycNum::from_int(4)};
    auto el4 = newton_elementary(ps4);
    CHECK(el4[0].is_zero());
    CHECK(el4[1].is_zero());
    CHECK(el4[2].is_zero());
    CHECK(el4[3] == CycNum::from_int(-1));
}

TEST_CASE("cyclic group of five has five linear characters") {
    Group c5 = cyclic_group(5);
    ClassData cd(c5);
    REQUIRE(cd.size() == 5);
    for (size_t c = 0; c < 5; ++c) REQUIRE(cd.reps[c] == static_cast<Elt>(c));
    auto table = character_table(cd);
    REQUIRE(table.size() == 5);
    std::set<std::string> firsts;
    for (const auto& chi : table) {
        CHECK(degree_of(chi) == 1);
        for (size_t k = 0; k < 5; ++k) {
            CycNum pw = CycNum::one(1);
            for (size_t i = 0; i < k; ++i) pw = pw * chi.values[1];
            CHECK(chi.values[k] == pw);
        }
        CycNum fifth = chi.values[1];
        for (int i = 0; i < 4; ++i) fifth = fifth * chi.values[1];
        CHECK(fifth == CycNum::one(1));
        firsts.insert(chi.values[1].str());
    }
    CHECK(firsts.size() == 5);
}

TEST_CASE("extended group character degrees") {
    const auto& table = g_table();
    REQUIRE(table.size() == 13);
    CHECK(degree_line(table) == std::vector<long>{1, 1, 1, 1, 1, 4, 4, 4, 4, 4, 5, 5, 5});

    // degree one rows are trivial on every class of order 1, 2, or 4
    const ClassData& cd = g_cd();
    for (const auto& lin : rows_of_degree(table, 1))
        for (size_t c = 0; c < cd.size(); ++c) {
            unsigned ord = cd.group->element_order(cd.reps[c]);
            if (ord == 1 || ord == 2 || ord == 4) CHECK(lin.values[c] == CycNum::one(1));
        }
}

TEST_CASE("column orthogonality holds exactly") {
    const auto& table = g_table();
    const ClassData& cd = g_cd();
    for (size_t c = 0; c < cd.size(); ++c)
        for (size_t c2 = 0; c2 < cd.size(); ++c2) {
            CycNum s = CycNum::zero(1);
            for (const auto& chi : table) s = s + chi.values[c] * chi.values[c2].conj();
            long want = c == c2 ? static_cast<long>(cd.group->size() / cd.classes[c].size()) : 0;
            CHECK(s == CycNum::from_int(want));
        }
}

TEST_CASE("natural character row") {
    Character chi = natural_character();
    std::vector<long> want{4, -4, 0, 0, 0, -1, -1, -1, -1, 1, 1, 1, 1};
    REQUIRE(chi.values.size() == want.size());
    for (size_t c = 0; c < want.size(); ++c) CHECK(chi.values[c] == CycNum::from_int(want[c]));
    CHECK(inner(chi, chi) == Rat(1));
    CHECK(count_in_table(g_table(), chi) == 1);
    CHECK(fs_indicator(chi) == Rat(-1));
}

TEST_CASE("determinant characters of the degree four rows") {
    const auto& table = g_table();
    Character chi = natural_character();
    Character triv = trivial_character(g_cd());
    CHECK(determinant_character(chi, 4) == triv);
    size_t trivial_dets = 0;
    for (const auto& row : rows_of_degree(table, 4)) {
        Character det4 = determinant_character(row, 4);
        CHECK(count_in_table(table, det4) == 1);
        CHECK(degree_of(det4) == 1);
        if (det4 == triv) ++trivial_dets;
    }
    CHECK(trivial_dets == 1);
}

TEST_CASE("degree four rows are the linear twists of the natural one") {
    const auto& table = g_table();
    Character chi = natural_character();
    std::set<std::string> seen;
    for (const auto& lin : rows_of_degree(table, 1)) {
        Character twisted = chi * lin;
        CHECK(count_in_table(table, twisted) == 1);
        CHECK(degree_of(twisted) == 4);
        std::string key;
        for (const auto& v : twisted.values) key += v.str() + "|";
        seen.insert(key);
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("square decomposition is exact for every row") {
    const auto& table = g_table();
    for (const auto& chi : table) {
        Character both = exterior_square(chi) + symmetric_square(chi);
        CHECK(both == chi * chi);
    }
}

TEST_CASE("frobenius schur indicators") {
    const auto& table = g_table();
    Character chi = natural_character();
    Rat weighted(0);
    std::multiset<int> by_deg1, by_deg4, by_deg5;
    for (const auto& row : table) {
        Rat ind = fs_indicator(row);
        CHECK((ind == Rat(-1) || ind == Rat(0) || ind == Rat(1)));
        // indicator vanishes exactly for rows that differ from their conjugate
        CHECK((ind == Rat(0)) == (conj_character(row) != row));
        int iv = static_cast<int>(ind.get_num().get_si());
        long d = degree_of(row);
        weighted += ind * Rat(d);
        if (d == 1) by_deg1.insert(iv);
        if (d == 4) by_deg4.insert(iv);
        if (d == 5) by_deg5.insert(iv);
    }
    CHECK(by_deg1 == std::multiset<int>{0, 0, 0, 0, 1});
    CHECK(by_deg4 == std::multiset<int>{-1, 0, 0, 0, 0});
    CHECK(by_deg5 == std::multiset<int>{1, 1, 1});
    // weighted sum counts solutions of x^2 = identity
    CHECK(weighted == Rat(12));
    CHECK(fs_indicator(chi) == Rat(-1));
}

TEST_CASE("phase subgroup table and the restriction of the natural character") {
    const auto& sub = phase_table();
    REQUIRE(sub.size() == 17);
    std::vector<long> degs = degree_line(sub);
    CHECK(std::count(degs.begin(), degs.end(), 1) == 16);
    CHECK(std::count(degs.begin(), degs.end(), 4) == 1);

    const StandardPack& pack = standard_pack();
    size_t minus_pos =
        static_cast<size_t>(std::lower_bound(phase_elts().begin(), phase_elts().end(),
                                             pack.minus_one_g) -
                            phase_elts().begin());
    Character four = rows_of_degree(sub, 4).front();
    for (size_t c = 0; c < phase_cd().size(); ++c) {
        Elt rep = phase_cd().reps[c];
        long want = c == 0 ? 4 : (rep == static_cast<Elt>(minus_pos) ? -4 : 0);
        CHECK(four.values[c] == CycNum::from_int(want));
    }

    Character res = restrict_character(natural_character(), phase_elts(), phase_cd());
    CHECK(res == four);
    CHECK(inner(res, res) == Rat(1));
}

TEST_CASE("frobenius reciprocity across the phase subgroup") {
    const auto& table = g_table();
    const auto& sub = phase_table();
    for (const auto& lam : sub) {
        Character ind = induce_character(lam, phase_elts(), g_cd());
        CHECK(ind.degree() == CycNum::from_int(5 * degree_of(lam)));
        for (const auto& chi : table) {
            Character res = restrict_character(chi, phase_elts(), phase_cd());
            CHECK(inner(ind, chi) == inner(lam, res));
        }
    }
}

TEST_CASE("inducing the trivial character yields every linear character once") {
    Character ind = induce_character(trivial_character(phase_cd()), phase_elts(), g_cd());
    Character sum{&g_cd(), std::vector<CycNum>(g_cd().size(), CycNum::zero(1))};
    for (const auto& lin : rows_of_degree(g_table(), 1)) sum = sum + lin;
    CHECK(ind == sum);
}

TEST_CASE("exterior square splits as a line plus an induced five") {
    const auto& table = g_table();
    const auto& sub = phase_table();
    std::set<std::string> lines_used, fives_seen;
    for (const auto& chi : rows_of_degree(table, 4)) {
        Character ext = exterior_square(chi);
        std::vector<Character> hits;
        for (const auto& lin : rows_of_degree(table, 1)) {
            Rat m = inner(ext, lin);
            CHECK((m == Rat(0) || m == Rat(1)));
            if (m == Rat(1)) hits.push_back(lin);
        }
        REQUIRE(hits.size() == 1);
        std::string lkey;
        for (const auto& v : hits[0].values) lkey += v.str() + "|";
        lines_used.insert(lkey);

        Character rest = ext - hits[0];
        CHECK(inner(rest, rest) == Rat(1));
        CHECK(degree_of(rest) == 5);
        CHECK(count_in_table(table, rest) == 1);
        std::string rkey;
        for (const auto& v : rest.values) rkey += v.str() + "|";
        fives_seen.insert(rkey);

        // the five dimensional part is induced from a linear character below
        size_t matches = 0;
        for (const auto& lam : rows_of_degree(sub, 1))
            if (induce_character(lam, phase_elts(), g_cd()) == rest) ++matches;
        CHECK(matches >= 1);
    }
    // each linear character polarizes exactly one twist
    CHECK(lines_used.size() == 5);
    CHECK(fives_seen.size() <= 3);

    // the natural character itself polarizes to the trivial line
    Character ext = exterior_square(natural_character());
    CHECK(inner(ext, trivial_character(g_cd())) == Rat(1));
}

TEST_CASE("central quotient table pulls back to the center-trivial rows") {
    auto qtable = character_table(quot_cd());
    REQUIRE(qtable.size() == 8);
    CHECK(degree_line(qtable) == std::vector<long>{1, 1, 1, 1, 1, 5, 5, 5});
    for (const auto& row : rows_of_degree(qtable, 5)) CHECK(fs_indicator(row) == Rat(1));

    const StandardPack& pack = standard_pack();
    std::vector<Character> pulled;
    for (const auto& row : qtable) {
        Character lift{&g_cd(), {}};
        for (size_t c = 0; c < g_cd().size(); ++c)
            lift.values.push_back(row.values[quot_cd().class_of[pack.gbar_proj[g_cd().reps[c]]]]);
        CHECK(count_in_table(g_table(), lift) == 1);
        pulled.push_back(lift);
    }
    // exactly the rows taking the same value on both central classes descend
    size_t descending = 0;
    for (const auto& row : g_table())
        if (row.values[1] == row.values[0]) {
            ++descending;
            size_t hits = 0;
            for (const auto& l : pulled)
                if (l == row) ++hits;
            CHECK(hits == 1);
        }
    CHECK(descending == 8);
}

TEST_CASE("character operations reject mismatched class data") {
    Group c5 = cyclic_group(5);
    ClassData cd(c5);
    Character t5 = trivial_character(cd);
    Character tg = trivial_character(g_cd());
    CHECK_THROWS_AS(inner(t5, tg), CheckFailed);
    CHECK_THROWS_AS(t5 + tg, CheckFailed);
    CHECK_THROWS_AS(character_table(g_cd(), 100), CheckFailed);
}
