#include "artin/character.hpp"

#include <algorithm>
#include <cstdint>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"

namespace artin {

ClassData::ClassData(const Group& g) : group(&g), classes(g.conjugacy_classes()) {
    class_of = g.class_map(classes);
    reps.reserve(classes.size());
    for (const auto& c : classes) reps.push_back(c.front());
}

size_t ClassData::power_class(size_t c, long k) const {
    return class_of[group->power(reps[c], k)];
}

size_t ClassData::inverse_class(size_t c) const { return class_of[group->inv(reps[c])]; }

Character trivial_character(const ClassData& cd) {
    Character out;
    out.cd = &cd;
    out.values.assign(cd.size(), CycNum::one(1));
    return out;
}

Character conj_character(const Character& chi) {
    Character out;
    out.cd = chi.cd;
    for (const auto& v : chi.values) out.values.push_back(v.conj());
    return out;
}

namespace {

void require_same(const Character& a, const Character& b, const char* op) {
    check(a.cd == b.cd, std::string(op) + ": characters built on different class data");
}

}  // namespace

Character operator+(const Character& a, const Character& b) {
    require_same(a, b, "character sum");
    Character out;
    out.cd = a.cd;
    for (size_t c = 0; c < a.values.size(); ++c) out.values.push_back(a.values[c] + b.values[c]);
    return out;
}

Character operator-(const Character& a, const Character& b) {
    require_same(a, b, "character difference");
    Character out;
    out.cd = a.cd;
    for (size_t c = 0; c < a.values.size(); ++c) out.values.push_back(a.values[c] - b.values[c]);
    return out;
}

Character operator*(const Character& a, const Character& b) {
    require_same(a, b, "character product");
    Character out;
    out.cd = a.cd;
    for (size_t c = 0; c < a.values.size(); ++c) out.values.push_back(a.values[c] * b.values[c]);
    return out;
}

bool operator==(const Character& a, const Character& b) {
    if (a.cd != b.cd || a.values.size() != b.values.size()) return false;
    for (size_t c = 0; c < a.values.size(); ++c)
        if (a.values[c] != b.values[c]) return false;
    return true;
}

Rat inner(const Character& chi, const Character& psi) {
    require_same(chi, psi, "inner");
    const ClassData& cd = *chi.cd;
    CycNum acc = CycNum::zero(1);
    for (size_t c = 0; c < cd.size(); ++c) {
        CycNum w = CycNum::from_int(static_cast<long>(cd.classes[c].size()));
        acc = acc + w * chi.values[c] * psi.values[c].conj();
    }
    acc = acc / CycNum::from_int(static_cast<long>(cd.group->size()));
    return acc.to_rat();
}

Character exterior_square(const Character& chi) {
    const ClassData& cd = *chi.cd;
    Character out;
    out.cd = chi.cd;
    CycNum two = CycNum::from_int(2);
    for (size_t c = 0; c < cd.size(); ++c) {
        CycNum sq = chi.values[cd.power_class(c, 2)];
        out.values.push_back((chi.values[c] * chi.values[c] - sq) / two);
    }
    return out;
}

Character symmetric_square(const Character& chi) {
    const ClassData& cd = *chi.cd;
    Character out;
    out.cd = chi.cd;
    CycNum two = CycNum::from_int(2);
    for (size_t c = 0; c < cd.size(); ++c) {
        CycNum sq = chi.values[cd.power_class(c, 2)];
        out.values.push_back((chi.values[c] * chi.values[c] + sq) / two);
    }
    return out;
}

Rat fs_indicator(const Character& chi) {
    const ClassData& cd = *chi.cd;
    CycNum acc = CycNum::zero(1);
    for (size_t c = 0; c < cd.size(); ++c) {
        CycNum w = CycNum::from_int(static_cast<long>(cd.classes[c].size()));
        acc = acc + w * chi.values[cd.power_class(c, 2)];
    }
    acc = acc / CycNum::from_int(static_cast<long>(cd.group->size()));
    return acc.to_rat();
}

Character restrict_character(const Character& chi, const std::vector<Elt>& h, const ClassData& hcd) {
    check(hcd.group->size() == h.size(), "restrict: subgroup class data has the wrong size");
    Character out;
    out.cd = &hcd;
    for (size_t c = 0; c < hcd.size(); ++c) {
        Elt parent = h[hcd.reps[c]];
        out.values.push_back(chi.values[chi.cd->class_of[parent]]);
    }
    return out;
}

Character induce_character(const Character& lam, const std::vector<Elt>& h, const ClassData& gcd) {
    const Group& g = *gcd.group;
    check(lam.cd->group->size() == h.size(), "induce: subgroup class data has the wrong size");
    check(g.size() % h.size() == 0, "induce: subgroup size does not divide group size");
    std::vector<long> pos(g.size(), -1);
    for (size_t k = 0; k < h.size(); ++k) {
        check(h[k] < g.size(), "induce: subgroup element out of range");
        pos[h[k]] = static_cast<long>(k);
    }
    CycNum hsize = CycNum::from_int(static_cast<long>(h.size()));
    Character out;
    out.cd = &gcd;
    for (size_t c = 0; c < gcd.size(); ++c) {
        Elt z = gcd.reps[c];
        CycNum sum = CycNum::zero(1);
        for (size_t x = 0; x < g.size(); ++x) {
            Elt xe = static_cast<Elt>(x);
            Elt t = g.mul(g.mul(g.inv(xe), z), xe);
            if (pos[t] < 0) continue;
            sum = sum + lam.values[lam.cd->class_of[static_cast<size_t>(pos[t])]];
        }
        out.values.push_back(sum / hsize);
    }
    return out;
}

std::vector<CycNum> newton_elementary(const std::vector<CycNum>& power_sums) {
    size_t n = power_sums.size();
    std::vector<CycNum> e(n + 1, CycNum::zero(1));
    e[0] = CycNum::one(1);
    for (size_t k = 1; k <= n; ++k) {
        CycNum s = CycNum::zero(1);
        for (size_t i = 1; i <= k; ++i) {
            CycNum term = e[k - i] * power_sums[i - 1];
            s = (i % 2 == 1) ? s + term : s - term;
        }
        e[k] = s / CycNum::from_int(static_cast<long>(k));
    }
    return std::vector<CycNum>(e.begin() + 1, e.end());
}

Character determinant_character(const Character& chi, unsigned dim) {
    const ClassData& cd = *chi.cd;
    check(dim > 0, "determinant_character: dimension must be positive");
    Character out;
    out.cd = chi.cd;
    for (size_t c = 0; c < cd.size(); ++c) {
        std::vector<CycNum> ps;
        for (unsigned k = 1; k <= dim; ++k) ps.push_back(chi.values[cd.power_class(c, k)]);
        out.values.push_back(newton_elementary(ps).back());
    }
    return out;
}

namespace {

using U = std::uint64_t;

U fp_inv(U a, U p) { return powmod_u64(a, p - 2, p); }

// reduced row echelon form in place; returns rank, fills pivot columns
size_t fp_rref(std::vector<std::vector<U>>& m, U p, std::vector<size_t>& piv) {
    piv.clear();
    if (m.empty()) return 0;
    size_t cols = m[0].size(), rank = 0;
    for (size_t c = 0; c < cols && rank < m.size(); ++c) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        U s = fp_inv(m[rank][c], p);
        for (auto& x : m[rank]) x = mulmod_u64(x, s, p);
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == rank || m[r2][c] == 0) continue;
            U f = m[r2][c];
            for (size_t c2 = 0; c2 < cols; ++c2)
                m[r2][c2] = (m[r2][c2] + p - mulmod_u64(f, m[rank][c2], p)) % p;
        }
        piv.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return rank;
}

// basis of {v : m v = 0}, one row per basis vector
std::vector<std::vector<U>> fp_nullspace(std::vector<std::vector<U>> m, U p) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> piv;
    fp_rref(m, p, piv);
    std::vector<char> is_piv(cols, 0);
    for (size_t c : piv) is_piv[c] = 1;
    std::vector<std::vector<U>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<U> v(cols, 0);
        v[f] = 1;
        for (size_t t = 0; t < piv.size(); ++t) v[piv[t]] = (p - m[t][f]) % p;
        basis.push_back(v);
    }
    return basis;
}

std::vector<std::vector<U>> fp_transpose(const std::vector<std::vector<U>>& m) {
    if (m.empty()) return {};
    std::vector<std::vector<U>> out(m[0].size(), std::vector<U>(m.size(), 0));
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c) out[c][r] = m[r][c];
    return out;
}

struct Space {
    std::vector<std::vector<U>> rows;  // RREF basis
    std::vector<size_t> piv;
};

// split one invariant subspace into eigenspaces of the row action v -> v t
std::vector<Space> split_space(const Space& sp, const std::vector<std::vector<U>>& t, U p) {
    size_t d = sp.rows.size(), n = sp.rows[0].size();
    std::vector<std::vector<U>> img(d, std::vector<U>(n, 0));
    for (size_t a = 0; a < d; ++a)
        for (size_t j = 0; j < n; ++j) {
            if (sp.rows[a][j] == 0) continue;
            U f = sp.rows[a][j];
            for (size_t k = 0; k < n; ++k)
                img[a][k] = (img[a][k] + mulmod_u64(f, t[j][k], p)) % p;
        }
    // coordinates of each image in the pivot columns, then certify invariance
    std::vector<std::vector<U>> act(d, std::vector<U>(d, 0));
    for (size_t a = 0; a < d; ++a) {
        for (size_t s = 0; s < d; ++s) act[a][s] = img[a][sp.piv[s]];
        std::vector<U> back(n, 0);
        for (size_t s = 0; s < d; ++s)
            for (size_t k = 0; k < n; ++k)
                back[k] = (back[k] + mulmod_u64(act[a][s], sp.rows[s][k], p)) % p;
        check(back == img[a], "character_table: subspace not invariant under class algebra");
    }
    std::vector<Space> out;
    size_t found = 0;
    for (U lam = 0; lam < p && found < d; ++lam) {
        std::vector<std::vector<U>> shifted = act;
        for (size_t a = 0; a < d; ++a) shifted[a][a] = (shifted[a][a] + p - lam) % p;
        auto kern = fp_nullspace(fp_transpose(shifted), p);
        if (kern.empty()) continue;
        Space ns;
        for (const auto& x : kern) {
            std::vector<U> v(n, 0);
            for (size_t a = 0; a < d; ++a)
                for (size_t k = 0; k < n; ++k)
                    v[k] = (v[k] + mulmod_u64(x[a], sp.rows[a][k], p)) % p;
            ns.rows.push_back(v);
        }
        found += ns.rows.size();
        fp_rref(ns.rows, p, ns.piv);
        out.push_back(std::move(ns));
    }
    check(found == d, "character_table: eigenvalues missing from the base field");
    return out;
}

}  // namespace

std::vector<Character> character_table(const ClassData& cd, size_t cap) {
    const Group& g = *cd.group;
    const size_t n = g.size(), r = cd.size();
    check(n <= cap, "character_table: group exceeds the configured size cap");
    const unsigned e = g.exponent();

    // least prime p = 1 mod exponent large enough to pin degrees uniquely
    U p = e + 1;
    while (!(is_prime_u64(p) && p * p > 4 * n && n % p != 0)) p += e;

    // least element of multiplicative order exactly the exponent
    std::vector<unsigned> prime_parts;
    for (unsigned q = 2; q <= e; ++q)
        if (e % q == 0 && is_prime_u64(q)) prime_parts.push_back(q);
    U z = 0;
    for (U x = 2; x < p; ++x) {
        if (powmod_u64(x, e, p) != 1) continue;
        bool exact = true;
        for (unsigned q : prime_parts)
            if (powmod_u64(x, e / q, p) == 1) { exact = false; break; }
        if (exact) { z = x; break; }
    }
    check(z != 0, "character_table: no element of the required order mod p");
    std::vector<U> zpow(e, 1);
    for (unsigned k = 1; k < e; ++k) zpow[k] = mulmod_u64(zpow[k - 1], z, p);

    // class algebra structure constants via one pass over all products
    std::vector<std::vector<std::vector<U>>> cnt(
        r, std::vector<std::vector<U>>(r, std::vector<U>(r, 0)));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            Elt prod = g.mul(static_cast<Elt>(x), static_cast<Elt>(y));
            ++cnt[cd.class_of[x]][cd.class_of[y]][cd.class_of[prod]];
        }
    // row action matrices: t_i[j][k] = a_ijk with a_ijk |C_k| = cnt[i][j][k]
    std::vector<std::vector<std::vector<U>>> act(r);
    for (size_t i = 0; i < r; ++i) {
        act[i].assign(r, std::vector<U>(r, 0));
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k) {
                U ck = cd.classes[k].size();
                check(cnt[i][j][k] % ck == 0, "character_table: uneven structure constant");
                act[i][j][k] = (cnt[i][j][k] / ck) % p;
            }
    }

    // split the column space of the class algebra into common eigenlines
    std::vector<Space> spaces(1);
    spaces[0].rows.assign(r, std::vector<U>(r, 0));
    for (size_t k = 0; k < r; ++k) {
        spaces[0].rows[k][k] = 1;
        spaces[0].piv.push_back(k);
    }
    for (bool progress = true; progress;) {
        progress = false;
        for (size_t i = 1; i < r; ++i) {
            std::vector<Space> next;
            for (auto& sp : spaces) {
                if (sp.rows.size() == 1) {
                    next.push_back(std::move(sp));
                    continue;
                }
                auto parts = split_space(sp, act[i], p);
                if (parts.size() > 1) progress = true;
                for (auto& part : parts) next.push_back(std::move(part));
            }
            spaces = std::move(next);
        }
        bool done = true;
        for (const auto& sp : spaces)
            if (sp.rows.size() != 1) done = false;
        if (done) break;
        check(progress, "character_table: class algebra failed to split");
    }
    check(spaces.size() == r, "character_table: wrong number of eigenlines");

    // eigenvalue of each class sum on each line
    std::vector<std::vector<U>> omega(r, std::vector<U>(r, 0));
    for (size_t t = 0; t < r; ++t) {
        const auto& u = spaces[t].rows[0];
        size_t pv = spaces[t].piv[0];
        for (size_t i = 0; i < r; ++i) {
            std::vector<U> w(r, 0);
            for (size_t j = 0; j < r; ++j) {
                if (u[j] == 0) continue;
                for (size_t k = 0; k < r; ++k)
                    w[k] = (w[k] + mulmod_u64(u[j], act[i][j][k], p)) % p;
            }
            U lam = w[pv];
            for (size_t k = 0; k < r; ++k)
                check(w[k] == mulmod_u64(lam, u[k], p), "character_table: eigenline is not an eigenline");
            omega[t][i] = lam;
        }
    }

    // degrees from the orthogonality relation, unique below p/2
    std::vector<U> deg(r, 0);
    size_t degsum = 0;
    for (size_t t = 0; t < r; ++t) {
        U s = 0;
        for (size_t j = 0; j < r; ++j) {
            U term = mulmod_u64(omega[t][j], omega[t][cd.inverse_class(j)], p);
            s = (s + mulmod_u64(term, fp_inv(cd.classes[j].size() % p, p), p)) % p;
        }
        U dsq = mulmod_u64(n % p, fp_inv(s, p), p);
        for (U d = 1; 2 * d < p; ++d)
            if (mulmod_u64(d, d, p) == dsq) { deg[t] = d; break; }
        check(deg[t] != 0, "character_table: degree not recovered");
        degsum += static_cast<size_t>(deg[t] * deg[t]);
    }
    check(degsum == n, "character_table: degrees fail the sum of squares");

    // modular character values, then lift through eigenvalue multiplicities
    std::vector<std::vector<U>> chimod(r, std::vector<U>(r, 0));
    for (size_t t = 0; t < r; ++t)
        for (size_t j = 0; j < r; ++j)
            chimod[t][j] = mulmod_u64(mulmod_u64(deg[t], omega[t][j], p),
                                      fp_inv(cd.classes[j].size() % p, p), p);
    U einv = fp_inv(e % p, p);
    std::vector<Character> table;
    for (size_t t = 0; t < r; ++t) {
        Character chi;
        chi.cd = &cd;
        for (size_t j = 0; j < r; ++j) {
            CycNum val = CycNum::zero(e);
            U total = 0;
            for (unsigned s = 0; s < e; ++s) {
                U acc = 0;
                for (unsigned k = 0; k < e; ++k) {
                    size_t pc = cd.power_class(j, static_cast<long>(k));
                    U tw = zpow[(e - (static_cast<U>(k) * s) % e) % e];
                    acc = (acc + mulmod_u64(chimod[t][pc], tw, p)) % p;
                }
                U mult = mulmod_u64(acc, einv, p);
                check(mult <= deg[t], "character_table: eigenvalue multiplicity out of range");
                total += mult;
                if (mult != 0)
                    val = val + CycNum::from_int(static_cast<long>(mult)) *
                                    CycNum::root(e, static_cast<long>(s));
            }
            check(total == deg[t], "character_table: multiplicities fail to sum to the degree");
            chi.values.push_back(val);
        }
        check(chi.values[0] == CycNum::from_int(static_cast<long>(deg[t])),
              "character_table: lifted degree mismatch");
        table.push_back(std::move(chi));
    }

    for (size_t s = 0; s < r; ++s)
        for (size_t t = 0; t < r; ++t) {
            Rat want(s == t ? 1 : 0);
            check(inner(table[s], table[t]) == want, "character_table: rows fail orthogonality");
        }

    std::sort(table.begin(), table.end(), [](const Character& a, const Character& b) {
        Rat da = a.degree().to_rat(), db = b.degree().to_rat();
        if (da != db) return da < db;
        for (size_t c = 0; c < a.values.size(); ++c) {
            int s = CycNum::cmp(a.values[c], b.values[c]);
            if (s != 0) return s < 0;
        }
        return false;
    });
    return table;
}

}  // namespace artin
