#include "artin/eigen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "artin/errors.hpp"

namespace artin {

MatrixRep rep_from_matrix_group(const MatrixGroup& mg, const ClassData& cd) {
    check(cd.group == &mg.group, "rep_from_matrix_group: class data built on a different group");
    MatrixRep rep;
    rep.cd = &cd;
    rep.mats = mg.elems;
    return rep;
}

MatrixRep twist_rep(const MatrixRep& rep, const Character& linear) {
    check(linear.cd == rep.cd, "twist_rep: character built on different class data");
    check(linear.values[0] == CycNum::one(1), "twist_rep: twisting character must have degree one");
    MatrixRep out;
    out.cd = rep.cd;
    for (size_t x = 0; x < rep.mats.size(); ++x)
        out.mats.push_back(mat_scale(linear.at(static_cast<Elt>(x)), rep.mats[x]));
    return out;
}

MatrixRep restrict_rep(const MatrixRep& rep, const std::vector<Elt>& h, const ClassData& hcd) {
    check(hcd.group->size() == h.size(), "restrict_rep: subgroup class data has the wrong size");
    MatrixRep out;
    out.cd = &hcd;
    for (Elt e : h) out.mats.push_back(rep.mats[e]);
    return out;
}

bool rep_is_homomorphism(const MatrixRep& rep) {
    const Group& g = *rep.cd->group;
    if (rep.mats.size() != g.size()) return false;
    if (rep.mats[0] != mat_identity(1)) return false;
    for (size_t x = 0; x < g.size(); ++x)
        for (size_t y = 0; y < g.size(); ++y) {
            Elt xy = g.mul(static_cast<Elt>(x), static_cast<Elt>(y));
            if (rep.mats[xy] != rep.mats[x] * rep.mats[y]) return false;
        }
    return true;
}

Character char_of_rep(const MatrixRep& rep) {
    Character chi;
    chi.cd = rep.cd;
    for (size_t c = 0; c < rep.cd->size(); ++c) chi.values.push_back(trace(rep.mats[rep.cd->reps[c]]));
    return chi;
}

namespace {

void sort_multiset(EigenMultiset& s) {
    std::sort(s.begin(), s.end(),
              [](const CycNum& a, const CycNum& b) { return CycNum::cmp(a, b) < 0; });
}

bool same_multiset(const EigenMultiset& a, const EigenMultiset& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

EigenMultiset eigen_multiset(const MatrixRep& rep, Elt g) {
    const Group& gr = *rep.cd->group;
    const unsigned e = gr.exponent();
    std::vector<CycNum> ps;
    for (unsigned k = 1; k <= 4; ++k) ps.push_back(trace(rep.mats[gr.power(g, k)]));
    std::vector<CycNum> el = newton_elementary(ps);
    // ascending coefficients of x^4 - e1 x^3 + e2 x^2 - e3 x + e4
    std::vector<CycNum> c{el[3], -el[2], el[1], -el[0], CycNum::one(1)};
    EigenMultiset roots;
    for (unsigned j = 0; j < e && roots.size() < 4; ++j) {
        CycNum zeta = CycNum::root(e, static_cast<long>(j));
        for (;;) {
            CycNum v = c.back();
            for (size_t i = c.size() - 1; i-- > 0;) v = v * zeta + c[i];
            if (!v.is_zero()) break;
            size_t qs = c.size() - 1;
            std::vector<CycNum> q(qs, CycNum::zero(1));
            q[qs - 1] = c[qs];
            for (size_t i = qs - 1; i-- > 0;) q[i] = c[i + 1] + zeta * q[i + 1];
            c = std::move(q);
            roots.push_back(zeta);
            if (c.size() == 1) break;
        }
    }
    check(roots.size() == 4, "eigen_multiset: eigenvalue outside the exponent-th roots of unity");
    sort_multiset(roots);
    return roots;
}

EigenMultiset pair_products(const EigenMultiset& s) {
    EigenMultiset out;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) out.push_back(s[i] * s[j]);
    sort_multiset(out);
    return out;
}

EigenMultiset power_multiset(const EigenMultiset& s, unsigned k) {
    EigenMultiset out;
    for (const CycNum& v : s) {
        CycNum w = CycNum::one(1);
        for (unsigned i = 0; i < k; ++i) w = w * v;
        out.push_back(w);
    }
    sort_multiset(out);
    return out;
}

std::vector<std::pair<Elt, Elt>> ambiguity_scan(const MatrixRep& rep) {
    const Group& g = *rep.cd->group;
    const size_t n = g.size();
    std::map<std::string, int> ids;
    auto id_of = [&ids](const EigenMultiset& s) {
        std::string k;
        for (const CycNum& v : s) {
            k += v.str();
            k += '|';
        }
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        int fresh = static_cast<int>(ids.size());
        ids.emplace(std::move(k), fresh);
        return fresh;
    };
    std::vector<int> eig(n), ext(n), fifth(n);
    for (size_t x = 0; x < n; ++x) {
        EigenMultiset s = eigen_multiset(rep, static_cast<Elt>(x));
        eig[x] = id_of(s);
        ext[x] = id_of(pair_products(s));
        fifth[x] = id_of(power_multiset(s, 5));
    }
    std::vector<std::pair<Elt, Elt>> bad;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (ext[x] == ext[y] && fifth[x] == fifth[y] && eig[x] != eig[y])
                bad.emplace_back(static_cast<Elt>(x), static_cast<Elt>(y));
    return bad;
}

std::optional<SignFlipWitness> sign_flip_witness(const EigenMultiset& s) {
    // one common field keeps the canonical sort stable across mixed inputs
    unsigned m = 1;
    for (const CycNum& v : s) m = std::lcm(m, v.order());
    EigenMultiset plus;
    for (const CycNum& v : s) plus.push_back(v.promoted(m));
    sort_multiset(plus);
    EigenMultiset minus;
    for (const CycNum& v : plus) minus.push_back(-v);
    sort_multiset(minus);
    if (same_multiset(plus, minus)) return std::nullopt;
    if (!same_multiset(power_multiset(plus, 5), power_multiset(minus, 5))) return std::nullopt;
    std::vector<CycNum> pool = plus;
    pool.insert(pool.end(), minus.begin(), minus.end());
    for (const CycNum& a : pool)
        for (const CycNum& b : pool) {
            if (a.is_zero()) continue;
            CycNum ratio = b / a;
            auto ord = ratio.root_of_unity_order();
            if (ord && *ord == 10) return SignFlipWitness{a, b, ratio, 10};
        }
    throw CheckFailed("sign_flip_witness: matched fifth powers without an order ten ratio");
}

namespace {

size_t cyc_rref(std::vector<std::vector<CycNum>>& m, std::vector<size_t>& piv) {
    piv.clear();
    if (m.empty()) return 0;
    size_t cols = m[0].size(), rank = 0;
    for (size_t c = 0; c < cols && rank < m.size(); ++c) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        CycNum s = m[rank][c].inverse();
        for (auto& x : m[rank]) x = x * s;
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == rank || m[r2][c].is_zero()) continue;
            CycNum f = m[r2][c];
            for (size_t c2 = 0; c2 < cols; ++c2) m[r2][c2] = m[r2][c2] - f * m[rank][c2];
        }
        piv.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return rank;
}

std::vector<std::vector<CycNum>> cyc_nullspace(std::vector<std::vector<CycNum>> m, size_t cols) {
    std::vector<size_t> piv;
    cyc_rref(m, piv);
    std::vector<char> is_piv(cols, 0);
    for (size_t c : piv) is_piv[c] = 1;
    std::vector<std::vector<CycNum>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<CycNum> v(cols, CycNum::zero(1));
        v[f] = CycNum::one(1);
        for (size_t t = 0; t < piv.size(); ++t) v[piv[t]] = -m[t][f];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

InvariantForm symplectic_form(const MatrixRep& rep, const std::vector<Character>& linears,
                              const std::vector<Elt>& gens) {
    const Group& g = *rep.cd->group;
    InvariantForm out;
    int hits = 0;
    for (const Character& nu : linears) {
        check(nu.cd == rep.cd, "symplectic_form: similitude candidate on different class data");
        check(nu.values[0] == CycNum::one(1), "symplectic_form: candidate must have degree one");
        std::vector<std::vector<CycNum>> rows;
        for (Elt ge : gens) {
            const Mat4& m = rep.mats[ge];
            CycNum scale = nu.at(ge);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    std::vector<CycNum> row(16, CycNum::zero(1));
                    for (int k = 0; k < 4; ++k)
                        for (int l = 0; l < 4; ++l) row[4 * k + l] = m.at(k, r) * m.at(l, c);
                    row[4 * r + c] = row[4 * r + c] - scale;
                    rows.push_back(std::move(row));
                }
        }
        auto basis = cyc_nullspace(std::move(rows), 16);
        if (basis.size() != 1) continue;
        ++hits;
        out.nu = nu;
        out.j = mat_zero(1);
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) out.j.at(k, l) = basis[0][4 * k + l];
    }
    check(hits == 1, "symplectic_form: invariant form line not unique across candidates");
    check(transpose(out.j) == -out.j, "symplectic_form: form not antisymmetric");
    check(!det(out.j).is_zero(), "symplectic_form: form degenerate");
    for (size_t x = 0; x < g.size(); ++x) {
        const Mat4& m = rep.mats[x];
        Mat4 lhs = transpose(m) * out.j * m;
        if (lhs != mat_scale(out.nu.at(static_cast<Elt>(x)), out.j))
            throw CheckFailed("symplectic_form: invariance fails off the generators");
    }
    return out;
}

}  // namespace artin
