#include "artin/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "artin/errors.hpp"

namespace artin {

Group::Group(std::vector<std::vector<Elt>> table) : table_(std::move(table)) {
    const size_t n = table_.size();
    check(n > 0, "Group: empty table");
    for (const auto& row : table_) check(row.size() == n, "Group: table not square");
    for (Elt j = 0; j < n; ++j) {
        check(table_[0][j] == j, "Group: element 0 is not a left identity");
        check(table_[j][0] == j, "Group: element 0 is not a right identity");
    }
    inv_.assign(n, 0);
    for (Elt a = 0; a < n; ++a) {
        bool found = false;
        for (Elt b = 0; b < n; ++b) {
            if (table_[a][b] == 0) {
                check(table_[b][a] == 0, "Group: one-sided inverse");
                inv_[a] = b;
                found = true;
                break;
            }
        }
        check(found, "Group: element without inverse");
    }
}

Elt Group::power(Elt a, long k) const {
    Elt base = a;
    if (k < 0) {
        base = inv_[a];
        k = -k;
    }
    Elt r = 0;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

unsigned Group::element_order(Elt a) const {
    unsigned ord = 1;
    Elt x = a;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

unsigned Group::exponent() const {
    unsigned e = 1;
    for (Elt a = 0; a < size(); ++a) e = std::lcm(e, element_order(a));
    return e;
}

std::map<unsigned, size_t> Group::order_histogram() const {
    std::map<unsigned, size_t> h;
    for (Elt a = 0; a < size(); ++a) ++h[element_order(a)];
    return h;
}

bool Group::is_abelian() const {
    for (Elt a = 0; a < size(); ++a)
        for (Elt b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<Elt> Group::center() const {
    std::vector<Elt> z;
    for (Elt a = 0; a < size(); ++a) {
        bool central = true;
        for (Elt b = 0; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) {
                central = false;
                break;
            }
        if (central) z.push_back(a);
    }
    return z;
}

bool Group::check_associativity() const {
    const size_t n = size();
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            Elt ab = mul(a, b);
            for (Elt c = 0; c < n; ++c)
                if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
    return true;
}

std::vector<std::vector<Elt>> Group::conjugacy_classes() const {
    const size_t n = size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Elt>> classes;
    for (Elt a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::set<Elt> cls;
        for (Elt g = 0; g < n; ++g) cls.insert(conj(g, a));
        std::vector<Elt> v(cls.begin(), cls.end());
        for (Elt x : v) seen[x] = 1;
        classes.push_back(std::move(v));
    }
    std::sort(classes.begin(), classes.end(),
              [this](const std::vector<Elt>& x, const std::vector<Elt>& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  unsigned ox = element_order(x[0]), oy = element_order(y[0]);
                  if (ox != oy) return ox < oy;
                  return x[0] < y[0];
              });
    return classes;
}

std::vector<size_t> Group::class_map(const std::vector<std::vector<Elt>>& classes) const {
    std::vector<size_t> m(size(), 0);
    for (size_t i = 0; i < classes.size(); ++i)
        for (Elt x : classes[i]) m[x] = i;
    return m;
}

std::vector<Elt> Group::closure(const std::vector<Elt>& gens) const {
    std::vector<char> in(size(), 0);
    in[0] = 1;
    std::vector<Elt> members{0}, frontier{0};
    while (!frontier.empty()) {
        std::vector<Elt> next;
        for (Elt x : frontier)
            for (Elt g : gens) {
                Elt y = mul(x, g);
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool Group::is_subgroup(const std::vector<Elt>& h) const {
    if (h.empty() || h[0] != 0) return false;
    std::vector<char> in(size(), 0);
    for (Elt x : h) in[x] = 1;
    for (Elt x : h)
        for (Elt y : h)
            if (!in[mul(x, y)]) return false;
    return true;
}

bool Group::is_normal(const std::vector<Elt>& h) const {
    std::vector<char> in(size(), 0);
    for (Elt x : h) in[x] = 1;
    for (Elt g = 0; g < size(); ++g)
        for (Elt x : h)
            if (!in[conj(g, x)]) return false;
    return true;
}

namespace {

using Mask = std::vector<uint64_t>;

Mask mask_of(const std::vector<Elt>& members, size_t n) {
    Mask m((n + 63) / 64, 0);
    for (Elt x : members) m[x >> 6] |= uint64_t(1) << (x & 63);
    return m;
}

std::vector<Elt> mask_members(const Mask& m, size_t n) {
    std::vector<Elt> v;
    for (size_t x = 0; x < n; ++x)
        if (m[x >> 6] >> (x & 63) & 1) v.push_back(static_cast<Elt>(x));
    return v;
}

}  // namespace

std::vector<std::vector<Elt>> Group::all_subgroups() const {
    const size_t n = size();
    std::set<Mask> seen;
    std::vector<Mask> subs;
    auto add = [&](const Mask& m) {
        if (seen.insert(m).second) subs.push_back(m);
    };
    for (Elt a = 0; a < n; ++a) add(mask_of(closure({a}), n));
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Mask uni = subs[i];
            for (size_t w = 0; w < uni.size(); ++w) uni[w] |= subs[j][w];
            if (uni == subs[i] || uni == subs[j]) continue;
            add(mask_of(closure(mask_members(uni, n)), n));
        }
    std::vector<std::vector<Elt>> out;
    out.reserve(subs.size());
    for (const Mask& m : subs) out.push_back(mask_members(m, n));
    std::sort(out.begin(), out.end(), [](const std::vector<Elt>& x, const std::vector<Elt>& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

Group Group::subgroup(const std::vector<Elt>& h) const {
    check(is_subgroup(h), "Group::subgroup: not a subgroup");
    check(std::is_sorted(h.begin(), h.end()), "Group::subgroup: members not ascending");
    std::vector<Elt> pos(size(), 0);
    for (size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<Elt>(i);
    std::vector<std::vector<Elt>> t(h.size(), std::vector<Elt>(h.size()));
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < h.size(); ++j) t[i][j] = pos[mul(h[i], h[j])];
    return Group(std::move(t));
}

std::vector<Elt> Group::transversal(const std::vector<Elt>& h) const {
    std::vector<char> covered(size(), 0);
    std::vector<Elt> reps;
    for (Elt g = 0; g < size(); ++g) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (Elt x : h) covered[mul(g, x)] = 1;
    }
    return reps;
}

Group::Quotient Group::quotient(const std::vector<Elt>& normal) const {
    check(is_subgroup(normal), "Group::quotient: not a subgroup");
    check(is_normal(normal), "Group::quotient: not normal");
    const size_t n = size();
    std::vector<Elt> proj(n, 0);
    std::vector<char> assigned(n, 0);
    std::vector<std::vector<Elt>> cosets;
    for (Elt g = 0; g < n; ++g) {
        if (assigned[g]) continue;
        std::vector<Elt> coset;
        for (Elt x : normal) coset.push_back(mul(g, x));
        std::sort(coset.begin(), coset.end());
        Elt idx = static_cast<Elt>(cosets.size());
        for (Elt y : coset) {
            proj[y] = idx;
            assigned[y] = 1;
        }
        cosets.push_back(std::move(coset));
    }
    std::vector<std::vector<Elt>> t(cosets.size(), std::vector<Elt>(cosets.size()));
    for (size_t i = 0; i < cosets.size(); ++i)
        for (size_t j = 0; j < cosets.size(); ++j) t[i][j] = proj[mul(cosets[i][0], cosets[j][0])];
    return Quotient{Group(std::move(t)), std::move(proj), std::move(cosets)};
}

Group cyclic_group(unsigned n) {
    std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) t[i][j] = static_cast<Elt>((i + j) % n);
    return Group(std::move(t));
}

Elt MatrixGroup::find(const Mat4& m) const {
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == m) return static_cast<Elt>(i);
    throw CheckFailed("MatrixGroup::find: matrix not in group");
}

MatrixGroup close_generators(const std::vector<Mat4>& gens, size_t cap) {
    check(!gens.empty(), "close_generators: no generators");
    unsigned ord = 1;
    for (const Mat4& g : gens)
        for (const CycNum& e : g.a) ord = std::lcm(ord, e.order());
    std::vector<Mat4> G;
    G.reserve(gens.size());
    for (const Mat4& g : gens) G.push_back(mat_promoted(g, ord));

    std::map<Mat4, Elt, MatLess> index;
    std::vector<Mat4> elems{mat_identity(ord)};
    std::vector<std::pair<int, int>> words{{-1, -1}};
    index.emplace(elems[0], 0);
    // edge[x][gi] = index of elems[x] * gens[gi]
    std::vector<std::vector<Elt>> edge;

    size_t layer_lo = 0;
    while (layer_lo < elems.size()) {
        size_t layer_hi = elems.size();
        struct Prod {
            size_t src;
            size_t gi;
            Mat4 m;
        };
        std::vector<Prod> prods;
        std::vector<Mat4> fresh;
        for (size_t x = layer_lo; x < layer_hi; ++x)
            for (size_t gi = 0; gi < G.size(); ++gi) {
                Mat4 p = elems[x] * G[gi];
                if (index.find(p) == index.end()) fresh.push_back(p);
                prods.push_back(Prod{x, gi, std::move(p)});
            }
        std::sort(fresh.begin(), fresh.end(), MatLess{});
        fresh.erase(std::unique(fresh.begin(), fresh.end(),
                                [](const Mat4& a, const Mat4& b) { return a == b; }),
                    fresh.end());
        for (Mat4& m : fresh) {
            if (elems.size() >= cap) throw ClosureOverflow("close_generators: cap exceeded");
            index.emplace(m, static_cast<Elt>(elems.size()));
            elems.push_back(std::move(m));
            words.emplace_back(-2, -2);
        }
        edge.resize(elems.size());
        for (size_t x = layer_lo; x < layer_hi; ++x) edge[x].assign(G.size(), 0);
        for (const Prod& p : prods) {
            Elt t = index.at(p.m);
            edge[p.src][p.gi] = t;
            if (words[t].first == -2) words[t] = {static_cast<int>(p.src), static_cast<int>(p.gi)};
        }
        layer_lo = layer_hi;
    }

    const size_t n = elems.size();
    std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
    for (size_t i = 0; i < n; ++i) table[i][0] = static_cast<Elt>(i);
    for (size_t j = 1; j < n; ++j) {
        auto [p, gi] = words[j];
        for (size_t i = 0; i < n; ++i)
            table[i][j] = edge[table[i][static_cast<size_t>(p)]][static_cast<size_t>(gi)];
    }

    std::vector<Elt> gen_index;
    gen_index.reserve(G.size());
    for (const Mat4& g : G) gen_index.push_back(index.at(g));
    return MatrixGroup{Group(std::move(table)), std::move(elems), std::move(words),
                       std::move(gen_index)};
}

}  // namespace artin
