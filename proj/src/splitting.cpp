#include "artin/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"
#include "artin/numberfield.hpp"

namespace artin {

std::string SplittingType::str() const {
    std::string s;
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(degrees[i]);
    }
    if (ramified) s += '*';
    return s;
}

namespace {

// dense polynomials over F_p, coefficients ascending, no trailing zeros
using UPoly = std::vector<uint64_t>;

void ptrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly psub(const UPoly& a, const UPoly& b, uint64_t p) {
    UPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    ptrim(r);
    return r;
}

UPoly pmul(const UPoly& a, const UPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
        }
    }
    ptrim(r);
    return r;
}

std::pair<UPoly, UPoly> pdivmod(const UPoly& a, const UPoly& b, uint64_t p) {
    check(!b.empty(), "pdivmod: division by zero");
    if (pdeg(a) < pdeg(b)) return {{}, a};
    const int db = pdeg(b);
    uint64_t inv_lead = powmod_u64(b.back(), p - 2, p);
    UPoly r = a;
    UPoly q(static_cast<size_t>(pdeg(a) - db) + 1, 0);
    for (int i = pdeg(a); i >= db; --i) {
        uint64_t c = mulmod_u64(r[static_cast<size_t>(i)], inv_lead, p);
        if (c == 0) continue;
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            r[k] = (r[k] + p - mulmod_u64(c, b[static_cast<size_t>(j)], p)) % p;
        }
    }
    ptrim(r);
    return {std::move(q), std::move(r)};
}

UPoly pmonic(UPoly a, uint64_t p) {
    if (a.empty() || a.back() == 1) return a;
    uint64_t inv = powmod_u64(a.back(), p - 2, p);
    for (uint64_t& c : a) c = mulmod_u64(c, inv, p);
    return a;
}

UPoly pgcd(UPoly a, UPoly b, uint64_t p) {
    while (!b.empty()) {
        UPoly r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a), p);
}

UPoly pderiv(const UPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) {
        r[i - 1] = mulmod_u64(a[i], i % p, p);
    }
    ptrim(r);
    return r;
}

// a^e mod f
UPoly ppowmod(UPoly a, uint64_t e, const UPoly& f, uint64_t p) {
    UPoly r = {1};
    a = pdivmod(a, f, p).second;
    while (e) {
        if (e & 1) r = pdivmod(pmul(r, a, p), f, p).second;
        a = pdivmod(pmul(a, a, p), f, p).second;
        e >>= 1;
    }
    return r;
}

}  // namespace

SplittingType split_prime(const PolyQ& f, uint64_t p) {
    check(is_prime_u64(p), "split_prime: modulus must be prime");
    check(f.degree() >= 1, "split_prime: constant polynomial");
    UPoly fb = poly_mod(f, p);
    ptrim(fb);
    check(pdeg(fb) == f.degree(), "split_prime: leading coefficient vanishes mod p");

    SplittingType out;
    UPoly rem = fb;
    UPoly g = pgcd(fb, pderiv(fb, p), p);
    if (pdeg(g) > 0) {
        out.ramified = true;
        rem = pdivmod(fb, g, p).first;
    }
    rem = pmonic(std::move(rem), p);

    const UPoly x = {0, 1};
    UPoly h = pdivmod(x, rem, p).second;
    int d = 0;
    while (pdeg(rem) > 0 && 2 * (d + 1) <= pdeg(rem)) {
        ++d;
        h = ppowmod(std::move(h), p, rem, p);
        UPoly split = pgcd(psub(h, x, p), rem, p);
        if (pdeg(split) > 0) {
            for (int i = 0; i < pdeg(split) / d; ++i) out.degrees.push_back(d);
            rem = pdivmod(rem, split, p).first;
            h = pdivmod(h, rem, p).second;
        }
    }
    if (pdeg(rem) > 0) out.degrees.push_back(pdeg(rem));
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

namespace {

// position of each nonzero residue mod 11 in (Z/11)*/{+-1}, as a power of
// the class of 2
constexpr int kCyclicPos[11] = {-1, 0, 1, 3, 2, 4, 4, 2, 3, 1, 0};

}  // namespace

int cyclic_position(uint64_t p) {
    uint64_t r = p % 11;
    check(r != 0, "cyclic_position: 11 divides p");
    return kCyclicPos[r];
}

int base_field_residue_degree(uint64_t p) {
    return cyclic_position(p) == 0 ? 1 : 5;
}

bool FingerprintTable::labeled() const {
    for (int l : labels) {
        if (l >= 0) return true;
    }
    return false;
}

FingerprintTable fingerprint_table(const Group& g,
                                   const std::vector<std::vector<Elt>>& stabilizers,
                                   const std::vector<std::string>& columns) {
    check(stabilizers.size() == columns.size(), "fingerprint_table: column count mismatch");
    FingerprintTable t;
    t.group_order = g.size();
    t.classes = g.conjugacy_classes();
    t.class_of = g.class_map(t.classes);
    t.columns = columns;
    t.labels.assign(t.classes.size(), -1);
    t.rows.assign(t.classes.size(), {});

    for (const auto& h : stabilizers) {
        check(g.is_subgroup(h), "fingerprint_table: stabilizer is not a subgroup");
        std::vector<Elt> reps = g.transversal(h);
        std::vector<size_t> coset_of(g.size());
        for (size_t i = 0; i < reps.size(); ++i) {
            for (Elt x : h) coset_of[g.mul(reps[i], x)] = i;
        }
        for (size_t c = 0; c < t.classes.size(); ++c) {
            Elt a = t.classes[c][0];
            std::vector<char> seen(reps.size(), 0);
            SplittingType shape;
            for (size_t start = 0; start < reps.size(); ++start) {
                if (seen[start]) continue;
                int len = 0;
                size_t i = start;
                while (!seen[i]) {
                    seen[i] = 1;
                    ++len;
                    i = coset_of[g.mul(a, reps[i])];
                }
                shape.degrees.push_back(len);
            }
            std::sort(shape.degrees.begin(), shape.degrees.end());
            t.rows[c].push_back(std::move(shape));
        }
    }
    return t;
}

void attach_cyclic_labels(FingerprintTable& table, const std::vector<int>& element_label) {
    check(element_label.size() == table.group_order,
          "attach_cyclic_labels: label count mismatch");
    for (size_t c = 0; c < table.classes.size(); ++c) {
        int l = element_label[table.classes[c][0]];
        for (Elt e : table.classes[c]) {
            check(element_label[e] == l, "attach_cyclic_labels: label not constant on a class");
        }
        table.labels[c] = l;
    }
}

FrobeniusReport frobenius_class(const FingerprintTable& table,
                                const std::vector<PolyQ>& column_polys, uint64_t p) {
    check(column_polys.size() == table.columns.size(),
          "frobenius_class: column count mismatch");
    FrobeniusReport r;
    r.p = p;
    if (excluded_prime(p)) {
        r.skipped = true;
        r.skip_reason = "excluded";
        return r;
    }
    for (const PolyQ& f : column_polys) r.observed.push_back(split_prime(f, p));
    for (const SplittingType& s : r.observed) {
        if (s.ramified) {
            r.skipped = true;
            r.skip_reason = "ramified";
            return r;
        }
    }
    r.cyclic_pos = cyclic_position(p);
    for (size_t c = 0; c < table.rows.size(); ++c) {
        if (table.rows[c] == r.observed) r.raw_candidates.push_back(c);
    }
    if (table.labeled()) {
        for (size_t c : r.raw_candidates) {
            if (table.labels[c] == r.cyclic_pos) r.candidates.push_back(c);
        }
    } else {
        r.candidates = r.raw_candidates;
    }
    return r;
}

ChebotarevReport chebotarev_histogram(const FingerprintTable& table,
                                      const std::vector<PolyQ>& column_polys,
                                      uint64_t bound) {
    ChebotarevReport rep;
    rep.bound = bound;

    std::map<std::string, size_t> cell_index;
    std::vector<size_t> cell_of(table.classes.size());
    for (size_t c = 0; c < table.classes.size(); ++c) {
        std::string key = std::to_string(table.labels[c]);
        for (const SplittingType& s : table.rows[c]) key += "|" + s.str();
        auto [it, fresh] = cell_index.emplace(key, rep.cells.size());
        if (fresh) rep.cells.push_back({});
        ChebotarevCell& cell = rep.cells[it->second];
        if (!cell.key.empty()) cell.key += '+';
        cell.key += std::to_string(c);
        cell.classes.push_back(c);
        cell.expected += static_cast<double>(table.class_size(c)) /
                         static_cast<double>(table.group_order);
        cell_of[c] = it->second;
    }

    for (uint32_t p : primes_up_to(static_cast<uint32_t>(bound))) {
        FrobeniusReport fr = frobenius_class(table, column_polys, p);
        if (fr.skipped) {
            rep.skipped.push_back(p);
            continue;
        }
        check(!fr.candidates.empty(), "chebotarev_histogram: no class matches p=" +
                                          std::to_string(p));
        ++rep.cells[cell_of[fr.candidates[0]]].count;
        ++rep.used;
    }

    for (const ChebotarevCell& cell : rep.cells) {
        if (cell.expected <= 0 || cell.expected >= 1 || rep.used == 0) continue;
        double n = static_cast<double>(rep.used);
        double q = cell.expected;
        double dev = std::fabs(static_cast<double>(cell.count) - n * q) /
                     std::sqrt(n * q * (1 - q));
        rep.max_sigma = std::max(rep.max_sigma, dev);
    }
    return rep;
}

namespace {

// left rotation of a 5-bit sign pattern
unsigned rot5(unsigned v, unsigned j) {
    unsigned r = 0;
    for (unsigned i = 0; i < 5; ++i) {
        if (v >> ((i + 5 - j) % 5) & 1u) r |= 1u << i;
    }
    return r;
}

}  // namespace

const OrbitModel& orbit_model() {
    static const OrbitModel model = [] {
        std::vector<std::vector<Elt>> table(160, std::vector<Elt>(160));
        for (unsigned j = 0; j < 5; ++j) {
            for (unsigned v = 0; v < 32; ++v) {
                for (unsigned k = 0; k < 5; ++k) {
                    for (unsigned w = 0; w < 32; ++w) {
                        table[32 * j + v][32 * k + w] =
                            static_cast<Elt>(32 * ((j + k) % 5) + (v ^ rot5(w, j)));
                    }
                }
            }
        }
        OrbitModel m{Group(std::move(table)), {}, {}, {}};
        for (unsigned e = 0; e < 160; ++e) m.label_of.push_back(static_cast<int>(e / 32));
        for (unsigned v = 0; v < 32; ++v) m.stab_base.push_back(static_cast<Elt>(v));
        for (unsigned v = 0; v < 32; ++v) {
            if (!(v & 1u)) m.stab_quad.push_back(static_cast<Elt>(v));
        }
        return m;
    }();
    return model;
}

const FingerprintTable& orbit_table() {
    static const FingerprintTable table = [] {
        const OrbitModel& m = orbit_model();
        FingerprintTable t =
            fingerprint_table(m.gamma, {m.stab_base, m.stab_quad}, {"E", "E(sqrt)"});
        attach_cyclic_labels(t, m.label_of);
        return t;
    }();
    return table;
}

}  // namespace artin
