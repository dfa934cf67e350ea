#include "artin/lfunction.hpp"

#include <array>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"
#include "artin/splitting.hpp"

namespace artin {

std::string LocalFactor::str() const {
    std::string out = "[";
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k) out += ", ";
        out += coeffs[k].str();
    }
    return out + "]";
}

bool operator==(const LocalFactor& a, const LocalFactor& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (size_t k = 0; k < a.coeffs.size(); ++k)
        if (a.coeffs[k] != b.coeffs[k]) return false;
    return true;
}

LocalFactor lf_one() { return LocalFactor{{CycNum::one(1)}}; }

LocalFactor lf_mul(const LocalFactor& a, const LocalFactor& b) {
    check(!a.coeffs.empty() && !b.coeffs.empty(), "lf_mul: empty factor");
    LocalFactor out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, CycNum::from_int(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    return out;
}

LocalFactor lf_pow(const LocalFactor& a, unsigned long k) {
    LocalFactor out = lf_one();
    for (unsigned long i = 0; i < k; ++i) out = lf_mul(out, a);
    return out;
}

LocalFactor lf_scale_t(const LocalFactor& a, const CycNum& w) {
    LocalFactor out = a;
    CycNum power = CycNum::one(w.order());
    for (size_t k = 1; k < out.coeffs.size(); ++k) {
        power = power * w;
        out.coeffs[k] = out.coeffs[k] * power;
    }
    return out;
}

namespace {

// 1 - v T^f
LocalFactor lf_cyclic(const CycNum& v, size_t f) {
    LocalFactor out;
    out.coeffs.assign(f + 1, CycNum::from_int(0));
    out.coeffs[0] = CycNum::one(1);
    out.coeffs[f] = -v;
    return out;
}

unsigned long character_dim(const Character& chi, const char* where) {
    const CycNum& deg = chi.degree();
    check(deg.is_rational(), std::string(where) + ": degree is not rational");
    Rat d = deg.to_rat();
    check(rat_is_integer(d) && d >= 0, std::string(where) + ": degree is not a non-negative integer");
    return d.get_num().get_ui();
}

}  // namespace

LocalFactor local_factor(const Character& chi, size_t c) {
    check(chi.cd != nullptr, "local_factor: character has no class data");
    const ClassData& cd = *chi.cd;
    check(c < cd.size(), "local_factor: class index out of range");
    unsigned long n = character_dim(chi, "local_factor");

    std::vector<CycNum> power_sums;
    power_sums.reserve(n);
    for (unsigned long k = 1; k <= n; ++k)
        power_sums.push_back(chi.at_class(cd.power_class(c, static_cast<long>(k))));
    std::vector<CycNum> e = newton_elementary(power_sums);

    LocalFactor out;
    out.coeffs.assign(n + 1, CycNum::from_int(0));
    out.coeffs[0] = CycNum::one(1);
    for (unsigned long k = 1; k <= n; ++k) out.coeffs[k] = (k % 2) ? -e[k - 1] : e[k - 1];
    return out;
}

LocalFactor det_one_minus_t(const Mat4& m) {
    unsigned order = m.a[0].order();
    std::array<CycNum, 5> value;
    for (int t = 0; t < 5; ++t) {
        Mat4 x = mat_identity(order) + (-mat_scale(CycNum::from_int(t), m));
        value[static_cast<size_t>(t)] = det(x);
    }

    LocalFactor out;
    out.coeffs.assign(5, CycNum::from_int(0));
    for (int k = 0; k < 5; ++k) {
        PolyQ basis = PolyQ::constant(Rat(1));
        Rat denom(1);
        for (int j = 0; j < 5; ++j) {
            if (j == k) continue;
            basis = basis * PolyQ({rat(-j), rat(1)});
            denom *= rat(k - j);
        }
        basis = basis * (Rat(1) / denom);
        for (size_t i = 0; i < 5; ++i)
            out.coeffs[i] = out.coeffs[i] + value[static_cast<size_t>(k)] * CycNum::from_rat(basis.coeff(i));
    }
    check(out.coeffs[0] == CycNum::one(1), "det_one_minus_t: constant term is not one");
    return out;
}

IdentityReport verify_direct_sum(const Character& chi, const std::vector<Character>& parts) {
    check(chi.cd != nullptr, "direct_sum: character has no class data");
    for (const Character& part : parts)
        check(part.cd == chi.cd, "direct_sum: parts live on different class data");

    IdentityReport report;
    report.name = "direct_sum";
    for (size_t c = 0; c < chi.cd->size(); ++c) {
        LocalFactor rhs = lf_one();
        for (const Character& part : parts) rhs = lf_mul(rhs, local_factor(part, c));
        bool good = local_factor(chi, c) == rhs;
        report.ok.push_back(good);
        if (!good && report.counterexample < 0) report.counterexample = static_cast<long>(c);
    }
    return report;
}

IdentityReport verify_inductivity(const Character& lam, const std::vector<Elt>& h,
                                  const ClassData& cd) {
    const Group& g = *cd.group;
    check(lam.cd != nullptr, "inductivity: character has no class data");
    check(lam.cd->group->size() == h.size(), "inductivity: character is not on the listed subgroup");
    check(lam.degree() == CycNum::one(1), "inductivity: character is not linear");
    check(g.size() == 5 * h.size(), "inductivity: subgroup index is not five");
    check(g.is_normal(h), "inductivity: subgroup is not normal");

    std::vector<long> pos(g.size(), -1);
    for (size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<long>(i);
    std::vector<Elt> reps = g.transversal(h);
    auto coset_of = [&](Elt y) {
        for (size_t i = 0; i < reps.size(); ++i)
            if (pos[g.mul(g.inv(reps[i]), y)] >= 0) return i;
        throw CheckFailed("inductivity: element outside every coset");
    };

    Character ind = induce_character(lam, h, cd);
    IdentityReport report;
    report.name = "inductivity";
    for (size_t c = 0; c < cd.size(); ++c) {
        Elt r = cd.reps[c];
        std::array<size_t, 5> image{};
        for (size_t i = 0; i < 5; ++i) image[i] = coset_of(g.mul(r, reps[i]));

        LocalFactor rhs = lf_one();
        std::array<bool, 5> seen{};
        size_t first_len = 0;
        for (size_t i = 0; i < 5; ++i) {
            if (seen[i]) continue;
            size_t len = 0, j = i;
            do {
                seen[j] = true;
                j = image[j];
                ++len;
            } while (j != i);
            if (first_len == 0) first_len = len;
            check(len == first_len, "inductivity: coset orbits of unequal length");
            Elt t = g.mul(g.inv(reps[i]), g.mul(g.power(r, static_cast<long>(len)), reps[i]));
            check(pos[t] >= 0, "inductivity: orbit product escapes the subgroup");
            rhs = lf_mul(rhs, lf_cyclic(lam.at(static_cast<Elt>(pos[t])), len));
        }

        bool good = local_factor(ind, c) == rhs;
        report.ok.push_back(good);
        if (!good && report.counterexample < 0) report.counterexample = static_cast<long>(c);
    }
    return report;
}

IdentityReport verify_dedekind(const ClassData& cd, const std::vector<Character>& table) {
    const Group& g = *cd.group;
    IdentityReport report;
    report.name = "dedekind";
    for (size_t c = 0; c < cd.size(); ++c) {
        LocalFactor lhs = lf_one();
        for (const Character& chi : table) {
            check(chi.cd == &cd, "dedekind: table row on different class data");
            lhs = lf_mul(lhs, lf_pow(local_factor(chi, c), character_dim(chi, "dedekind")));
        }
        unsigned m = g.element_order(cd.reps[c]);
        check(g.size() % m == 0, "dedekind: element order does not divide the group order");
        LocalFactor rhs = lf_pow(lf_cyclic(CycNum::one(1), m), g.size() / m);

        bool good = lhs == rhs;
        report.ok.push_back(good);
        if (!good && report.counterexample < 0) report.counterexample = static_cast<long>(c);
    }
    return report;
}

IdentityReport dirichlet_cross_check(const PolyQ& quintic, uint64_t bound) {
    check(bound >= 100, "dirichlet: bound below one hundred");
    check(quintic.degree() == 5, "dirichlet: polynomial is not quintic");

    IdentityReport report;
    report.name = "dirichlet";
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(bound))) {
        SplittingType shape = split_prime(quintic, p);
        bool good = true;
        if (!shape.ramified) {
            int pos = cyclic_position(p);
            LocalFactor lhs = lf_one();
            for (int f : shape.degrees) lhs = lf_mul(lhs, lf_cyclic(CycNum::one(1), static_cast<size_t>(f)));
            LocalFactor rhs = lf_one();
            for (long j = 0; j < 5; ++j) rhs = lf_mul(rhs, lf_cyclic(CycNum::root(5, j * pos), 1));
            good = lhs == rhs;
        }
        report.ok.push_back(good);
        if (!good && report.counterexample < 0)
            report.counterexample = static_cast<long>(report.ok.size()) - 1;
    }
    return report;
}

}  // namespace artin
