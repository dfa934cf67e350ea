#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "artin/errors.hpp"
#include "artin/intutil.hpp"
#include "artin/lfunction.hpp"
#include "artin/splitting.hpp"
#include "artin/standard_groups.hpp"

namespace artin {

PartialL partial_l(const Character& chi, const ClassSource& source, double s_re, double s_im,
                   uint64_t bound, unsigned prec) {
    check(chi.cd != nullptr, "partial_l: character has no class data");
    check(s_re > 1.0, "partial_l: real part of s must exceed one");
    check(bound >= 2 && bound <= 0xffffffffull, "partial_l: bound out of range");

    PartialL out;
    out.bound = bound;
    out.s = ComplexApprox(prec);
    out.s.re = BigFloat::from_double(s_re, prec);
    out.s.im = BigFloat::from_double(s_im, prec);
    out.value = ComplexApprox(prec);
    out.value.re = BigFloat::from_long(1, prec);

    std::vector<std::vector<ComplexApprox>> embedded(chi.cd->size());
    std::vector<bool> ready(chi.cd->size(), false);

    for (uint32_t p : primes_up_to(static_cast<uint32_t>(bound))) {
        PrimeClasses assigned = source(p);
        if (assigned.skipped) {
            out.skipped.push_back({p, assigned.reason});
            continue;
        }
        check(!assigned.candidates.empty(), "partial_l: empty candidate set");
        if (assigned.candidates.size() != 1) {
            out.skipped.push_back({p, "ambiguous"});
            continue;
        }
        size_t c = assigned.candidates[0];
        check(c < chi.cd->size(), "partial_l: candidate class out of range");
        if (!ready[c]) {
            LocalFactor factor = local_factor(chi, c);
            embedded[c].reserve(factor.coeffs.size());
            for (const CycNum& coeff : factor.coeffs) embedded[c].push_back(embed(coeff, prec));
            ready[c] = true;
        }
        const std::vector<ComplexApprox>& coeffs = embedded[c];
        ComplexApprox t = power_negatives(static_cast<double>(p), out.s);
        ComplexApprox v = coeffs.back();
        for (size_t k = coeffs.size() - 1; k-- > 0;) v = v * t + coeffs[k];
        out.value = out.value / v;
        ++out.used;
    }
    return out;
}

double euler_tail_bound(unsigned deg, double sigma, uint64_t x) {
    check(sigma > 1.0, "tail bound: sigma must exceed one");
    check(x >= 2, "tail bound: cutoff below the first prime");
    return 2.0 * deg * std::pow(static_cast<double>(x), 1.0 - sigma) / (sigma - 1.0);
}

ClassSource identity_source() {
    return [](uint64_t) {
        PrimeClasses out;
        out.candidates = {0};
        return out;
    };
}

ClassSource dirichlet_source() {
    return [](uint64_t p) {
        PrimeClasses out;
        if (p % 11 == 0) {
            out.skipped = true;
            out.reason = "ramified";
            return out;
        }
        out.candidates = {static_cast<size_t>(cyclic_position(p))};
        return out;
    };
}

ClassTransport orbit_to_matrix_transport(const ClassData& cd) {
    const StandardPack& pack = standard_pack();
    check(cd.group == &pack.g.group, "transport: class data is not on the standard matrix group");
    const OrbitModel& om = orbit_model();
    const FingerprintTable& table = orbit_table();
    const Group& g = pack.g.group;

    std::vector<Elt> sub(pack.e32_in_g.begin(), pack.e32_in_g.end());
    std::sort(sub.begin(), sub.end());
    Group::Quotient quo = g.quotient(sub);
    check(quo.group.size() == 5, "transport: phase subgroup index is not five");
    Elt gen = quo.proj[pack.u_in_g];
    std::array<int, 5> label_of_coset;
    label_of_coset.fill(-1);
    for (int k = 0; k < 5; ++k) label_of_coset[quo.group.power(gen, k)] = k;
    for (int lab : label_of_coset) check(lab >= 0, "transport: quotient is not generated by u");
    auto glabel = [&](Elt e) { return label_of_coset[quo.proj[e]]; };

    size_t id_class = cd.class_of[0];
    size_t minus_class = cd.class_of[pack.minus_one_g];
    long involution = -1;
    for (size_t e = 0; e < g.size(); ++e) {
        if (static_cast<Elt>(e) == pack.minus_one_g) continue;
        if (g.element_order(static_cast<Elt>(e)) == 2) {
            involution = static_cast<long>(e);
            break;
        }
    }
    check(involution >= 0, "transport: no noncentral involution");
    size_t involution_class = cd.class_of[static_cast<size_t>(involution)];

    std::vector<size_t> quad;
    std::array<long, 5> five, ten;
    five.fill(-1);
    ten.fill(-1);
    for (size_t c = 0; c < cd.size(); ++c) {
        Elt r = cd.reps[c];
        unsigned m = g.element_order(r);
        if (m == 4) quad.push_back(c);
        if (m == 5 || m == 10) {
            int j = glabel(r);
            std::array<long, 5>& slot = (m == 5) ? five : ten;
            check(j != 0 && slot[static_cast<size_t>(j)] < 0, "transport: cyclic class labeling broke");
            slot[static_cast<size_t>(j)] = static_cast<long>(c);
        }
    }
    check(quad.size() == 2, "transport: expected exactly two order four classes");
    for (size_t j = 1; j < 5; ++j)
        check(five[j] >= 0 && ten[j] >= 0, "transport: missing a cyclic class");

    ClassTransport out;
    out.candidates.resize(table.classes.size());
    for (size_t c = 0; c < table.classes.size(); ++c) {
        Elt e = table.classes[c][0];
        int j = om.label_of[e];
        unsigned v = e & 31u;
        std::vector<size_t>& dst = out.candidates[c];
        if (j == 0) {
            if (v == 0 || v == 31) {
                dst = {std::min(id_class, minus_class), std::max(id_class, minus_class)};
            } else {
                int w = std::popcount(v);
                if (w == 1 || w == 4)
                    dst = {involution_class};
                else
                    dst = quad;
            }
        } else {
            size_t a = static_cast<size_t>(five[static_cast<size_t>(j)]);
            size_t b = static_cast<size_t>(ten[static_cast<size_t>(j)]);
            dst = {std::min(a, b), std::max(a, b)};
        }
    }
    return out;
}

ClassSource matrix_class_source(const ClassTransport& transport, std::vector<PolyQ> column_polys) {
    const FingerprintTable& table = orbit_table();
    check(transport.candidates.size() == table.classes.size(), "matrix source: transport size mismatch");
    check(column_polys.size() == table.columns.size(), "matrix source: column count mismatch");
    return [transport, polys = std::move(column_polys), &table](uint64_t p) {
        FrobeniusReport fr = frobenius_class(table, polys, p);
        PrimeClasses out;
        if (fr.skipped) {
            out.skipped = true;
            out.reason = fr.skip_reason;
            return out;
        }
        check(!fr.candidates.empty(), "matrix source: empty fingerprint candidates");
        for (size_t c : fr.candidates) {
            const std::vector<size_t>& add = transport.candidates[c];
            out.candidates.insert(out.candidates.end(), add.begin(), add.end());
        }
        std::sort(out.candidates.begin(), out.candidates.end());
        out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()),
                             out.candidates.end());
        return out;
    };
}

}  // namespace artin
