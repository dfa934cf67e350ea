#include "artin/tower.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <utility>

#include <json.hpp>

#include "artin/errors.hpp"

namespace artin {

using nlohmann::json;

TowerAlgebra::TowerAlgebra(PolyQ base, std::vector<std::vector<Rat>> relations)
    : base_(std::move(base)), rel_(std::move(relations)) {
    check(base_.is_monic() && base_.degree() >= 1, "TowerAlgebra: base must be monic");
    size_t d = static_cast<size_t>(base_.degree());
    for (size_t j = 0; j < rel_.size(); ++j) {
        check(rel_[j].size() == d << j, "TowerAlgebra: relation width mismatch");
    }
    dim_ = d << rel_.size();
}

std::vector<Rat> TowerAlgebra::one() const {
    std::vector<Rat> u = zero();
    u[0] = 1;
    return u;
}

std::vector<Rat> TowerAlgebra::embed_base(const PolyQ& a) const {
    std::vector<Rat> u = zero();
    PolyQ r = reduce_mod(a, base_);
    for (int i = 0; i <= r.degree(); ++i) u[static_cast<size_t>(i)] = r.coeff(i);
    return u;
}

std::vector<Rat> TowerAlgebra::radical(size_t j) const {
    check(j < rel_.size(), "TowerAlgebra: radical index out of range");
    std::vector<Rat> u = zero();
    u[static_cast<size_t>(base_.degree()) << j] = 1;
    return u;
}

bool TowerAlgebra::is_zero(const std::vector<Rat>& u) const {
    check(u.size() == dim_, "TowerAlgebra: element width mismatch");
    for (const Rat& c : u) {
        if (c != 0) return false;
    }
    return true;
}

std::vector<Rat> TowerAlgebra::add(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    check(u.size() == dim_ && v.size() == dim_, "TowerAlgebra: element width mismatch");
    std::vector<Rat> w(dim_);
    for (size_t i = 0; i < dim_; ++i) w[i] = u[i] + v[i];
    return w;
}

std::vector<Rat> TowerAlgebra::sub(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    check(u.size() == dim_ && v.size() == dim_, "TowerAlgebra: element width mismatch");
    std::vector<Rat> w(dim_);
    for (size_t i = 0; i < dim_; ++i) w[i] = u[i] - v[i];
    return w;
}

std::vector<Rat> TowerAlgebra::scale(const Rat& c, const std::vector<Rat>& u) const {
    check(u.size() == dim_, "TowerAlgebra: element width mismatch");
    std::vector<Rat> w(dim_);
    for (size_t i = 0; i < dim_; ++i) w[i] = c * u[i];
    return w;
}

std::vector<Rat> TowerAlgebra::mul_rec(size_t level, const Rat* u, const Rat* v) const {
    size_t d = static_cast<size_t>(base_.degree());
    if (level == 0) {
        PolyQ pu(std::vector<Rat>(u, u + d));
        PolyQ pv(std::vector<Rat>(v, v + d));
        PolyQ pw = mul_mod(pu, pv, base_);
        std::vector<Rat> w(d, Rat(0));
        for (int i = 0; i <= pw.degree(); ++i) w[static_cast<size_t>(i)] = pw.coeff(i);
        return w;
    }
    size_t n = d << (level - 1);
    std::vector<Rat> p00 = mul_rec(level - 1, u, v);
    std::vector<Rat> p11 = mul_rec(level - 1, u + n, v + n);
    std::vector<Rat> rp11 = mul_rec(level - 1, rel_[level - 1].data(), p11.data());
    std::vector<Rat> p01 = mul_rec(level - 1, u, v + n);
    std::vector<Rat> p10 = mul_rec(level - 1, u + n, v);
    std::vector<Rat> w(2 * n);
    for (size_t i = 0; i < n; ++i) {
        w[i] = p00[i] + rp11[i];
        w[n + i] = p01[i] + p10[i];
    }
    return w;
}

std::vector<Rat> TowerAlgebra::mul(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    check(u.size() == dim_ && v.size() == dim_, "TowerAlgebra: element width mismatch");
    return mul_rec(rel_.size(), u.data(), v.data());
}

std::vector<Rat> TowerAlgebra::eval(const PolyQ& m, const std::vector<Rat>& u) const {
    std::vector<Rat> acc = zero();
    for (int i = m.degree(); i >= 0; --i) {
        acc = mul(acc, u);
        acc[0] += m.coeff(i);
    }
    return acc;
}

std::vector<Rat> TowerAlgebra::eval_over_base(const std::vector<PolyQ>& m,
                                              const std::vector<Rat>& u) const {
    std::vector<Rat> acc = zero();
    for (size_t i = m.size(); i-- > 0;) {
        acc = add(mul(acc, u), embed_base(m[i]));
    }
    return acc;
}

PrimitiveElement primitive_element(const TowerAlgebra& alg, const std::vector<Rat>& seed,
                                   int shift_cap) {
    std::vector<Rat> x = alg.embed_base(PolyQ::monomial(1));
    for (int c = 0; c <= shift_cap; ++c) {
        std::vector<Rat> gen = c == 0 ? seed : alg.add(seed, alg.scale(Rat(c), x));
        RatSpan span(alg.dim());
        std::vector<Rat> power = alg.one();
        for (size_t t = 0; t <= alg.dim(); ++t) {
            auto combo = span.insert(power);
            if (combo) {
                if (t < alg.dim()) break;  // proper subalgebra, try a larger shift
                std::vector<Rat> coeffs(t + 1);
                for (size_t j = 0; j < t; ++j) coeffs[j] = -(*combo)[j];
                coeffs[t] = 1;
                PolyQ m(std::move(coeffs));
                check(poly_squarefree(m),
                      "primitive_element: repeated factor, algebra is not a field");
                return {std::move(m), c, std::move(gen)};
            }
            power = alg.mul(power, gen);
        }
    }
    throw CheckFailed("primitive_element: no shift generates the full algebra");
}

namespace {

// Gaussian elimination over the base field Q[x]/(f); mirrors RatSpan with
// coefficients reduced mod f
class BaseSpan {
public:
    BaseSpan(const PolyQ& f, size_t width) : f_(f), width_(width) {}

    std::optional<std::vector<PolyQ>> insert(std::vector<PolyQ> v) {
        check(v.size() == width_, "BaseSpan: width mismatch");
        std::vector<PolyQ> combo(inserted_ + 1);
        combo[inserted_] = PolyQ::constant(Rat(1));

        // process stored rows in ascending pivot order; each row is zero left
        // of its pivot, so one pass clears every pivot position of v
        std::vector<size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](size_t i, size_t j) { return pivots_[i] < pivots_[j]; });
        for (size_t i : order) {
            const PolyQ c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (size_t k = 0; k < width_; ++k) {
                v[k] = reduce_mod(v[k] - c * rows_[i][k], f_);
            }
            for (size_t k = 0; k < combos_[i].size(); ++k) {
                combo[k] = reduce_mod(combo[k] - c * combos_[i][k], f_);
            }
        }
        size_t pivot = width_;
        for (size_t k = 0; k < width_; ++k) {
            if (!v[k].is_zero()) {
                pivot = k;
                break;
            }
        }
        if (pivot == width_) {
            // dependent: v_original = sum lambda_j * inserted_j
            std::vector<PolyQ> lambda(inserted_);
            for (size_t j = 0; j < inserted_; ++j) lambda[j] = -combo[j];
            ++inserted_;
            return lambda;
        }
        PolyQ inv = inverse_mod(v[pivot], f_);
        for (PolyQ& e : v) e = mul_mod(e, inv, f_);
        for (PolyQ& e : combo) e = mul_mod(e, inv, f_);
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
        pivots_.push_back(pivot);
        ++inserted_;
        return std::nullopt;
    }

private:
    const PolyQ& f_;
    size_t width_;
    size_t inserted_ = 0;
    std::vector<std::vector<PolyQ>> rows_;  // each reduced against the earlier ones
    std::vector<std::vector<PolyQ>> combos_;
    std::vector<size_t> pivots_;
};

std::vector<PolyQ> base_blocks(const TowerAlgebra& alg, const std::vector<Rat>& u) {
    size_t d = static_cast<size_t>(alg.base().degree());
    std::vector<PolyQ> blocks(alg.dim() / d);
    for (size_t mask = 0; mask < blocks.size(); ++mask) {
        blocks[mask] =
            PolyQ(std::vector<Rat>(u.begin() + static_cast<long>(mask * d),
                                   u.begin() + static_cast<long>((mask + 1) * d)));
    }
    return blocks;
}

}  // namespace

std::vector<PolyQ> min_poly_over_base(const TowerAlgebra& alg, const std::vector<Rat>& u) {
    size_t width = alg.dim() / static_cast<size_t>(alg.base().degree());
    BaseSpan span(alg.base(), width);
    std::vector<Rat> power = alg.one();
    for (size_t t = 0; t <= width; ++t) {
        auto combo = span.insert(base_blocks(alg, power));
        if (combo) {
            std::vector<PolyQ> m(t + 1);
            for (size_t j = 0; j < t; ++j) m[j] = -(*combo)[j];
            m[t] = PolyQ::constant(Rat(1));
            return m;
        }
        power = alg.mul(power, u);
    }
    throw CheckFailed("min_poly_over_base: no dependency found");
}

namespace {

// writes val into the block of coordinates attached to the given radical mask
void place(std::vector<Rat>& out, size_t mask, const PolyQ& val, size_t d) {
    for (int i = 0; i <= val.degree(); ++i) {
        out[mask * d + static_cast<size_t>(i)] = val.coeff(i);
    }
}

std::vector<Rat> over_masks(size_t masks, size_t d,
                            const std::vector<std::pair<size_t, PolyQ>>& entries) {
    std::vector<Rat> out(masks * d, Rat(0));
    for (const auto& [mask, val] : entries) place(out, mask, val, d);
    return out;
}

}  // namespace

TowerPresentation tower_presentation(const std::string& label) {
    const PolyQ f = base_quintic();
    const size_t d = 5;
    if (label == "E") {
        TowerAlgebra alg(f, {});
        std::vector<Rat> seed = alg.embed_base(PolyQ::monomial(1));
        return {std::move(alg), std::move(seed)};
    }
    if (label == "EA" || label == "EB" || label == "EC") {
        PolyQ rad = label == "EA"   ? radicand_a()
                    : label == "EB" ? radicand_b()
                                    : radicand_c();
        TowerAlgebra alg(f, {over_masks(1, d, {{0, rad}})});
        std::vector<Rat> seed = alg.radical(0);
        return {std::move(alg), std::move(seed)};
    }
    if (label == "K") {
        // radicals s, t, g with s^2 = a, t^2 = b, g^2 = (1 + s)(1 + t) s t
        PolyQ a = radicand_a(), b = radicand_b();
        TowerAlgebra alg(f, {over_masks(1, d, {{0, a}}),
                             over_masks(2, d, {{0, b}}),
                             over_masks(4, d,
                                        {{0, mul_mod(a, b, f)},
                                         {1, b},
                                         {2, a},
                                         {3, PolyQ::constant(Rat(1))}})});
        std::vector<Rat> seed = alg.radical(2);
        return {std::move(alg), std::move(seed)};
    }
    if (label == "M") {
        // radicals i, theta, phi with i^2 = -1, theta^2 = x + i (x^2 - 2),
        // phi^2 = c; the seed is theta + phi
        TowerAlgebra alg(f, {over_masks(1, d, {{0, PolyQ::constant(Rat(-1))}}),
                             over_masks(2, d,
                                        {{0, PolyQ::monomial(1)},
                                         {1, PolyQ(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)})}}),
                             over_masks(4, d, {{0, radicand_c()}})});
        std::vector<Rat> seed = alg.add(alg.radical(1), alg.radical(2));
        return {std::move(alg), std::move(seed)};
    }
    throw CheckFailed("tower_presentation: unknown label " + label);
}

std::vector<NumberField> build_tower() {
    std::vector<NumberField> out;
    NumberField base;
    base.label = "E";
    base.defining_poly = base_quintic();
    base.degree = 5;
    base.base_label = "Q";
    out.push_back(std::move(base));
    for (const char* label : {"EA", "EB", "EC", "K", "M"}) {
        TowerPresentation pres = tower_presentation(label);
        PrimitiveElement prim = primitive_element(pres.algebra, pres.seed);
        check(prim.min_poly.is_integer(),
              "build_tower: generator is not an algebraic integer");
        NumberField nf;
        nf.label = label;
        nf.defining_poly = prim.min_poly;
        nf.degree = static_cast<int>(pres.algebra.dim());
        nf.base_label = "E";
        nf.shift = prim.shift;
        nf.relative_poly = min_poly_over_base(pres.algebra, prim.generator);
        check(nf.relative_poly.size() == pres.algebra.dim() / 5 + 1,
              "build_tower: generator does not span over the base field");
        check(pres.algebra.is_zero(
                  pres.algebra.eval_over_base(nf.relative_poly, prim.generator)),
              "build_tower: relative polynomial fails to annihilate");
        out.push_back(std::move(nf));
    }
    return out;
}

namespace {

json poly_to_json(const PolyQ& g) {
    json arr = json::array();
    for (const Rat& c : g.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

PolyQ poly_from_json(const json& arr) {
    std::vector<Rat> coeffs;
    for (const auto& item : arr) {
        mpq_class q(item.get<std::string>());
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        coeffs.push_back(std::move(q));
    }
    return PolyQ(std::move(coeffs));
}

constexpr const char* kTowerVersion = "tower-v1";

}  // namespace

void save_tower(const std::vector<NumberField>& fields, const std::string& path) {
    json j;
    j["version"] = kTowerVersion;
    json arr = json::array();
    for (const NumberField& nf : fields) {
        json o;
        o["label"] = nf.label;
        o["degree"] = nf.degree;
        o["base"] = nf.base_label;
        o["shift"] = nf.shift;
        o["poly"] = poly_to_json(nf.defining_poly);
        json rel = json::array();
        for (const PolyQ& g : nf.relative_poly) rel.push_back(poly_to_json(g));
        o["relative"] = rel;
        arr.push_back(std::move(o));
    }
    j["fields"] = std::move(arr);
    std::ofstream stream(path);
    stream << j.dump(2) << "\n";
    check(stream.good(), "save_tower: cannot write " + path);
}

std::optional<std::vector<NumberField>> load_tower(const std::string& path) {
    std::ifstream stream(path);
    if (!stream.good()) return std::nullopt;
    json j = json::parse(stream, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    try {
        if (j.at("version").get<std::string>() != kTowerVersion) return std::nullopt;
        std::vector<NumberField> out;
        for (const auto& o : j.at("fields")) {
            NumberField nf;
            nf.label = o.at("label").get<std::string>();
            nf.degree = o.at("degree").get<int>();
            nf.base_label = o.at("base").get<std::string>();
            nf.shift = o.at("shift").get<int>();
            nf.defining_poly = poly_from_json(o.at("poly"));
            for (const auto& rel : o.at("relative")) {
                nf.relative_poly.push_back(poly_from_json(rel));
            }
            if (nf.defining_poly.degree() != nf.degree) return std::nullopt;
            out.push_back(std::move(nf));
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace artin
