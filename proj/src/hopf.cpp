#include "ihoe/hopf.hpp"

#include <functional>
#include <random>

#include "ihoe/linalg.hpp"

namespace ihoe {

PbwElement pbw_invert_monomial(const OrePresentation& P, const PbwElement& a) {
    if (a.terms.size() != 1) throw Error("invert: not a monomial");
    const auto& [e, c] = *a.terms.begin();
    for (size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0 && !P.is_laurent(static_cast<int>(k) + 1))
            throw Error("invert: non-Laurent generator");
    ExpVec inv(e.size());
    for (size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
    return pbw_mono(P.field(), inv, P.field().inv(c));
}

PbwElement hom_eval(const OrePresentation& P, const std::vector<PbwElement>& images,
                    const PbwElement& h) {
    const FieldCtx& F = P.field();
    PbwElement out;
    for (const auto& [e, c] : h.terms) {
        PbwElement acc = pbw_const(F, P.n(), c);
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            const PbwElement& img = images[j];
            PbwElement pw = (e[j] > 0)
                                ? power(P, img, e[j])
                                : power(P, pbw_invert_monomial(P, img), -e[j]);
            acc = mul(P, acc, pw);
        }
        out = pbw_add(F, out, acc);
    }
    return out;
}

HopfStructure::HopfStructure(OrePresentation base, std::vector<GenKind> kinds,
                             std::vector<ExpVec> group_parts, std::vector<TensorElement> tails)
    : base_(std::move(base)),
      kinds_(std::move(kinds)),
      group_parts_(std::move(group_parts)),
      tails_(std::move(tails)) {
    const int n = base_.n();
    const FieldCtx& F = base_.field();
    if (static_cast<int>(kinds_.size()) != n) throw Error("hopf: kinds length mismatch");
    if (group_parts_.empty()) group_parts_.assign(static_cast<size_t>(n), exp_zero(n));
    if (tails_.empty()) tails_.assign(static_cast<size_t>(n), t_zero(2));
    if (static_cast<int>(group_parts_.size()) != n || static_cast<int>(tails_.size()) != n)
        throw Error("hopf: group_parts/tails length mismatch");
    for (int i = 1; i <= n; ++i) {
        if (kind(i) == GenKind::Grouplike) {
            if (!base_.is_laurent(i))
                throw Error("hopf: grouplike generator X_" + std::to_string(i) +
                            " must be Laurent");
            continue;
        }
        if (exp_top_gen(group_part(i)) >= i)
            throw Error("hopf: group part of X_" + std::to_string(i) +
                        " must use lower generators");
        const TensorElement& w = tail(i);
        if (w.arity != 2) throw Error("hopf: tail arity must be 2");
        for (const auto& [k, c] : w.terms)
            if (exp_top_gen(k[0]) >= i || exp_top_gen(k[1]) >= i)
                throw Error("hopf: tail of X_" + std::to_string(i) +
                            " must use lower generators");
    }
    // S(X_i) ascending; S on lower generators is already available.
    antipode_images_.assign(static_cast<size_t>(n), pbw_zero());
    for (int i = 1; i <= n; ++i) {
        if (kind(i) == GenKind::Grouplike) {
            ExpVec e = exp_zero(n);
            e[static_cast<size_t>(i - 1)] = -1;
            antipode_images_[static_cast<size_t>(i - 1)] = pbw_mono(F, e, F.one());
            continue;
        }
        // m(Id⊗S)(w) and m(S⊗Id)(w) with the partial antipode.
        PbwElement mis, msi;
        for (const auto& [k, c] : tail(i).terms) {
            PbwElement left = pbw_mono(F, k[0], F.one());
            PbwElement right = pbw_mono(F, k[1], F.one());
            mis = pbw_add(F, mis,
                          pbw_scale(F, c, mul(base_, left, antipode(*this, right))));
            msi = pbw_add(F, msi,
                          pbw_scale(F, c, mul(base_, antipode(*this, left), right)));
        }
        if (mis != msi) contractions_agree_ = false;
        PbwElement inner = pbw_add(F, pbw_gen(F, n, i), mis);
        const ExpVec& g = group_part(i);
        PbwElement res;
        if (exp_total_degree(g) == 0) {
            res = pbw_neg(F, inner);
        } else {
            ExpVec ginv(g.size());
            for (size_t k = 0; k < g.size(); ++k) ginv[k] = -g[k];
            res = pbw_neg(F, mul(base_, pbw_mono(F, ginv, F.one()), inner));
        }
        antipode_images_[static_cast<size_t>(i - 1)] = std::move(res);
    }
}

TensorElement HopfStructure::coproduct_gen(int i) const {
    const FieldCtx& F = field();
    const int nn = n();
    if (kind(i) == GenKind::Grouplike) {
        TensorElement t = t_zero(2);
        t.terms.emplace(std::vector<ExpVec>{exp_gen(nn, i), exp_gen(nn, i)}, F.one());
        return t;
    }
    TensorElement t = tail(i);
    t_add_term(F, t, {group_part(i), exp_gen(nn, i)}, F.one());
    t_add_term(F, t, {exp_gen(nn, i), exp_zero(nn)}, F.one());
    return t;
}

namespace {

TensorElement coproduct_gen_power(const HopfStructure& HS, int i, long long k,
                                  CoprodCache* cache) {
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    if (HS.kind(i) == GenKind::Grouplike) {
        ExpVec e = exp_zero(HS.n());
        e[static_cast<size_t>(i - 1)] = static_cast<int32_t>(k);
        TensorElement t = t_zero(2);
        t.terms.emplace(std::vector<ExpVec>{e, e}, F.one());
        return t;
    }
    if (k < 0) throw Error("coproduct: negative power of a primitive generator");
    if (cache) {
        auto it = cache->pow.find({i, k});
        if (it != cache->pow.end()) return it->second;
    }
    TensorElement r = tensor_power(P, HS.coproduct_gen(i), k);
    if (cache) cache->pow.emplace(std::make_pair(i, k), r);
    return r;
}

}  // namespace

TensorElement coproduct(const HopfStructure& HS, const PbwElement& h, CoprodCache* cache) {
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    CoprodCache local;
    if (!cache) cache = &local;
    TensorElement out = t_zero(2);
    for (const auto& [e, c] : h.terms) {
        TensorElement acc = t_one(F, HS.n(), 2);
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            acc = tensor_mul(P, acc,
                             coproduct_gen_power(HS, static_cast<int>(j) + 1, e[j], cache));
        }
        out = t_add(F, out, t_scale(F, c, acc));
    }
    return out;
}

Fq counit(const HopfStructure& HS, const PbwElement& h) {
    const FieldCtx& F = HS.field();
    Fq acc = F.zero();
    for (const auto& [e, c] : h.terms) {
        bool kills = false;
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0 && HS.kind(static_cast<int>(j) + 1) == GenKind::Primitive) {
                kills = true;
                break;
            }
        if (!kills) acc = F.add(acc, c);  // eps = 1 on grouplike letters
    }
    return acc;
}

PbwElement antipode(const HopfStructure& HS, const PbwElement& h) {
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    PbwElement out;
    for (const auto& [e, c] : h.terms) {
        // Anti-algebra map: S(X_1^{e_1}...X_n^{e_n}) = S(X_n)^{e_n}...S(X_1)^{e_1}.
        PbwElement acc = pbw_const(F, HS.n(), c);
        for (int j = static_cast<int>(e.size()); j >= 1; --j) {
            int32_t k = e[static_cast<size_t>(j - 1)];
            if (k == 0) continue;
            const PbwElement& img = HS.antipode_image(j);
            PbwElement pw = (k > 0) ? power(P, img, k)
                                    : power(P, pbw_invert_monomial(P, img), -k);
            acc = mul(P, acc, pw);
        }
        out = pbw_add(F, out, acc);
    }
    return out;
}

TensorElement apply_delta_component(const HopfStructure& HS, const TensorElement& t,
                                    int comp, CoprodCache* cache) {
    if (t.arity != 2) throw Error("apply_delta_component: arity must be 2");
    const FieldCtx& F = HS.field();
    CoprodCache local;
    if (!cache) cache = &local;
    TensorElement out = t_zero(3);
    for (const auto& [k, c] : t.terms) {
        TensorElement d = coproduct(HS, pbw_mono(F, k[static_cast<size_t>(comp)], F.one()),
                                    cache);
        for (const auto& [dk, dc] : d.terms) {
            std::vector<ExpVec> key =
                (comp == 0) ? std::vector<ExpVec>{dk[0], dk[1], k[1]}
                            : std::vector<ExpVec>{k[0], dk[0], dk[1]};
            t_add_term(F, out, key, F.mul(c, dc));
        }
    }
    return out;
}

PbwElement apply_counit_component(const HopfStructure& HS, const TensorElement& t, int comp) {
    const FieldCtx& F = HS.field();
    PbwElement out;
    for (const auto& [k, c] : t.terms) {
        Fq e = counit(HS, pbw_mono(F, k[static_cast<size_t>(comp)], F.one()));
        pbw_add_term(F, out, k[static_cast<size_t>(1 - comp)], F.mul(c, e));
    }
    return out;
}

PbwElement antipode_contraction(const HopfStructure& HS, const TensorElement& t, int comp) {
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    PbwElement out;
    for (const auto& [k, c] : t.terms) {
        PbwElement left = pbw_mono(F, k[0], F.one());
        PbwElement right = pbw_mono(F, k[1], F.one());
        PbwElement prod = (comp == 0) ? mul(P, antipode(HS, left), right)
                                      : mul(P, left, antipode(HS, right));
        out = pbw_add(F, out, pbw_scale(F, c, prod));
    }
    return out;
}

HopfReport verify_hopf(const HopfStructure& HS, int degree_cap, int n_samples,
                       uint64_t seed) {
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    const int n = HS.n();
    HopfReport rep;
    CoprodCache cache;
    auto record = [&](const std::string& axiom, bool pass, const std::string& witness) {
        rep.checks.push_back({axiom, pass, pass ? "" : witness});
        if (!pass) rep.all_pass = false;
    };

    // (a) Delta respects every defining relation.
    {
        bool ok = true;
        std::string wit;
        for (int i = 2; i <= n && ok; ++i)
            for (int j = 1; j < i && ok; ++j) {
                PbwElement xi = pbw_gen(F, n, i), xj = pbw_gen(F, n, j);
                TensorElement lhs =
                    tensor_mul(P, coproduct(HS, xi, &cache), coproduct(HS, xj, &cache));
                TensorElement rhs = coproduct(HS, mul(P, xi, xj), &cache);
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = "relation (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        record("multiplicative", ok, wit);
    }
    // (b) Coassociativity on generators.
    {
        bool ok = true;
        std::string wit;
        for (int i = 1; i <= n && ok; ++i) {
            TensorElement d = HS.coproduct_gen(i);
            TensorElement l = apply_delta_component(HS, d, 0, &cache);
            TensorElement r = apply_delta_component(HS, d, 1, &cache);
            if (!(l == r)) {
                ok = false;
                wit = "generator " + std::to_string(i);
            }
        }
        record("coassociativity", ok, wit);
    }
    // (c) Counit on generators.
    {
        bool ok = true;
        std::string wit;
        for (int i = 1; i <= n && ok; ++i) {
            PbwElement xi = pbw_gen(F, n, i);
            TensorElement d = HS.coproduct_gen(i);
            if (apply_counit_component(HS, d, 0) != xi ||
                apply_counit_component(HS, d, 1) != xi) {
                ok = false;
                wit = "generator " + std::to_string(i);
            }
        }
        record("counit", ok, wit);
    }
    // (d) Antipode on generators and random monomials.
    {
        bool ok = true;
        std::string wit;
        std::mt19937_64 rng(seed);
        auto check_elt = [&](const PbwElement& h, const std::string& what) {
            if (!ok) return;
            TensorElement d = coproduct(HS, h, &cache);
            PbwElement target = pbw_const(F, n, counit(HS, h));
            if (antipode_contraction(HS, d, 0) != target ||
                antipode_contraction(HS, d, 1) != target) {
                ok = false;
                wit = what;
            }
        };
        for (int i = 1; i <= n && ok; ++i)
            check_elt(pbw_gen(F, n, i), "generator " + std::to_string(i));
        for (int s = 0; s < n_samples && ok; ++s) {
            ExpVec e = exp_zero(n);
            long long budget = degree_cap;
            for (int j = 0; j < n; ++j) {
                std::uniform_int_distribution<long long> dist(0, budget);
                e[static_cast<size_t>(j)] = static_cast<int32_t>(dist(rng));
                budget -= e[static_cast<size_t>(j)];
            }
            if (exp_total_degree(e) == 0) e[0] = 1;
            check_elt(pbw_mono(F, e, F.one()), "monomial sample " + std::to_string(s));
        }
        record("antipode", ok, wit);
    }
    return rep;
}

std::vector<PbwElement> primitives_up_to(const HopfStructure& HS, int N) {
    if (N < 1) throw Error("primitives_up_to: degree cap must be >= 1");
    const FieldCtx& F = HS.field();
    const int n = HS.n();
    // Nonconstant monomials of total degree <= N (Laurent generators also
    // contribute negative powers).
    std::vector<ExpVec> monos;
    ExpVec cur = exp_zero(n);
    std::function<void(int, int)> enumerate = [&](int gen, int budget) {
        if (gen > n) {
            if (exp_total_degree(cur) > 0) monos.push_back(cur);
            return;
        }
        int lo = HS.base().is_laurent(gen) ? -budget : 0;
        for (int v = lo; v <= budget; ++v) {
            cur[static_cast<size_t>(gen - 1)] = v;
            enumerate(gen + 1, budget - std::abs(v));
        }
        cur[static_cast<size_t>(gen - 1)] = 0;
    };
    enumerate(1, N);

    CoprodCache cache;
    std::map<std::vector<ExpVec>, int> row_of;
    std::vector<std::vector<std::pair<int, Fq>>> cols;
    for (const auto& e : monos) {
        PbwElement m = pbw_mono(F, e, F.one());
        TensorElement d = coproduct(HS, m, &cache);
        t_add_term(F, d, {e, exp_zero(n)}, F.neg(F.one()));
        t_add_term(F, d, {exp_zero(n), e}, F.neg(F.one()));
        std::vector<std::pair<int, Fq>> col;
        for (const auto& [k, c] : d.terms) {
            auto [it, fresh] = row_of.emplace(k, static_cast<int>(row_of.size()));
            col.emplace_back(it->second, c);
        }
        cols.push_back(std::move(col));
    }
    Mat A(static_cast<int>(row_of.size()), static_cast<int>(monos.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) A.at(r, static_cast<int>(c)) = v;
    auto ker = kernel_basis(F, std::move(A));
    std::vector<PbwElement> basis;
    for (const auto& v : ker) {
        PbwElement f;
        for (size_t c = 0; c < monos.size(); ++c) pbw_add_term(F, f, monos[c], v[c]);
        basis.push_back(std::move(f));
    }
    return basis;
}

Fq character_eval(const HopfStructure& HS, const Character& chi, const PbwElement& h) {
    const FieldCtx& F = HS.field();
    Fq acc = F.zero();
    for (const auto& [e, c] : h.terms) {
        Fq t = c;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            t = F.mul(t, F.pow(chi.values[j], e[j]));
        }
        acc = F.add(acc, t);
    }
    return acc;
}

bool character_valid(const HopfStructure& HS, const Character& chi) {
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    if (static_cast<int>(chi.values.size()) != HS.n()) return false;
    for (int i = 1; i <= HS.n(); ++i)
        if (P.is_laurent(i) && F.is_zero(chi.values[static_cast<size_t>(i - 1)]))
            return false;
    for (int i = 2; i <= HS.n(); ++i)
        for (int j = 1; j < i; ++j) {
            PbwElement xi = pbw_gen(F, HS.n(), i), xj = pbw_gen(F, HS.n(), j);
            Fq lhs = F.mul(chi.values[static_cast<size_t>(i - 1)],
                           chi.values[static_cast<size_t>(j - 1)]);
            Fq rhs = character_eval(HS, chi, mul(P, xi, xj));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

WindingResult winding(const HopfStructure& HS, const Character& chi, WindingSide side,
                      int order_cap) {
    if (!character_valid(HS, chi)) throw Error("winding: invalid character");
    const OrePresentation& P = HS.base();
    const FieldCtx& F = HS.field();
    const int n = HS.n();
    WindingResult res;
    CoprodCache cache;
    for (int i = 1; i <= n; ++i) {
        TensorElement d = coproduct(HS, pbw_gen(F, n, i), &cache);
        PbwElement img;
        for (const auto& [k, c] : d.terms) {
            int contracted = (side == WindingSide::Left) ? 0 : 1;
            Fq chival = character_eval(HS, chi,
                                       pbw_mono(F, k[static_cast<size_t>(contracted)], F.one()));
            pbw_add_term(F, img, k[static_cast<size_t>(1 - contracted)], F.mul(c, chival));
        }
        res.images.push_back(std::move(img));
    }
    // Iterate composition until identity on generators.
    std::vector<PbwElement> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(pbw_gen(F, n, i));
    std::vector<PbwElement> cur = res.images;
    for (int k = 1; k <= order_cap; ++k) {
        if (cur == gens) {
            res.order = k;
            res.within_cap = true;
            return res;
        }
        std::vector<PbwElement> next;
        for (int i = 1; i <= n; ++i)
            next.push_back(hom_eval(P, res.images, cur[static_cast<size_t>(i - 1)]));
        cur = std::move(next);
    }
    return res;
}

}  // namespace ihoe
