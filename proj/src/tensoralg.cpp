#include "ihoe/tensoralg.hpp"

namespace ihoe {

TensorElement t_zero(int arity) {
    TensorElement t;
    t.arity = arity;
    return t;
}

TensorElement t_one(const FieldCtx& F, int n, int arity) {
    TensorElement t = t_zero(arity);
    t.terms.emplace(std::vector<ExpVec>(static_cast<size_t>(arity), exp_zero(n)), F.one());
    return t;
}

void t_add_term(const FieldCtx& F, TensorElement& t, const std::vector<ExpVec>& key,
                const Fq& c) {
    if (F.is_zero(c)) return;
    auto it = t.terms.find(key);
    if (it == t.terms.end()) {
        t.terms.emplace(key, c);
        return;
    }
    Fq s = F.add(it->second, c);
    if (F.is_zero(s))
        t.terms.erase(it);
    else
        it->second = s;
}

TensorElement t_add(const FieldCtx& F, const TensorElement& a, const TensorElement& b) {
    if (a.arity != b.arity) throw Error("tensor add: arity mismatch");
    TensorElement r = a;
    for (const auto& [k, c] : b.terms) t_add_term(F, r, k, c);
    return r;
}

TensorElement t_sub(const FieldCtx& F, const TensorElement& a, const TensorElement& b) {
    if (a.arity != b.arity) throw Error("tensor sub: arity mismatch");
    TensorElement r = a;
    for (const auto& [k, c] : b.terms) t_add_term(F, r, k, F.neg(c));
    return r;
}

TensorElement t_neg(const FieldCtx& F, const TensorElement& a) {
    TensorElement r = t_zero(a.arity);
    for (const auto& [k, c] : a.terms) r.terms.emplace(k, F.neg(c));
    return r;
}

TensorElement t_scale(const FieldCtx& F, const Fq& c, const TensorElement& a) {
    TensorElement r = t_zero(a.arity);
    if (F.is_zero(c)) return r;
    for (const auto& [k, x] : a.terms) {
        Fq y = F.mul(c, x);
        if (!F.is_zero(y)) r.terms.emplace(k, y);
    }
    return r;
}

TensorElement t_of(const FieldCtx& F, const PbwElement& a, const PbwElement& b) {
    TensorElement r = t_zero(2);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            t_add_term(F, r, {ea, eb}, F.mul(ca, cb));
    return r;
}

TensorElement t_of3(const FieldCtx& F, const PbwElement& a, const PbwElement& b,
                    const PbwElement& c) {
    TensorElement r = t_zero(3);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            for (const auto& [ec, cc] : c.terms)
                t_add_term(F, r, {ea, eb, ec}, F.mul(F.mul(ca, cb), cc));
    return r;
}

TensorElement t_flip(const TensorElement& a) {
    if (a.arity != 2) throw Error("t_flip: arity must be 2");
    TensorElement r = t_zero(2);
    for (const auto& [k, c] : a.terms) r.terms.emplace(std::vector<ExpVec>{k[1], k[0]}, c);
    return r;
}

TensorElement tensor_mul(const OrePresentation& P, const TensorElement& u,
                         const TensorElement& v) {
    if (u.arity != v.arity) throw Error("tensor_mul: arity mismatch");
    const FieldCtx& F = P.field();
    TensorElement r = t_zero(u.arity);
    for (const auto& [ku, cu] : u.terms)
        for (const auto& [kv, cv] : v.terms) {
            // Componentwise PBW products, then distribute.
            std::vector<PbwElement> comps(static_cast<size_t>(u.arity));
            for (int s = 0; s < u.arity; ++s)
                comps[static_cast<size_t>(s)] =
                    mul(P, pbw_mono(F, ku[static_cast<size_t>(s)], F.one()),
                        pbw_mono(F, kv[static_cast<size_t>(s)], F.one()));
            Fq c = F.mul(cu, cv);
            if (u.arity == 2) {
                for (const auto& [e0, c0] : comps[0].terms)
                    for (const auto& [e1, c1] : comps[1].terms)
                        t_add_term(F, r, {e0, e1}, F.mul(c, F.mul(c0, c1)));
            } else {
                for (const auto& [e0, c0] : comps[0].terms)
                    for (const auto& [e1, c1] : comps[1].terms)
                        for (const auto& [e2, c2] : comps[2].terms)
                            t_add_term(F, r, {e0, e1, e2},
                                       F.mul(F.mul(c, c0), F.mul(c1, c2)));
            }
        }
    return r;
}

TensorElement tensor_power(const OrePresentation& P, const TensorElement& u, long long k) {
    if (k < 0) throw Error("tensor_power: negative exponent");
    TensorElement r = t_one(P.field(), P.n(), u.arity);
    TensorElement base = u;
    while (k > 0) {
        if (k & 1) r = tensor_mul(P, r, base);
        if (k >>= 1) base = tensor_mul(P, base, base);
    }
    return r;
}

PbwElement contract_m(const OrePresentation& P, const TensorElement& u) {
    if (u.arity != 2) throw Error("contract_m: arity must be 2");
    const FieldCtx& F = P.field();
    PbwElement out;
    for (const auto& [k, c] : u.terms) {
        PbwElement prod = mul(P, pbw_mono(F, k[0], F.one()), pbw_mono(F, k[1], F.one()));
        for (const auto& [e, d] : prod.terms) pbw_add_term(F, out, e, F.mul(c, d));
    }
    return out;
}

TensorElement ad_power(const OrePresentation& P, const TensorElement& b,
                       const TensorElement& t, int k) {
    const FieldCtx& F = P.field();
    TensorElement cur = t;
    for (int i = 0; i < k; ++i)
        cur = t_sub(F, tensor_mul(P, b, cur), tensor_mul(P, cur, b));
    return cur;
}

TensorElement reduce_mod_x1(const TensorElement& t, int s, int p_thresh) {
    if (t.arity != 2) throw Error("reduce_mod_x1: arity must be 2");
    TensorElement r = t_zero(2);
    for (const auto& [k, c] : t.terms) {
        if (k[0][0] >= s) continue;
        if (k[1][0] >= p_thresh) continue;
        r.terms.emplace(k, c);
    }
    return r;
}

bool tensor_in_x1_subalgebra(const TensorElement& t, int divisor) {
    for (const auto& [k, c] : t.terms)
        for (const auto& comp : k) {
            if (exp_top_gen(comp) > 1) return false;
            if (comp[0] % divisor != 0) return false;
        }
    return true;
}

TensorJacobsonReport jacobson_binomial_tensor(const OrePresentation& P,
                                              const TensorElement& a,
                                              const TensorElement& b) {
    const FieldCtx& F = P.field();
    const int p = F.p();
    TensorJacobsonReport rep;
    rep.hypothesis_ok = true;
    TensorElement ad = a;
    for (int i = 1; i <= p - 1; ++i) {
        ad = t_sub(F, tensor_mul(P, b, ad), tensor_mul(P, ad, b));
        TensorElement comm = t_sub(F, tensor_mul(P, ad, a), tensor_mul(P, a, ad));
        if (!comm.is_zero()) rep.hypothesis_ok = false;
    }
    TensorElement sum = t_add(F, a, b);
    rep.lhs = tensor_power(P, sum, p);
    rep.rhs = t_add(F, t_add(F, tensor_power(P, a, p), tensor_power(P, b, p)), ad);
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

std::string tensor_to_string(const FieldCtx& F, const TensorElement& t) {
    if (t.terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t.terms) {
        if (!s.empty()) s += " + ";
        std::string term = F.to_string(c) + "*(";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) term += " (x) ";
            PbwElement mono = pbw_mono(F, k[i], F.one());
            term += pbw_to_string(F, mono);
        }
        s += term + ")";
    }
    return s;
}

}  // namespace ihoe
