#include "ihoe/ihoe2.hpp"

#include <algorithm>

namespace ihoe {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void Ihoe2Params::set_d(int s, const Fq& v) {
    if (s < 0) throw Error("params: d index must be >= 0");
    if (field.is_zero(v))
        d.erase(s);
    else
        d[s] = v;
}

void Ihoe2Params::set_b(int s, const Fq& v) {
    if (s < 0) throw Error("params: b index must be >= 0");
    if (field.is_zero(v))
        b.erase(s);
    else
        b[s] = v;
}

void Ihoe2Params::set_c(int s, int t, const Fq& v) {
    if (s < 0 || t <= s) throw Error("params: c indices need 0 <= s < t");
    if (field.is_zero(v))
        c.erase({s, t});
    else
        c[{s, t}] = v;
}

Fq Ihoe2Params::d0() const {
    auto it = d.find(0);
    return it == d.end() ? Fq{} : it->second;
}

Fq Ihoe2Params::b0() const {
    auto it = b.find(0);
    return it == b.end() ? Fq{} : it->second;
}

std::vector<int> lambda_coeffs(int p) {
    if (!is_prime(p)) throw Error("lambda_coeffs: p must be prime");
    std::vector<int> lam;
    long long binom = 1;  // binom(p, i)
    for (int i = 1; i <= p - 1; ++i) {
        binom = binom * (p - i + 1) / i;
        lam.push_back(static_cast<int>((binom / p) % p));
    }
    return lam;
}

PbwElement delta_x1(const Ihoe2Params& par, int n) {
    const FieldCtx& F = par.field;
    PbwElement r;
    for (const auto& [s, ds] : par.d) {
        ExpVec e = exp_zero(n);
        e[0] = static_cast<int32_t>(ipow(F.p(), s));
        pbw_add_term(F, r, e, ds);
    }
    return r;
}

TensorElement tail_w(const Ihoe2Params& par, int n) {
    const FieldCtx& F = par.field;
    const int p = F.p();
    std::vector<int> lam = lambda_coeffs(p);
    TensorElement w = t_zero(2);
    for (const auto& [s, bs] : par.b) {
        long long ps = ipow(p, s);
        for (int i = 1; i <= p - 1; ++i) {
            ExpVec l = exp_zero(n), r = exp_zero(n);
            l[0] = static_cast<int32_t>(i * ps);
            r[0] = static_cast<int32_t>((p - i) * ps);
            t_add_term(F, w, {l, r}, F.mul(bs, F.from_int(lam[static_cast<size_t>(i - 1)])));
        }
    }
    for (const auto& [st, cst] : par.c) {
        long long ps = ipow(p, st.first), pt = ipow(p, st.second);
        ExpVec l = exp_zero(n), r = exp_zero(n);
        l[0] = static_cast<int32_t>(ps);
        r[0] = static_cast<int32_t>(pt);
        t_add_term(F, w, {l, r}, cst);
        t_add_term(F, w, {r, l}, F.neg(cst));
    }
    return w;
}

namespace {

long long h_degree_cap(const Ihoe2Params& par) {
    const long long p = par.field.p();
    int top = 1;
    for (const auto& [s, v] : par.d) top = std::max(top, s);
    for (const auto& [s, v] : par.b) top = std::max(top, s + 1);
    for (const auto& [st, v] : par.c) top = std::max(top, st.second);
    return 8 * ipow(p, top + 1) + p * p * p + 64;
}

}  // namespace

HopfStructure build_h(const Ihoe2Params& par) {
    const FieldCtx& F = par.field;
    std::vector<std::vector<PbwElement>> sig{{pbw_gen(F, 2, 1)}};
    std::vector<std::vector<PbwElement>> del{{delta_x1(par)}};
    OrePresentation P(F, 2, std::move(sig), std::move(del), {}, h_degree_cap(par));
    std::vector<TensorElement> tails{t_zero(2), tail_w(par)};
    return HopfStructure(std::move(P), {GenKind::Primitive, GenKind::Primitive},
                         {exp_zero(2), exp_zero(2)}, std::move(tails));
}

HopfStructure build_k(const KParams& par) {
    const FieldCtx& F = par.field;
    if (F.is_zero(par.c)) throw Error("build_k: c must be nonzero");
    PbwElement sx1 = pbw_scale(F, par.c, pbw_gen(F, 2, 1));
    PbwElement dx1;
    {
        ExpVec e1 = exp_gen(2, 1);
        ExpVec ea = exp_zero(2);
        ea[0] = static_cast<int32_t>(par.a + 1);
        pbw_add_term(F, dx1, e1, par.b);
        pbw_add_term(F, dx1, ea, F.neg(par.b));
    }
    long long cap = 8 * (std::abs(par.a) + 2) * F.p() + F.p() * F.p() * F.p() + 64;
    OrePresentation P(F, 2, {{sx1}}, {{dx1}}, {1, 0}, cap);
    ExpVec ga = exp_zero(2);
    ga[0] = static_cast<int32_t>(par.a);
    HopfStructure HS(std::move(P), {GenKind::Grouplike, GenKind::Primitive},
                     {exp_zero(2), ga}, {t_zero(2), t_zero(2)});
    HopfReport rep = verify_hopf(HS, F.p() + 2, 4, 0);
    if (!rep.all_pass) throw Error("build_k: Hopf verification failed");
    return HS;
}

namespace {

struct Slot {
    int id;        // position in the fixed scan order
    long long A;   // alpha exponent: p^s - 1, p^{s+1}, or p^s + p^t
    Fq value;
};

std::vector<Slot> slots_of(const Ihoe2Params& par) {
    const long long p = par.field.p();
    std::vector<Slot> out;
    int id = 0;
    for (const auto& [s, v] : par.d) out.push_back({id++, ipow(p, s) - 1, v});
    id = 1000;
    for (const auto& [s, v] : par.b) out.push_back({id++, ipow(p, s + 1), v});
    id = 2000;
    for (const auto& [st, v] : par.c)
        out.push_back({id++, ipow(p, st.first) + ipow(p, st.second), v});
    return out;
}

bool support_matches(const Ihoe2Params& P, const Ihoe2Params& Q) {
    auto keys_d = [](const Ihoe2Params& x) {
        std::vector<int> k;
        for (const auto& [s, v] : x.d) k.push_back(s);
        return k;
    };
    auto keys_b = [](const Ihoe2Params& x) {
        std::vector<int> k;
        for (const auto& [s, v] : x.b) k.push_back(s);
        return k;
    };
    auto keys_c = [](const Ihoe2Params& x) {
        std::vector<std::pair<int, int>> k;
        for (const auto& [st, v] : x.c) k.push_back(st);
        return k;
    };
    return keys_d(P) == keys_d(Q) && keys_b(P) == keys_b(Q) && keys_c(P) == keys_c(Q);
}

// Generator of the cyclic group F^x plus its discrete-log table.
struct DlogTable {
    std::vector<Fq> exp;          // g^0 .. g^{q-2}
    std::map<Fq, long long> log;  // inverse
};

DlogTable build_dlog(const FieldCtx& F) {
    DlogTable T;
    const uint64_t q = F.size();
    for (uint64_t cand = 1; cand < q; ++cand) {
        Fq g = F.elt(cand);
        if (F.is_zero(g)) continue;
        T.exp.clear();
        T.log.clear();
        Fq cur = F.one();
        bool gen = true;
        for (uint64_t k = 0; k + 1 < q; ++k) {
            if (T.log.count(cur)) {
                gen = false;
                break;
            }
            T.exp.push_back(cur);
            T.log.emplace(cur, static_cast<long long>(k));
            cur = F.mul(cur, g);
        }
        if (gen) return T;
    }
    throw Error("dlog: no generator found");
}

// Solve alpha^{A_i} beta^{-1} = r_i over F^x via logs; smallest log(alpha).
bool solve_scalars(const FieldCtx& F, const std::vector<std::pair<long long, Fq>>& cons,
                   Fq* alpha, Fq* beta) {
    if (cons.empty()) {
        *alpha = F.one();
        *beta = F.one();
        return true;
    }
    DlogTable T = build_dlog(F);
    const long long ord = static_cast<long long>(F.size()) - 1;
    std::vector<std::pair<long long, long long>> lc;  // (A_i, log r_i)
    for (const auto& [A, r] : cons) lc.emplace_back(A % ord, T.log.at(r));
    for (long long x = 0; x < ord; ++x) {
        long long y = ((lc[0].first * x - lc[0].second) % ord + ord) % ord;
        bool ok = true;
        for (const auto& [A, lr] : lc)
            if (((A * x - y) % ord + ord) % ord != lr % ord) {
                ok = false;
                break;
            }
        if (ok) {
            *alpha = T.exp[static_cast<size_t>(x)];
            *beta = T.exp[static_cast<size_t>(y)];
            return true;
        }
    }
    return false;
}

}  // namespace

Ihoe2Params embed_params(const Ihoe2Params& P, const FieldCtx& bigger) {
    FieldEmbedding emb(P.field, bigger);
    Ihoe2Params Q(bigger);
    for (const auto& [s, v] : P.d) Q.set_d(s, emb.map(v));
    for (const auto& [s, v] : P.b) Q.set_b(s, emb.map(v));
    for (const auto& [st, v] : P.c) Q.set_c(st.first, st.second, emb.map(v));
    return Q;
}

IsoResult iso_scalars(const Ihoe2Params& P, const Ihoe2Params& Q) {
    IsoResult res;
    if (!P.field.same_field(Q.field)) throw Error("iso_scalars: field mismatch");
    if (!support_matches(P, Q)) return res;  // E0.3.1 preserves support
    auto sp = slots_of(P);
    auto sq = slots_of(Q);
    std::vector<std::pair<long long, Fq>> cons;
    const FieldCtx& F = P.field;
    for (size_t i = 0; i < sp.size(); ++i)
        cons.emplace_back(sp[i].A, F.div(sq[i].value, sp[i].value));
    Fq alpha, beta;
    if (solve_scalars(F, cons, &alpha, &beta)) {
        res.isomorphic = true;
        res.alpha = alpha;
        res.beta = beta;
        return res;
    }
    // Consistency only over an extension: rescan over F_{p^{mk}}, mk <= 6.
    for (int k = 2; P.field.m() * k <= 6; ++k) {
        FieldCtx big(F.p(), F.m() * k);
        Ihoe2Params Pb = embed_params(P, big), Qb = embed_params(Q, big);
        auto spb = slots_of(Pb);
        auto sqb = slots_of(Qb);
        std::vector<std::pair<long long, Fq>> consb;
        for (size_t i = 0; i < spb.size(); ++i)
            consb.emplace_back(spb[i].A, big.div(sqb[i].value, spb[i].value));
        Fq a2, b2;
        if (solve_scalars(big, consb, &a2, &b2)) {
            res.needs_extension = true;
            res.extension_degree = F.m() * k;
            return res;
        }
    }
    return res;
}

bool scalars_admissible(const Ihoe2Params& P, const Fq& alpha, const Fq& beta) {
    const FieldCtx& F = P.field;
    if (F.is_zero(alpha) || F.is_zero(beta)) return false;
    for (const Slot& s : slots_of(P)) {
        Fq lhs = F.mul(s.value, F.mul(F.pow(alpha, s.A), F.inv(beta)));
        if (!(lhs == s.value)) return false;
    }
    return true;
}

Ihoe2Params apply_scalars(const Ihoe2Params& P, const Fq& alpha, const Fq& beta) {
    const FieldCtx& F = P.field;
    if (F.is_zero(alpha) || F.is_zero(beta)) throw Error("apply_scalars: zero scalar");
    const long long p = F.p();
    Fq binv = F.inv(beta);
    Ihoe2Params Q(F);
    for (const auto& [s, v] : P.d)
        Q.set_d(s, F.mul(v, F.mul(F.pow(alpha, ipow(p, s) - 1), binv)));
    for (const auto& [s, v] : P.b)
        Q.set_b(s, F.mul(v, F.mul(F.pow(alpha, ipow(p, s + 1)), binv)));
    for (const auto& [st, v] : P.c)
        Q.set_c(st.first, st.second,
                F.mul(v, F.mul(F.pow(alpha, ipow(p, st.first) + ipow(p, st.second)), binv)));
    return Q;
}

bool params_equal(const Ihoe2Params& P, const Ihoe2Params& Q) {
    return P.d == Q.d && P.b == Q.b && P.c == Q.c;
}

namespace {

std::vector<uint64_t> value_tuple(const Ihoe2Params& P) {
    std::vector<uint64_t> t;
    for (const auto& [s, v] : P.d) t.push_back(P.field.index(v));
    for (const auto& [s, v] : P.b) t.push_back(P.field.index(v));
    for (const auto& [st, v] : P.c) t.push_back(P.field.index(v));
    return t;
}

}  // namespace

Ihoe2Params canonical_form(const Ihoe2Params& P) {
    const FieldCtx& F = P.field;
    if (P.all_zero()) return P;  // Aut is GL_2 of a skew polynomial ring; keep 0
    const uint64_t units = F.size() - 1;
    if (units * units <= (1u << 22)) {
        // Exhaustive orbit minimum in the fixed scan order.
        Ihoe2Params best = P;
        std::vector<uint64_t> best_t = value_tuple(P);
        for (uint64_t ia = 1; ia <= units; ++ia)
            for (uint64_t ib = 1; ib <= units; ++ib) {
                Ihoe2Params cand = apply_scalars(P, F.elt(ia), F.elt(ib));
                std::vector<uint64_t> t = value_tuple(cand);
                if (t < best_t) {
                    best_t = std::move(t);
                    best = std::move(cand);
                }
            }
        return best;
    }
    // Large-field fallback: scale the first nonzero slot to 1 with beta, then
    // normalize the next slot with independent alpha exponent along its orbit.
    auto sl = slots_of(P);
    const Slot& first = sl[0];
    long long A0 = first.A;
    size_t second = sl.size();
    for (size_t i = 1; i < sl.size(); ++i)
        if (sl[i].A != A0) {
            second = i;
            break;
        }
    Fq best_alpha = F.one();
    if (second < sl.size()) {
        uint64_t best_idx = ~0ull;
        for (uint64_t ia = 1; ia <= units; ++ia) {
            Fq a = F.elt(ia);
            Fq v = F.mul(F.div(sl[second].value, first.value),
                         F.pow(a, sl[second].A - A0));
            uint64_t idx = F.index(v);
            if (idx < best_idx) {
                best_idx = idx;
                best_alpha = a;
            }
        }
    }
    Fq beta = F.mul(first.value, F.pow(best_alpha, A0));
    return apply_scalars(P, best_alpha, beta);
}

bool check_hopf_map(const Ihoe2Params& P, const Ihoe2Params& Q, const Fq& alpha,
                    const Fq& beta, const std::map<int, Fq>& e_seq) {
    const FieldCtx& F = P.field;
    if (F.is_zero(alpha) || F.is_zero(beta)) throw Error("check_hopf_map: zero scalar");
    HopfStructure H = build_h(P);
    HopfStructure Hp = build_h(Q);
    const OrePresentation& T = Hp.base();
    const long long p = F.p();

    std::vector<PbwElement> img(2);
    img[0] = pbw_scale(F, alpha, pbw_gen(F, 2, 1));
    img[1] = pbw_scale(F, beta, pbw_gen(F, 2, 2));
    for (const auto& [s, es] : e_seq) {
        ExpVec e = exp_zero(2);
        e[0] = static_cast<int32_t>(ipow(p, s));
        pbw_add_term(F, img[1], e, es);
    }

    // Algebra map: phi(X_2)phi(X_1) - phi(X_1)phi(X_2) - phi(delta(X_1)) = 0.
    PbwElement lhs = commutator(T, img[1], img[0]);
    PbwElement rhs = hom_eval(T, img, delta_x1(P));
    if (!(lhs == rhs)) return false;

    // Coalgebra map: (phi⊗phi)Delta(X_i) = Delta'(phi(X_i)).
    CoprodCache cache;
    for (int i = 1; i <= 2; ++i) {
        TensorElement d = coproduct(H, pbw_gen(F, 2, i));
        TensorElement mapped = t_zero(2);
        for (const auto& [k, c] : d.terms) {
            PbwElement l = hom_eval(T, img, pbw_mono(F, k[0], F.one()));
            PbwElement r = hom_eval(T, img, pbw_mono(F, k[1], F.one()));
            mapped = t_add(F, mapped, t_scale(F, c, t_of(F, l, r)));
        }
        TensorElement target = coproduct(Hp, img[static_cast<size_t>(i - 1)], &cache);
        if (!(mapped == target)) return false;
    }
    return true;
}

}  // namespace ihoe
