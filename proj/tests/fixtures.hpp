#pragma once

#include <random>

#include "ihoe/ihoe2.hpp"

namespace ihoe::testfix {

// 2-step presentation k[X_1][X_2; Id, delta] with delta(X_1) given.
inline OrePresentation pres_h2(const FieldCtx& F, const PbwElement& delta_x1,
                               long long cap = 0) {
    return OrePresentation(F, 2, {{pbw_gen(F, 2, 1)}}, {{delta_x1}}, {}, cap);
}

// Heisenberg tower: [X_2,X_1] = 0, [X_3,X_1] = 0, [X_3,X_2] = X_1.
inline OrePresentation pres_heisenberg(const FieldCtx& F) {
    std::vector<std::vector<PbwElement>> sig{
        {pbw_gen(F, 3, 1)}, {pbw_gen(F, 3, 1), pbw_gen(F, 3, 2)}};
    std::vector<std::vector<PbwElement>> del{
        {pbw_zero()}, {pbw_zero(), pbw_gen(F, 3, 1)}};
    return OrePresentation(F, 3, std::move(sig), std::move(del));
}

// sl2 tower: e = X_1, h = X_2, f = X_3 with [h,e] = 2e, [f,e] = -h,
// [f,h] = 2f; Ore data sigma_3(X_2) = X_2 + 2, delta_3(X_1) = -X_2.
inline OrePresentation pres_sl2(const FieldCtx& F) {
    std::vector<std::vector<PbwElement>> sig{
        {pbw_gen(F, 3, 1)},
        {pbw_gen(F, 3, 1),
         pbw_add(F, pbw_gen(F, 3, 2), pbw_const(F, 3, F.from_int(2)))}};
    std::vector<std::vector<PbwElement>> del{
        {pbw_scale(F, F.from_int(2), pbw_gen(F, 3, 1))},
        {pbw_neg(F, pbw_gen(F, 3, 2)), pbw_zero()}};
    return OrePresentation(F, 3, std::move(sig), std::move(del));
}

inline HopfStructure hopf_primitive(OrePresentation P) {
    int n = P.n();
    return HopfStructure(std::move(P),
                         std::vector<GenKind>(static_cast<size_t>(n), GenKind::Primitive),
                         {}, {});
}

inline Ihoe2Params mk_params(int p, int m, std::vector<std::pair<int, int>> d,
                             std::vector<std::pair<int, int>> b = {},
                             std::vector<std::tuple<int, int, int>> c = {}) {
    FieldCtx F(p, m);
    Ihoe2Params par(F);
    for (auto [s, v] : d) par.set_d(s, F.from_int(v));
    for (auto [s, v] : b) par.set_b(s, F.from_int(v));
    for (auto [s, t, v] : c) par.set_c(s, t, F.from_int(v));
    return par;
}

inline Ihoe2Params random_params(std::mt19937_64& rng, const FieldCtx& F,
                                 int max_support = 2) {
    std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
    Ihoe2Params par(F);
    for (int s = 0; s <= max_support; ++s) {
        par.set_d(s, F.elt(dist(rng)));
        par.set_b(s, F.elt(dist(rng)));
        for (int t = s + 1; t <= max_support; ++t) par.set_c(s, t, F.elt(dist(rng)));
    }
    return par;
}

inline PbwElement random_x1_poly(std::mt19937_64& rng, const FieldCtx& F, int n,
                                 int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<uint64_t> dc(0, F.size() - 1);
    PbwElement f;
    for (int t = 0; t < 3; ++t) {
        ExpVec e = exp_zero(n);
        e[0] = dd(rng);
        pbw_add_term(F, f, e, F.elt(dc(rng)));
    }
    return f;
}

}  // namespace ihoe::testfix
