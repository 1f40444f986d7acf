#include "ihoe/center.hpp"

namespace ihoe {

CentralityResult is_central(const OrePresentation& P, const PbwElement& h) {
    CentralityResult res;
    for (int i = 1; i <= P.n(); ++i) {
        PbwElement c = commutator(P, h, pbw_gen(P.field(), P.n(), i));
        if (!c.is_zero()) {
            res.witness_gen = i;
            res.witness = std::move(c);
            return res;
        }
    }
    res.central = true;
    return res;
}

PbwElement central_z(const Ihoe2Params& par) {
    const FieldCtx& F = par.field;
    const int p = F.p();
    PbwElement z;
    ExpVec x2p = exp_zero(2);
    x2p[1] = static_cast<int32_t>(p);
    pbw_add_term(F, z, x2p, F.one());
    pbw_add_term(F, z, exp_gen(2, 2), F.neg(F.pow(par.d0(), p - 1)));
    return z;
}

TensorElement tensor_b(const FieldCtx& F, int n) {
    TensorElement b = t_zero(2);
    t_add_term(F, b, {exp_gen(n, 2), exp_zero(n)}, F.one());
    t_add_term(F, b, {exp_zero(n), exp_gen(n, 2)}, F.one());
    return b;
}

DeltaZReport delta_z_check(const Ihoe2Params& par) {
    const FieldCtx& F = par.field;
    const int p = F.p();
    HopfStructure HS = build_h(par);
    const OrePresentation& P = HS.base();
    DeltaZReport rep;

    PbwElement z = central_z(par);
    rep.delta_z = coproduct(HS, z);

    TensorElement w = tail_w(par);
    TensorElement b = tensor_b(F);
    rep.tail = t_add(F, t_scale(F, F.neg(F.pow(par.d0(), p - 1)), w),
                     ad_power(P, b, w, p - 1));
    // z⊗1 + 1⊗z + w^p + tail, assembled without the coproduct.
    TensorElement full_tail = t_add(F, tensor_power(P, w, p), rep.tail);
    TensorElement zz = full_tail;
    for (const auto& [e, c] : z.terms) {
        t_add_term(F, zz, {e, exp_zero(2)}, c);
        t_add_term(F, zz, {exp_zero(2), e}, c);
    }
    rep.assembled = std::move(zz);
    rep.equal = (rep.delta_z == rep.assembled);
    rep.tail_in_kx1 = tensor_in_x1_subalgebra(full_tail, 1);
    return rep;
}

HopfCenterReport hopf_center(const Ihoe2Params& par) {
    if (par.commutative())
        throw Error("hopf_center: requires a noncommutative presentation (d != 0)");
    const FieldCtx& F = par.field;
    const int p = F.p();
    HopfStructure HS = build_h(par);
    const OrePresentation& P = HS.base();

    TensorElement w = tail_w(par);
    TensorElement b = tensor_b(F);
    HopfCenterReport rep;
    rep.tail = t_add(F, t_scale(F, F.neg(F.pow(par.d0(), p - 1)), w),
                     ad_power(P, b, w, p - 1));
    rep.membership = tensor_in_x1_subalgebra(rep.tail, p);
    rep.verdict = rep.membership ? CenterVerdict::PolyX1pZ : CenterVerdict::PolyX1pZp;

    bool b0_zero = F.is_zero(par.b0());
    if (b0_zero != rep.membership)
        throw Error("hopf_center: structural criterion disagrees with the b_0 = 0 criterion");
    return rep;
}

}  // namespace ihoe
