#pragma once

#include "ihoe/orealg.hpp"

namespace ihoe {

/// Element of H⊗H (arity 2) or H⊗H⊗H (arity 3) over the PBW basis:
/// component exponent vectors -> nonzero coefficient.
struct TensorElement {
    int arity = 2;
    std::map<std::vector<ExpVec>, Fq> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

TensorElement t_zero(int arity = 2);
TensorElement t_one(const FieldCtx& F, int n, int arity = 2);
void t_add_term(const FieldCtx& F, TensorElement& t, const std::vector<ExpVec>& key,
                const Fq& c);
TensorElement t_add(const FieldCtx& F, const TensorElement& a, const TensorElement& b);
TensorElement t_sub(const FieldCtx& F, const TensorElement& a, const TensorElement& b);
TensorElement t_neg(const FieldCtx& F, const TensorElement& a);
TensorElement t_scale(const FieldCtx& F, const Fq& c, const TensorElement& a);

/// a⊗b (arity 2) from PBW elements.
TensorElement t_of(const FieldCtx& F, const PbwElement& a, const PbwElement& b);
TensorElement t_of3(const FieldCtx& F, const PbwElement& a, const PbwElement& b,
                    const PbwElement& c);
/// Swap the two components of an arity-2 element.
TensorElement t_flip(const TensorElement& a);

/// Componentwise product (a⊗b)(c⊗d) = ac⊗bd; arity mismatch is an error.
TensorElement tensor_mul(const OrePresentation& P, const TensorElement& u,
                         const TensorElement& v);
TensorElement tensor_power(const OrePresentation& P, const TensorElement& u, long long k);

/// Multiplication contraction m(Σ a_i⊗b_i) = Σ a_i b_i; arity must be 2.
PbwElement contract_m(const OrePresentation& P, const TensorElement& u);

/// ad_b applied k times, ad_b(x) = bx - xb.
TensorElement ad_power(const OrePresentation& P, const TensorElement& b,
                       const TensorElement& t, int k);

/// Reduction modulo X_1^{s} H⊗H + H⊗X_1^{p_thresh} H (Notation 8.5): drops
/// every term whose left X_1-exponent is >= s or right X_1-exponent is >=
/// p_thresh. Valid as a quotient map because the subspace is monomial-spanned.
TensorElement reduce_mod_x1(const TensorElement& t, int s, int p_thresh);

/// True when every component of every term lies in k[X_1] (no higher
/// generators) with exponents divisible by `divisor` (use 1 for plain
/// k[X_1]⊗k[X_1] membership).
bool tensor_in_x1_subalgebra(const TensorElement& t, int divisor);

/// Jacobson binomial identity in the tensor square.
struct TensorJacobsonReport {
    TensorElement lhs, rhs;
    bool hypothesis_ok = false;
    bool holds = false;
};
TensorJacobsonReport jacobson_binomial_tensor(const OrePresentation& P,
                                              const TensorElement& a,
                                              const TensorElement& b);

std::string tensor_to_string(const FieldCtx& F, const TensorElement& t);

}  // namespace ihoe
