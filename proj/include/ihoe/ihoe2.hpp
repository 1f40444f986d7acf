#pragma once

#include "ihoe/hopf.hpp"

namespace ihoe {

/// Parameters of the 2-step family H(d,b,c): finitely supported scalar
/// sequences d_s, b_s (s >= 0) and c_{s,t} (0 <= s < t).
struct Ihoe2Params {
    FieldCtx field;
    std::map<int, Fq> d;
    std::map<int, Fq> b;
    std::map<std::pair<int, int>, Fq> c;

    explicit Ihoe2Params(FieldCtx F) : field(std::move(F)) {}
    void set_d(int s, const Fq& v);
    void set_b(int s, const Fq& v);
    void set_c(int s, int t, const Fq& v);
    bool all_zero() const { return d.empty() && b.empty() && c.empty(); }
    bool commutative() const { return d.empty(); }  // Prop 8.1(2)
    Fq d0() const;
    Fq b0() const;
};

/// Parameters of the Laurent family K(a,b,c) = k[X_1^{±1}][X_2;sigma,delta],
/// sigma(X_1) = c X_1, delta(X_1) = b(X_1 - X_1^{a+1}); c != 0.
struct KParams {
    FieldCtx field;
    long long a = 0;
    Fq b;
    Fq c;
};

/// lambda_i = (p-1)!/(i!(p-i)!) mod p for i = 1..p-1 (exact integer
/// binom(p,i)/p reduced mod p).
std::vector<int> lambda_coeffs(int p);

/// The tail w of E0.2.2 built from lambda coefficients and the Y_{s,t}
/// antisymmetric terms, as an arity-2 tensor over k[X_1].
TensorElement tail_w(const Ihoe2Params& par, int n = 2);
/// delta(X_1) = sum_s d_s X_1^{p^s}.
PbwElement delta_x1(const Ihoe2Params& par, int n = 2);

HopfStructure build_h(const Ihoe2Params& par);
HopfStructure build_k(const KParams& par);

struct IsoResult {
    bool isomorphic = false;
    Fq alpha, beta;          // valid when isomorphic over the ambient field
    bool needs_extension = false;
    int extension_degree = 0;  // absolute degree m*k when needs_extension
};
IsoResult iso_scalars(const Ihoe2Params& P, const Ihoe2Params& Q);

/// Verifies that phi(X_1) = alpha X_1', phi(X_2) = beta X_2' + sum e_s X_1'^{p^s}
/// is both an algebra map and a coalgebra map H(P) -> H(Q).
bool check_hopf_map(const Ihoe2Params& P, const Ihoe2Params& Q, const Fq& alpha,
                    const Fq& beta, const std::map<int, Fq>& e_seq);

/// Whether (alpha, beta) satisfies the automorphism constraints E5.11.2 of P.
bool scalars_admissible(const Ihoe2Params& P, const Fq& alpha, const Fq& beta);

Ihoe2Params apply_scalars(const Ihoe2Params& P, const Fq& alpha, const Fq& beta);
/// Deterministic orbit representative under the (alpha,beta)-action.
Ihoe2Params canonical_form(const Ihoe2Params& P);

bool params_equal(const Ihoe2Params& P, const Ihoe2Params& Q);
Ihoe2Params embed_params(const Ihoe2Params& P, const FieldCtx& bigger);

long long ipow(long long b, int e);

}  // namespace ihoe
