#pragma once

#include "ihoe/center.hpp"
#include "ihoe/linalg.hpp"

namespace ihoe {

/// Structure constants of a finite-dimensional quotient of H(d,b,c) with
/// PBW residue-monomial basis.
struct FinDimAlgebra {
    FieldCtx field;
    int dim = 0;
    std::vector<ExpVec> basis;  // residue monomials X_1^i X_2^j
    std::vector<Fq> sc;         // sc[(i*dim+j)*dim+k]: coeff of e_k in e_i e_j
    int unit_index = 0;

    explicit FinDimAlgebra(FieldCtx F) : field(std::move(F)) {}
    const Fq& c(int i, int j, int k) const {
        return sc[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
};

/// Rewriting rules of a monomial-reduced quotient: X_1^{x1_period} -> scalar,
/// X_2^{x2_period} -> x2_rhs (a polynomial in X_2 alone).
struct QuotRules {
    int x1_period = 0;
    Fq x1_value;
    int x2_period = 0;
    PbwElement x2_rhs;
};
PbwElement quot_reduce(const FieldCtx& F, const QuotRules& R, const PbwElement& a);
TensorElement quot_reduce_tensor(const FieldCtx& F, const QuotRules& R,
                                 const TensorElement& t);

std::vector<Fq> fin_coords(const FinDimAlgebra& A, const PbwElement& reduced);
std::vector<Fq> fin_mul(const FinDimAlgebra& A, const std::vector<Fq>& u,
                        const std::vector<Fq>& v);
/// Associativity on basis triples (all for dim <= p*p, sampled otherwise)
/// plus the unit law.
bool fin_associativity_check(const FinDimAlgebra& A, int max_triples, uint64_t seed);

/// H_{alpha,beta} = H / <X_1^p - alpha, z - beta> H; dimension exactly p^2.
FinDimAlgebra quotient_fiber(const Ihoe2Params& par, const Fq& alpha, const Fq& beta,
                             QuotRules* rules_out = nullptr);

enum class FiberKind { Azumaya, LocalNilpotent, BlockOfP };

struct FiberClassification {
    FiberKind kind = FiberKind::Azumaya;
    FieldCtx work_field;  // field of the witnesses (extension when needed)
    // Azumaya witnesses: generator images and the monomial span rank.
    Mat x1_mat, x2_mat;
    int span_rank = 0;
    // LocalNilpotent witnesses.
    bool nilpotent_ok = false;
    // BlockOfP witnesses: u^p = 0, u^{p-1} != 0, wu - uw = u, w^p - w = beta d0^{-p}.
    bool block_ok = false;
    std::vector<std::pair<Fq, Fq>> characters;  // (chi(X_1), chi(X_2)) over work_field
    bool witnesses_ok = false;

    explicit FiberClassification(FieldCtx F) : work_field(std::move(F)) {}
};
FiberClassification classify_fiber(const Ihoe2Params& par, const Fq& alpha, const Fq& beta);

/// d(x) = sum_{s>=1} d_s x^{p^{s-1}} (Prop 8.2 notation).
Fq d_poly(const Ihoe2Params& par, const Fq& x);
/// The Azumaya criterion value d_0^p alpha + d(alpha)^p.
Fq azumaya_criterion(const Ihoe2Params& par, const Fq& alpha);

struct LocusReport {
    std::vector<Fq> roots;    // roots of sum_s d_s^p x^{p^s} = 0 in the given field
    int r_closure = 0;        // distinct roots over the algebraic closure
    int splitting_degree = 0; // absolute degree of the minimal splitting field (0 if > 6)
};
LocusReport nonazumaya_locus(const Ihoe2Params& par, const FieldCtx& field);

struct RestrictedReport {
    FinDimAlgebra alg;
    QuotRules rules;
    std::string case_name;        // "8.9(2)", "8.9(3)", "8.10(2)", "8.10(3)"
    int expected_dim = 0;
    bool dim_ok = false;
    bool ideal_coproduct_ok = false;  // generators of the ideal die in the quotient tensor
    bool presentation_ok = false;     // case relations and coproduct tails
    bool change_of_vars_ok = false;   // Remark 8.11(2); trivially true off case 8.10(3)

    explicit RestrictedReport(FieldCtx F) : alg(std::move(F)) {}
};
/// H / C(H)_+ H with the hopf_center verdict; dimension p^2 (b_0 = 0) or p^3.
RestrictedReport restricted_quotient(const Ihoe2Params& par);

struct SimpleCensus {
    std::vector<int> dims;  // simple-module dimensions with multiplicity
    bool sum_of_squares_tight = false;
};
SimpleCensus simple_census(const FinDimAlgebra& A, const FiberClassification& C);

}  // namespace ihoe
