#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ihoe/gf.hpp"

namespace ihoe {

/// Exponent vector of a PBW monomial X_1^{e_1}...X_n^{e_n}. Entries are
/// non-negative except for Laurent generators.
using ExpVec = std::vector<int32_t>;

/// Sparse exact element in a fixed PBW basis: exponent vector -> nonzero
/// coefficient. Canonical: zero coefficients are never stored, so equality
/// is map equality.
struct PbwElement {
    std::map<ExpVec, Fq> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const PbwElement&, const PbwElement&) = default;
};

ExpVec exp_zero(int n);
ExpVec exp_gen(int n, int i);  // 1-based generator index
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
long long exp_total_degree(const ExpVec& e);  // sum of |e_i|
int exp_top_gen(const ExpVec& e);             // largest i with e_i != 0, or 0

PbwElement pbw_zero();
PbwElement pbw_const(const FieldCtx& F, int n, const Fq& c);
PbwElement pbw_one(const FieldCtx& F, int n);
PbwElement pbw_mono(const FieldCtx& F, const ExpVec& e, const Fq& c);
PbwElement pbw_gen(const FieldCtx& F, int n, int i);

void pbw_add_term(const FieldCtx& F, PbwElement& a, const ExpVec& e, const Fq& c);
PbwElement pbw_add(const FieldCtx& F, const PbwElement& a, const PbwElement& b);
PbwElement pbw_sub(const FieldCtx& F, const PbwElement& a, const PbwElement& b);
PbwElement pbw_neg(const FieldCtx& F, const PbwElement& a);
PbwElement pbw_scale(const FieldCtx& F, const Fq& c, const PbwElement& a);

long long pbw_max_degree(const PbwElement& a);
/// Coefficient of the monomial e (zero if absent).
Fq pbw_coeff(const PbwElement& a, const ExpVec& e);
/// True when only generators < i occur.
bool pbw_below(const PbwElement& a, int i);

std::string pbw_to_string(const FieldCtx& F, const PbwElement& a,
                          const std::string& var = "X");

}  // namespace ihoe
