#include "ihoe/pbw.hpp"

#include <cstdlib>

namespace ihoe {

ExpVec exp_zero(int n) { return ExpVec(static_cast<size_t>(n), 0); }

ExpVec exp_gen(int n, int i) {
    ExpVec e = exp_zero(n);
    e[static_cast<size_t>(i - 1)] = 1;
    return e;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

long long exp_total_degree(const ExpVec& e) {
    long long d = 0;
    for (int32_t x : e) d += std::abs(static_cast<long long>(x));
    return d;
}

int exp_top_gen(const ExpVec& e) {
    for (int i = static_cast<int>(e.size()); i >= 1; --i)
        if (e[static_cast<size_t>(i - 1)] != 0) return i;
    return 0;
}

PbwElement pbw_zero() { return {}; }

PbwElement pbw_const(const FieldCtx& F, int n, const Fq& c) {
    PbwElement a;
    if (!F.is_zero(c)) a.terms.emplace(exp_zero(n), c);
    return a;
}

PbwElement pbw_one(const FieldCtx& F, int n) { return pbw_const(F, n, F.one()); }

PbwElement pbw_mono(const FieldCtx& F, const ExpVec& e, const Fq& c) {
    PbwElement a;
    if (!F.is_zero(c)) a.terms.emplace(e, c);
    return a;
}

PbwElement pbw_gen(const FieldCtx& F, int n, int i) {
    return pbw_mono(F, exp_gen(n, i), F.one());
}

void pbw_add_term(const FieldCtx& F, PbwElement& a, const ExpVec& e, const Fq& c) {
    if (F.is_zero(c)) return;
    auto it = a.terms.find(e);
    if (it == a.terms.end()) {
        a.terms.emplace(e, c);
        return;
    }
    Fq s = F.add(it->second, c);
    if (F.is_zero(s))
        a.terms.erase(it);
    else
        it->second = s;
}

PbwElement pbw_add(const FieldCtx& F, const PbwElement& a, const PbwElement& b) {
    PbwElement r = a;
    for (const auto& [e, c] : b.terms) pbw_add_term(F, r, e, c);
    return r;
}

PbwElement pbw_sub(const FieldCtx& F, const PbwElement& a, const PbwElement& b) {
    PbwElement r = a;
    for (const auto& [e, c] : b.terms) pbw_add_term(F, r, e, F.neg(c));
    return r;
}

PbwElement pbw_neg(const FieldCtx& F, const PbwElement& a) {
    PbwElement r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, F.neg(c));
    return r;
}

PbwElement pbw_scale(const FieldCtx& F, const Fq& c, const PbwElement& a) {
    PbwElement r;
    if (F.is_zero(c)) return r;
    for (const auto& [e, x] : a.terms) {
        Fq y = F.mul(c, x);
        if (!F.is_zero(y)) r.terms.emplace(e, y);
    }
    return r;
}

long long pbw_max_degree(const PbwElement& a) {
    long long d = 0;
    for (const auto& [e, c] : a.terms) d = std::max(d, exp_total_degree(e));
    return d;
}

Fq pbw_coeff(const PbwElement& a, const ExpVec& e) {
    auto it = a.terms.find(e);
    return it == a.terms.end() ? Fq{} : it->second;
}

bool pbw_below(const PbwElement& a, int i) {
    for (const auto& [e, c] : a.terms)
        if (exp_top_gen(e) >= i) return false;
    return true;
}

std::string pbw_to_string(const FieldCtx& F, const PbwElement& a, const std::string& var) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : a.terms) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        Fq one = F.one();
        if (mono.empty())
            s += F.to_string(c);
        else if (c == one)
            s += mono;
        else
            s += F.to_string(c) + "*" + mono;
    }
    return s;
}

}  // namespace ihoe
