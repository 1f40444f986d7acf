#include "ihoe/orealg.hpp"

#include <algorithm>

#include "ihoe/linalg.hpp"

namespace ihoe {

namespace {

long long default_cap(const FieldCtx& F) {
    long long p = F.p();
    return p * p * p;
}

void check_cap(const OrePresentation& P, const ExpVec& e) {
    if (exp_total_degree(e) > P.degree_cap())
        throw Error("degree cap exceeded (cap " + std::to_string(P.degree_cap()) + ")");
}

// Single-letter images. letter > 0 means X_j, letter < 0 means X_j^{-1}.
PbwElement sigma_letter(const OrePresentation& P, int i, int j, bool inverse);
PbwElement delta_letter(const OrePresentation& P, int i, int j, bool inverse);

PbwElement invert_monomial(const OrePresentation& P, const PbwElement& a) {
    if (a.terms.size() != 1) throw Error("invert_monomial: not a monomial");
    const auto& [e, c] = *a.terms.begin();
    for (size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0 && !P.is_laurent(static_cast<int>(k) + 1))
            throw Error("invert_monomial: non-Laurent generator");
    ExpVec inv(e.size());
    for (size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
    return pbw_mono(P.field(), inv, P.field().inv(c));
}

PbwElement sigma_letter(const OrePresentation& P, int i, int j, bool inverse) {
    const PbwElement& img = P.sigma_image(i, j);
    if (!inverse) return img;
    return invert_monomial(P, img);
}

PbwElement delta_letter(const OrePresentation& P, int i, int j, bool inverse) {
    const PbwElement& img = P.delta_image(i, j);
    if (!inverse) return img;
    // d(1) = 0 forces d(X^{-1}) = -s(X)^{-1} d(X) X^{-1}.
    PbwElement sinv = invert_monomial(P, P.sigma_image(i, j));
    PbwElement xinv = pbw_mono(P.field(), [&] {
        ExpVec e = exp_zero(P.n());
        e[static_cast<size_t>(j - 1)] = -1;
        return e;
    }(), P.field().one());
    PbwElement r = mul(P, sinv, img);
    r = mul(P, r, xinv);
    return pbw_neg(P.field(), r);
}

PbwElement sigma_mono(const OrePresentation& P, int i, const ExpVec& e) {
    const FieldCtx& F = P.field();
    PbwElement acc = pbw_one(F, P.n());
    for (int j = 1; j < i; ++j) {
        int32_t k = e[static_cast<size_t>(j - 1)];
        if (k == 0) continue;
        PbwElement img = sigma_letter(P, i, j, k < 0);
        PbwElement pw = power(P, img, std::abs(static_cast<long long>(k)));
        acc = mul(P, acc, pw);
    }
    return acc;
}

// Twisted Leibniz over the letters of the monomial, folded right to left:
// d(L w) = s(L) d(w) + d(L) w.
PbwElement delta_mono(const OrePresentation& P, int i, const ExpVec& e) {
    const FieldCtx& F = P.field();
    PbwElement dacc = pbw_zero();
    ExpVec suffix = exp_zero(P.n());
    for (int j = i - 1; j >= 1; --j) {
        int32_t k = e[static_cast<size_t>(j - 1)];
        if (k == 0) continue;
        bool inverse = k < 0;
        PbwElement sL = sigma_letter(P, i, j, inverse);
        PbwElement dL = delta_letter(P, i, j, inverse);
        int32_t step = inverse ? -1 : 1;
        for (int32_t t = 0; t != k; t += step) {
            PbwElement term = mul(P, dL, pbw_mono(F, suffix, F.one()));
            dacc = pbw_add(F, mul(P, sL, dacc), term);
            suffix[static_cast<size_t>(j - 1)] += step;
        }
    }
    return dacc;
}

}  // namespace

OrePresentation::OrePresentation(FieldCtx field, int n,
                                 std::vector<std::vector<PbwElement>> sigma_images,
                                 std::vector<std::vector<PbwElement>> delta_images,
                                 std::vector<uint8_t> laurent, long long degree_cap)
    : field_(std::move(field)),
      n_(n),
      sigma_images_(std::move(sigma_images)),
      delta_images_(std::move(delta_images)),
      laurent_(std::move(laurent)),
      degree_cap_(degree_cap > 0 ? degree_cap : default_cap(field_)) {
    if (n_ < 1) throw Error("presentation: need at least one generator");
    if (laurent_.empty()) laurent_.assign(static_cast<size_t>(n_), 0);
    if (static_cast<int>(laurent_.size()) != n_)
        throw Error("presentation: laurent flag length mismatch");
    size_t steps = static_cast<size_t>(n_ > 1 ? n_ - 1 : 0);
    if (sigma_images_.size() != steps || delta_images_.size() != steps)
        throw Error("presentation: need sigma/delta images for generators 2..n");
    for (int i = 2; i <= n_; ++i) {
        auto& srow = sigma_images_[static_cast<size_t>(i - 2)];
        auto& drow = delta_images_[static_cast<size_t>(i - 2)];
        if (static_cast<int>(srow.size()) != i - 1 || static_cast<int>(drow.size()) != i - 1)
            throw Error("presentation: image row " + std::to_string(i) + " has wrong length");
    }
    sigma_id_.assign(static_cast<size_t>(n_), 1);
    validate_presentation(*this);
}

const PbwElement& OrePresentation::sigma_image(int i, int j) const {
    return sigma_images_[static_cast<size_t>(i - 2)][static_cast<size_t>(j - 1)];
}

const PbwElement& OrePresentation::delta_image(int i, int j) const {
    return delta_images_[static_cast<size_t>(i - 2)][static_cast<size_t>(j - 1)];
}

void validate_presentation(OrePresentation& P) {
    const FieldCtx& F = P.field_;
    const int n = P.n_;
    for (int i = 2; i <= n; ++i) {
        bool all_id = true;
        for (int j = 1; j < i; ++j) {
            const PbwElement& s = P.sigma_image(i, j);
            const PbwElement& d = P.delta_image(i, j);
            if (!pbw_below(s, i) || !pbw_below(d, i))
                throw Error("presentation: image of X_" + std::to_string(j) +
                            " under step " + std::to_string(i) + " uses generator >= " +
                            std::to_string(i));
            for (const auto& [e, c] : s.terms)
                for (size_t k = 0; k < e.size(); ++k)
                    if (e[k] < 0 && !P.is_laurent(static_cast<int>(k) + 1))
                        throw Error("presentation: negative exponent at non-Laurent generator");
            if (P.is_laurent(j)) {
                if (s.terms.size() != 1)
                    throw Error("presentation: sigma image of Laurent generator must be a monomial");
                invert_monomial(P, s);  // throws when not invertible
            }
            if (s != pbw_gen(F, n, j)) all_id = false;
            for (const auto& [e, c] : s.terms)
                if (exp_total_degree(e) >= 2) P.sigma_inconclusive_ = true;
        }
        P.sigma_id_[static_cast<size_t>(i - 1)] = all_id ? 1 : 0;

        // Invertibility of the induced map on the linear layer.
        Mat lin(i - 1, i - 1);
        for (int j = 1; j < i; ++j)
            for (int k = 1; k < i; ++k)
                lin.at(j - 1, k - 1) = pbw_coeff(P.sigma_image(i, j), exp_gen(n, k));
        {
            Mat copy = lin;
            std::vector<int> piv;
            if (rref(F, copy, &piv) != i - 1)
                throw Error("presentation: sigma_" + std::to_string(i) +
                            " linear part is singular");
        }

        // sigma_i and the formal delta_i must respect every relation of H_{(i-1)}.
        for (int k = 2; k < i; ++k)
            for (int j = 1; j < k; ++j) {
                PbwElement xk = pbw_gen(F, n, k), xj = pbw_gen(F, n, j);
                PbwElement rel = mul(P, xk, xj);  // PBW form of X_k X_j
                PbwElement s_lhs = mul(P, skew_eval(P, i, SkewKind::Sigma, xk),
                                       skew_eval(P, i, SkewKind::Sigma, xj));
                if (skew_eval(P, i, SkewKind::Sigma, rel) != s_lhs)
                    throw Error("presentation: sigma_" + std::to_string(i) +
                                " does not respect relation (" + std::to_string(k) + "," +
                                std::to_string(j) + ")");
                PbwElement d_lhs =
                    pbw_add(F,
                            mul(P, skew_eval(P, i, SkewKind::Sigma, xk),
                                skew_eval(P, i, SkewKind::Delta, xj)),
                            mul(P, skew_eval(P, i, SkewKind::Delta, xk), xj));
                if (skew_eval(P, i, SkewKind::Delta, rel) != d_lhs)
                    throw Error("presentation: delta_" + std::to_string(i) +
                                " does not respect relation (" + std::to_string(k) + "," +
                                std::to_string(j) + ")");
            }
    }
}

OrePresentation polynomial_presentation(const FieldCtx& F, int n, long long degree_cap) {
    std::vector<std::vector<PbwElement>> sig, del;
    for (int i = 2; i <= n; ++i) {
        std::vector<PbwElement> srow, drow;
        for (int j = 1; j < i; ++j) {
            srow.push_back(pbw_gen(F, n, j));
            drow.push_back(pbw_zero());
        }
        sig.push_back(std::move(srow));
        del.push_back(std::move(drow));
    }
    return OrePresentation(F, n, std::move(sig), std::move(del), {}, degree_cap);
}

PbwElement skew_eval(const OrePresentation& P, int i, SkewKind kind, const PbwElement& a) {
    if (!pbw_below(a, i))
        throw Error("skew_eval: element uses generator >= " + std::to_string(i));
    const FieldCtx& F = P.field();
    if (kind == SkewKind::Sigma && P.sigma_is_identity(i)) return a;
    PbwElement out;
    for (const auto& [e, c] : a.terms) {
        PbwElement img = (kind == SkewKind::Sigma) ? sigma_mono(P, i, e)
                                                   : delta_mono(P, i, e);
        for (const auto& [ee, cc] : img.terms) pbw_add_term(F, out, ee, F.mul(c, cc));
    }
    return out;
}

std::vector<std::pair<int, PbwElement>> ore_shift(const OrePresentation& P, int i, int k,
                                                  const PbwElement& a) {
    // X_i^k * a  =  sum_j  coeff_j * X_i^j  with coeff_j in H_{(i-1)}.
    std::map<int, PbwElement> cur;
    cur[0] = a;
    const FieldCtx& F = P.field();
    for (int step = 0; step < k; ++step) {
        std::map<int, PbwElement> next;
        for (auto& [j, cj] : cur) {
            if (cj.is_zero()) continue;
            PbwElement s = skew_eval(P, i, SkewKind::Sigma, cj);
            PbwElement d = skew_eval(P, i, SkewKind::Delta, cj);
            if (!s.is_zero()) {
                auto it = next.find(j + 1);
                if (it == next.end())
                    next.emplace(j + 1, std::move(s));
                else
                    it->second = pbw_add(F, it->second, s);
            }
            if (!d.is_zero()) {
                auto it = next.find(j);
                if (it == next.end())
                    next.emplace(j, std::move(d));
                else
                    it->second = pbw_add(F, it->second, d);
            }
        }
        cur = std::move(next);
    }
    std::vector<std::pair<int, PbwElement>> out;
    for (auto& [j, cj] : cur)
        if (!cj.is_zero()) out.emplace_back(j, std::move(cj));
    return out;
}

namespace {

// Normal form of the product of two PBW monomials, accumulated into `out`
// with the given coefficient.
void mono_mul_into(const OrePresentation& P, const ExpVec& e, const ExpVec& f,
                   const Fq& coeff, PbwElement& out) {
    const FieldCtx& F = P.field();
    if (F.is_zero(coeff)) return;
    int i = exp_top_gen(e);
    if (i == 0) {
        check_cap(P, f);
        pbw_add_term(F, out, f, coeff);
        return;
    }
    bool f_low_empty = true;
    for (int j = 1; j < i; ++j)
        if (f[static_cast<size_t>(j - 1)] != 0) {
            f_low_empty = false;
            break;
        }
    if (f_low_empty) {
        ExpVec g = exp_add(e, f);
        check_cap(P, g);
        pbw_add_term(F, out, g, coeff);
        return;
    }
    int32_t ei = e[static_cast<size_t>(i - 1)];
    if (ei < 0)
        throw Error("mul: negative power must not cross lower generators");
    ExpVec e_low = e;
    e_low[static_cast<size_t>(i - 1)] = 0;
    ExpVec f_low = exp_zero(P.n());
    for (int j = 1; j < i; ++j) f_low[static_cast<size_t>(j - 1)] = f[static_cast<size_t>(j - 1)];
    ExpVec f_rest = f;  // X_i^{f_i} and above
    for (int j = 1; j < i; ++j) f_rest[static_cast<size_t>(j - 1)] = 0;

    auto parts = ore_shift(P, i, ei, pbw_mono(F, f_low, F.one()));
    PbwElement prefix = pbw_mono(F, e_low, coeff);
    for (auto& [j, cj] : parts) {
        PbwElement head = mul(P, prefix, cj);
        for (const auto& [g, d] : head.terms) {
            ExpVec full = exp_add(g, f_rest);
            full[static_cast<size_t>(i - 1)] += j;
            check_cap(P, full);
            pbw_add_term(F, out, full, d);
        }
    }
}

}  // namespace

PbwElement mul(const OrePresentation& P, const PbwElement& a, const PbwElement& b) {
    const FieldCtx& F = P.field();
    PbwElement out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) mono_mul_into(P, ea, eb, F.mul(ca, cb), out);
    return out;
}

PbwElement mul(const OrePresentation& P, const PbwElement& a, const PbwElement& b,
               const PbwElement& c) {
    return mul(P, mul(P, a, b), c);
}

PbwElement power(const OrePresentation& P, const PbwElement& a, long long k) {
    if (k < 0) throw Error("power: negative exponent");
    PbwElement r = pbw_one(P.field(), P.n());
    PbwElement base = a;
    while (k > 0) {
        if (k & 1) r = mul(P, r, base);
        if (k >>= 1) base = mul(P, base, base);
    }
    return r;
}

PbwElement commutator(const OrePresentation& P, const PbwElement& a, const PbwElement& b) {
    return pbw_sub(P.field(), mul(P, a, b), mul(P, b, a));
}

PbwElement pth_power(const OrePresentation& P, const PbwElement& a) {
    return power(P, a, P.field().p());
}

JacobsonReport jacobson_binomial(const OrePresentation& P, const PbwElement& a,
                                 const PbwElement& b) {
    const FieldCtx& F = P.field();
    const int p = F.p();
    JacobsonReport rep;
    rep.hypothesis_ok = true;
    PbwElement ad = a;
    for (int i = 1; i <= p - 1; ++i) {
        ad = commutator(P, b, ad);
        if (!commutator(P, ad, a).is_zero()) rep.hypothesis_ok = false;
    }
    rep.lhs = pth_power(P, pbw_add(F, a, b));
    rep.rhs = pbw_add(F, pbw_add(F, pth_power(P, a), pth_power(P, b)), ad);
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

PbwElement relation_defect(const OrePresentation& P, int i, int j) {
    const FieldCtx& F = P.field();
    PbwElement xi = pbw_gen(F, P.n(), i), xj = pbw_gen(F, P.n(), j);
    PbwElement rhs = pbw_add(F, mul(P, skew_eval(P, i, SkewKind::Sigma, xj), xi),
                             skew_eval(P, i, SkewKind::Delta, xj));
    return pbw_sub(F, mul(P, xi, xj), rhs);
}

}  // namespace ihoe
