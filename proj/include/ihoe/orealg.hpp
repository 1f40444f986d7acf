#pragma once

#include <optional>

#include "ihoe/pbw.hpp"

namespace ihoe {

enum class SkewKind { Sigma, Delta };

/// Iterated Ore extension H = F[X_1][X_2;s_2,d_2]...[X_n;s_n,d_n], presented
/// by the generator images s_i(X_j), d_i(X_j) for j < i. Validated eagerly:
/// construction fails unless every s_i preserves the relations of H_{(i-1)}
/// and is invertible on the linear layer, and every d_i respects relations
/// under the twisted Leibniz extension.
///
/// Laurent generators carry invertible letters (used for k[X_1^{±1}] bases);
/// their sigma images must be single monomials so inverses stay monomial.
class OrePresentation {
public:
    OrePresentation(FieldCtx field, int n,
                    std::vector<std::vector<PbwElement>> sigma_images,
                    std::vector<std::vector<PbwElement>> delta_images,
                    std::vector<uint8_t> laurent = {},
                    long long degree_cap = 0);

    const FieldCtx& field() const { return field_; }
    int n() const { return n_; }
    bool is_laurent(int i) const { return laurent_[static_cast<size_t>(i - 1)] != 0; }
    long long degree_cap() const { return degree_cap_; }
    void set_degree_cap(long long cap) { degree_cap_ = cap; }
    bool sigma_check_inconclusive() const { return sigma_inconclusive_; }
    bool sigma_is_identity(int i) const { return sigma_id_[static_cast<size_t>(i - 1)] != 0; }

    // Generator images, i in 2..n, j in 1..i-1.
    const PbwElement& sigma_image(int i, int j) const;
    const PbwElement& delta_image(int i, int j) const;

private:
    FieldCtx field_;
    int n_;
    std::vector<std::vector<PbwElement>> sigma_images_;
    std::vector<std::vector<PbwElement>> delta_images_;
    std::vector<uint8_t> laurent_;
    std::vector<uint8_t> sigma_id_;
    long long degree_cap_;
    bool sigma_inconclusive_ = false;

    friend void validate_presentation(OrePresentation& P);
};

/// Commutative polynomial presentation on n generators (all sigma = Id,
/// delta = 0); the 1-generator case is the coalgebra k[X_1].
OrePresentation polynomial_presentation(const FieldCtx& F, int n, long long degree_cap = 0);

/// sigma_i or delta_i applied to an element of H_{(i-1)}; errors when a
/// uses generator >= i.
PbwElement skew_eval(const OrePresentation& P, int i, SkewKind kind, const PbwElement& a);

/// Exact PBW normal form of the product.
PbwElement mul(const OrePresentation& P, const PbwElement& a, const PbwElement& b);
PbwElement mul(const OrePresentation& P, const PbwElement& a, const PbwElement& b,
               const PbwElement& c);
PbwElement power(const OrePresentation& P, const PbwElement& a, long long k);
PbwElement commutator(const OrePresentation& P, const PbwElement& a, const PbwElement& b);
PbwElement pth_power(const OrePresentation& P, const PbwElement& a);

/// Normal form of X_i * m for a monomial m over generators < i, expressed as
/// a map X_i-power -> coefficient in H_{(i-1)}. Exposed for the engine tests.
std::vector<std::pair<int, PbwElement>> ore_shift(const OrePresentation& P, int i,
                                                  int k, const PbwElement& a);

struct JacobsonReport {
    PbwElement lhs;           // (a+b)^p
    PbwElement rhs;           // a^p + b^p + ad_b^{p-1}(a)
    bool hypothesis_ok = false;  // ad_b^i(a) commutes with a, i = 1..p-1
    bool holds = false;          // lhs == rhs
};
JacobsonReport jacobson_binomial(const OrePresentation& P, const PbwElement& a,
                                 const PbwElement& b);

/// The defining relation X_i X_j - (sigma_i(X_j) X_i + delta_i(X_j)) as a
/// PBW element computed formally on the left side; zero for consistency.
PbwElement relation_defect(const OrePresentation& P, int i, int j);

}  // namespace ihoe
