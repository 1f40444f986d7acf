#pragma once

#include <cstdint>

#include "ihoe/tensoralg.hpp"

namespace ihoe {

enum class GenKind { Primitive, Grouplike };

/// Evaluate an algebra map X_i -> images[i-1] on a PBW element; negative
/// exponents require monomial images on Laurent generators.
PbwElement hom_eval(const OrePresentation& P, const std::vector<PbwElement>& images,
                    const PbwElement& h);
PbwElement pbw_invert_monomial(const OrePresentation& P, const PbwElement& a);

/// Hopf structure on an Ore presentation. Generator i is either primitive
/// with tail, Delta(X_i) = g_i⊗X_i + X_i⊗1 + w_i for a grouplike monomial
/// g_i (g_i = 1 for every IHOE generator) and a tail w_i over generators
/// < i, or grouplike, Delta(X_i) = X_i⊗X_i (Laurent generators only).
/// Antipode images are computed at construction from
/// S(X_i) = -g_i^{-1}(X_i + m(Id⊗S)(w_i)).
class HopfStructure {
public:
    HopfStructure(OrePresentation base, std::vector<GenKind> kinds,
                  std::vector<ExpVec> group_parts, std::vector<TensorElement> tails);

    const OrePresentation& base() const { return base_; }
    const FieldCtx& field() const { return base_.field(); }
    int n() const { return base_.n(); }
    GenKind kind(int i) const { return kinds_[static_cast<size_t>(i - 1)]; }
    const ExpVec& group_part(int i) const { return group_parts_[static_cast<size_t>(i - 1)]; }
    const TensorElement& tail(int i) const { return tails_[static_cast<size_t>(i - 1)]; }
    const PbwElement& antipode_image(int i) const {
        return antipode_images_[static_cast<size_t>(i - 1)];
    }
    /// m(Id⊗S)(w_i) == m(S⊗Id)(w_i) for every generator (recorded, not thrown).
    bool antipode_contractions_agree() const { return contractions_agree_; }

    TensorElement coproduct_gen(int i) const;

private:
    OrePresentation base_;
    std::vector<GenKind> kinds_;
    std::vector<ExpVec> group_parts_;
    std::vector<TensorElement> tails_;
    std::vector<PbwElement> antipode_images_;
    bool contractions_agree_ = true;
};

/// Coproduct extended as an algebra map over PBW monomials; powers of the
/// generator coproducts are memoized per call batch via CoprodCache.
struct CoprodCache {
    std::map<std::pair<int, long long>, TensorElement> pow;
};
TensorElement coproduct(const HopfStructure& HS, const PbwElement& h,
                        CoprodCache* cache = nullptr);
Fq counit(const HopfStructure& HS, const PbwElement& h);
PbwElement antipode(const HopfStructure& HS, const PbwElement& h);

/// Delta⊗Id (comp = 0) or Id⊗Delta (comp = 1) on an arity-2 element.
TensorElement apply_delta_component(const HopfStructure& HS, const TensorElement& t,
                                    int comp, CoprodCache* cache = nullptr);
/// (eps⊗Id) (comp = 0) or (Id⊗eps) (comp = 1) contraction.
PbwElement apply_counit_component(const HopfStructure& HS, const TensorElement& t, int comp);
/// m(S⊗Id) (comp = 0) or m(Id⊗S) (comp = 1) contraction.
PbwElement antipode_contraction(const HopfStructure& HS, const TensorElement& t, int comp);

struct AxiomCheck {
    std::string axiom;
    bool pass = false;
    std::string witness;  // empty when passing
};
struct HopfReport {
    std::vector<AxiomCheck> checks;
    bool all_pass = true;
};
/// Axioms: (a) Delta multiplicative on defining relations, (b) coassociativity
/// on generators, (c) counit on generators, (d) antipode on generators and on
/// n_samples random monomials of total degree <= degree_cap.
HopfReport verify_hopf(const HopfStructure& HS, int degree_cap, int n_samples,
                       uint64_t seed = 0);

/// Exact basis of {f : Delta(f) = f⊗1 + 1⊗f} within the span of nonconstant
/// PBW monomials of total degree <= N.
std::vector<PbwElement> primitives_up_to(const HopfStructure& HS, int N);

struct Character {
    std::vector<Fq> values;  // chi(X_i)
};
bool character_valid(const HopfStructure& HS, const Character& chi);
Fq character_eval(const HopfStructure& HS, const Character& chi, const PbwElement& h);

enum class WindingSide { Left, Right };
struct WindingResult {
    std::vector<PbwElement> images;  // Xi applied to the generators
    int order = 0;                   // least k <= cap with Xi^k = Id, or 0
    bool within_cap = false;
};
WindingResult winding(const HopfStructure& HS, const Character& chi, WindingSide side,
                      int order_cap);

}  // namespace ihoe
