#pragma once

#include "ihoe/ihoe2.hpp"

namespace ihoe {

struct CentralityResult {
    bool central = false;
    int witness_gen = 0;     // generator index of a nonzero commutator
    PbwElement witness;      // [h, X_i] when not central
};
/// Commutator test against every generator.
CentralityResult is_central(const OrePresentation& P, const PbwElement& h);

/// z = X_2^p - d_0^{p-1} X_2 as a PBW element.
PbwElement central_z(const Ihoe2Params& par);

struct DeltaZReport {
    bool equal = false;             // Delta(z) == z⊗1 + 1⊗z + w^p - d0^{p-1}w + ad_b^{p-1}(w)
    bool tail_in_kx1 = false;       // full tail lies in k[X_1]⊗k[X_1]
    TensorElement tail;             // -d0^{p-1} w + ad_b^{p-1}(w)
    TensorElement delta_z;          // coproduct route
    TensorElement assembled;        // tensoralg route
};
DeltaZReport delta_z_check(const Ihoe2Params& par);

enum class CenterVerdict { PolyX1pZ, PolyX1pZp };

struct HopfCenterReport {
    CenterVerdict verdict = CenterVerdict::PolyX1pZp;
    TensorElement tail;       // -d0^{p-1} w + ad_b^{p-1}(w)
    bool membership = false;  // tail in k[X_1^p]⊗k[X_1^p]
};
/// Decides C(H) for noncommutative H(d,b,c); the structural membership
/// criterion and the b_0 = 0 parameter criterion must agree (hard failure
/// otherwise). Commutative input is an error.
HopfCenterReport hopf_center(const Ihoe2Params& par);

/// b = X_2⊗1 + 1⊗X_2.
TensorElement tensor_b(const FieldCtx& F, int n = 2);

}  // namespace ihoe
