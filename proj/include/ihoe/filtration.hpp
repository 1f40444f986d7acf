#pragma once

#include "ihoe/hopf.hpp"

namespace ihoe {

/// Degree assignment of the inductive procedure: d_1 = 1, then
/// d_i = max(D(w_i) + 1, max_j deg(c_ji), 1) with relation data
/// a_ji = sigma_i(X_j) - X_j and c_ji = delta_i(X_j).
struct DegreeAssignment {
    std::vector<int> degrees;               // d_1..d_n
    std::vector<long long> tail_caps;       // D(w_i) per generator
    std::vector<std::vector<PbwElement>> a_ji;  // [i-2][j-1]
    std::vector<std::vector<PbwElement>> c_ji;  // [i-2][j-1]
};

/// Throws when some sigma_i is not of winding shape (a_ji must lie in
/// H_{(j-1)}), as for the Laurent family.
DegreeAssignment assign_degrees(const OrePresentation& P, const HopfStructure& HS);

/// Weighted degree max over the PBW support; -1 for the zero element.
long long weighted_deg(const DegreeAssignment& A, const PbwElement& h);

struct GradedReport {
    bool commutation_ok = false;   // deg(x_i x_j - x_j x_i) < d_i + d_j for all i > j
    bool submult_ok = false;       // deg(ab) <= deg(a) + deg(b) on samples
    bool graded_dims_ok = false;   // monomial counts per degree match the
                                   // weighted-partition generating function
    bool pass = false;
    std::vector<long long> commutator_degrees;  // per pair, scan order (i, j)
};
GradedReport graded_commutative_report(const OrePresentation& P, const HopfStructure& HS,
                                       const DegreeAssignment& A, int samples,
                                       uint64_t seed, int dim_cap = 12);

}  // namespace ihoe
