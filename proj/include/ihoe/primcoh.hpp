#pragma once

#include <array>
#include <map>

#include "ihoe/linalg.hpp"

namespace ihoe {

/// Degree-i slice of the tensor-algebra complex of the graded coalgebra
/// C = k[X] over F_p with the binomial coproduct: the differential
/// ∂(x) = -1⊗x + Δ(x) - x⊗1 extended as a graded derivation,
/// ∂(x⊗y) = ∂(x)⊗y - x⊗∂(y). Composite is zero per slice.
struct ComplexSlice {
    int degree = 0;
    FieldCtx field;  // F_p
    // Basis orderings: C_i = {X^i}; (C⊗C)_i = {(a, i-a)} for a = 0..i;
    // (C⊗C⊗C)_i = triples (a,b,c), a+b+c = i, lexicographic.
    std::vector<std::pair<int, int>> basis2;
    std::vector<std::array<int, 3>> basis3;
    Mat d1;  // |basis2| x 1
    Mat d2;  // |basis3| x |basis2|

    explicit ComplexSlice(FieldCtx F) : field(std::move(F)) {}
};
ComplexSlice boundary_slice(int p, int i);

/// dim P^n per degree 1..N (n = 1 or 2), by rank computations.
std::map<int, int> pp_dims(int p, int n, int N);
/// Expected supports of Prop 5.4(3): P^1 at {p^s}, P^2 at {p^{s+1}} and
/// {p^s + p^t, s < t}, computed arithmetically (test oracle lives here so
/// both the CLI and the tests share it).
std::map<int, int> pp_expected(int p, int n, int N);

struct ClassCheck {
    std::string name;   // "Z_0", "Y_0_1", ...
    int degree = 0;
    bool cocycle = false;      // in ker d2
    bool not_coboundary = false;  // not in im d1
    bool spans = false;        // dim P^2 in this degree is 1
};
struct ClassReport {
    std::vector<ClassCheck> checks;
    bool all_pass = true;
};
/// Z_s (degree p^{s+1} <= N) and Y_{s,t} (degree p^s + p^t <= N) are
/// cocycles, not coboundaries, and span their slice of P^2.
ClassReport verify_classes(int p, int N);

/// Coordinates of sum λ_i X^{i p^s} ⊗ X^{(p-i) p^s} in the degree-p^{s+1}
/// slice basis, and of X^{p^s}⊗X^{p^t} - X^{p^t}⊗X^{p^s}.
std::vector<Fq> class_z(const ComplexSlice& S, int p, int s);
std::vector<Fq> class_y(const ComplexSlice& S, int p, int s, int t);

}  // namespace ihoe
