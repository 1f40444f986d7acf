// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit code is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <random>

#include "fixtures.hpp"
#include "ihoe/filtration.hpp"
#include "ihoe/findim.hpp"
#include "ihoe/primcoh.hpp"

using namespace ihoe;
using namespace ihoe::testfix;

namespace {

struct Criterion {
    int id;
    const char* what;
    bool (*fn)(std::string&);
};

// 1. Hopf-axiom suite: p in {2,3,5}, >= 50 random parameter sets each with
// support indices <= 2; all four axioms pass.
bool crit1(std::string& note) {
    std::mt19937_64 rng(1);
    int total = 0;
    for (int p : {2, 3, 5}) {
        FieldCtx F(p, 1);
        for (int t = 0; t < 50; ++t) {
            Ihoe2Params par = random_params(rng, F, 2);
            HopfReport rep = verify_hopf(build_h(par), p + 2, 6, rng());
            if (!rep.all_pass) {
                note = "axiom failure at p = " + std::to_string(p);
                return false;
            }
            ++total;
        }
    }
    note = std::to_string(total) + " parameter sets, 4 axioms each";
    return true;
}

// 2. Center identities: z central, Delta(z) matches the assembled right side
// exactly, and tail membership agrees with the b_0 = 0 criterion.
bool crit2(std::string& note) {
    std::mt19937_64 rng(2);
    int total = 0, noncomm = 0;
    for (int p : {2, 3, 5}) {
        FieldCtx F(p, 1);
        for (int t = 0; t < 50; ++t) {
            Ihoe2Params par = random_params(rng, F, 2);
            HopfStructure HS = build_h(par);
            if (!is_central(HS.base(), central_z(par)).central) {
                note = "z not central at p = " + std::to_string(p);
                return false;
            }
            DeltaZReport dz = delta_z_check(par);
            if (!dz.equal || !dz.tail_in_kx1) {
                note = "Delta(z) mismatch at p = " + std::to_string(p);
                return false;
            }
            if (!par.commutative()) {
                ++noncomm;
                try {
                    HopfCenterReport hc = hopf_center(par);
                    bool member_expected = F.is_zero(par.b0());
                    if (hc.membership != member_expected) {
                        note = "criterion disagreement";
                        return false;
                    }
                } catch (const Error&) {
                    note = "hopf_center hard failure";
                    return false;
                }
            }
            ++total;
        }
    }
    note = std::to_string(total) + " parameter sets (" + std::to_string(noncomm) +
           " noncommutative), zero disagreements";
    return true;
}

// 3. Fiber classification sweeps with certificates, and the maximal simple
// dimension is exactly p.
bool crit3(std::string& note) {
    int fibers = 0;
    for (int p : {2, 3}) {
        FieldCtx F(p, 1);
        std::vector<Ihoe2Params> fixtures = {
            mk_params(p, 1, {{0, 1}}), mk_params(p, 1, {{1, 1}}),
            mk_params(p, 1, {{0, 1}, {1, 1}})};
        std::vector<FieldCtx> sweeps{F};
        if (p == 3) sweeps.push_back(FieldCtx(3, 2));
        for (const FieldCtx& K : sweeps) {
            for (const Ihoe2Params& base : fixtures) {
                Ihoe2Params par = K.m() == 1 ? base : embed_params(base, K);
                int max_simple = 0;
                for (uint64_t ia = 0; ia < K.size(); ++ia)
                    for (uint64_t ib = 0; ib < K.size(); ++ib) {
                        Fq alpha = K.elt(ia), beta = K.elt(ib);
                        FiberClassification C = classify_fiber(par, alpha, beta);
                        if (!C.witnesses_ok) {
                            note = "witness failure, p = " + std::to_string(p);
                            return false;
                        }
                        bool azu_expected =
                            !K.is_zero(azumaya_criterion(par, alpha));
                        if (azu_expected != (C.kind == FiberKind::Azumaya)) {
                            note = "Azumaya criterion mismatch";
                            return false;
                        }
                        if (C.kind == FiberKind::Azumaya && C.span_rank != p * p) {
                            note = "span rank below p^2";
                            return false;
                        }
                        if (C.kind == FiberKind::BlockOfP &&
                            C.characters.size() != static_cast<size_t>(p)) {
                            note = "character count != p";
                            return false;
                        }
                        if (C.kind == FiberKind::LocalNilpotent &&
                            C.characters.size() != 1) {
                            note = "local case must have a unique simple";
                            return false;
                        }
                        FinDimAlgebra A = quotient_fiber(par, alpha, beta);
                        if (A.dim != p * p) {
                            note = "fiber dimension != p^2";
                            return false;
                        }
                        SimpleCensus census = simple_census(A, C);
                        for (int d : census.dims) max_simple = std::max(max_simple, d);
                        ++fibers;
                    }
                if (max_simple != p) {
                    note = "max simple dimension != p";
                    return false;
                }
            }
        }
    }
    note = std::to_string(fibers) + " fibers classified with exact witnesses";
    return true;
}

// 4. Non-Azumaya locus root counts r = 1, 1, 2 for the p = 2 fixtures.
bool crit4(std::string& note) {
    FieldCtx F(2, 1);
    struct Case {
        Ihoe2Params par;
        int want;
    };
    std::vector<Case> cases = {{mk_params(2, 1, {{0, 1}}), 1},
                               {mk_params(2, 1, {{1, 1}}), 1},
                               {mk_params(2, 1, {{0, 1}, {1, 1}}), 2}};
    for (const auto& c : cases) {
        LocusReport rep = nonazumaya_locus(c.par, F);
        if (rep.r_closure != c.want) {
            note = "r mismatch";
            return false;
        }
    }
    note = "r = 1, 1, 2 as required";
    return true;
}

// 5. Restricted quotients: dimensions and presentations for the four cases,
// p in {2,3}, including the coproduct tails and the change of variables.
bool crit5(std::string& note) {
    int cases = 0;
    for (int p : {2, 3}) {
        std::vector<Ihoe2Params> fixtures = {
            mk_params(p, 1, {{1, 1}}),                    // 8.9(2)
            mk_params(p, 1, {{0, 1}}),                    // 8.9(3)
            mk_params(p, 1, {{1, 1}}, {{0, 1}}),          // 8.10(2)
            mk_params(p, 1, {{0, 1}}, {{0, 1}}),          // 8.10(3)
            mk_params(p, 1, {{0, 1}, {1, 1}}, {{0, 1}}),  // 8.10(3) again
        };
        for (const Ihoe2Params& par : fixtures) {
            RestrictedReport rep = restricted_quotient(par);
            int expect = par.field.is_zero(par.b0()) ? p * p : p * p * p;
            if (rep.alg.dim != expect || !rep.dim_ok) {
                note = "dimension mismatch in case " + rep.case_name;
                return false;
            }
            if (!rep.ideal_coproduct_ok || !rep.presentation_ok ||
                !rep.change_of_vars_ok) {
                note = "presentation mismatch in case " + rep.case_name;
                return false;
            }
            ++cases;
        }
    }
    note = std::to_string(cases) + " restricted quotients match";
    return true;
}

// 6. Primitive cohomology tables and basis classes.
bool crit6(std::string& note) {
    if (pp_dims(2, 1, 16) != pp_expected(2, 1, 16) ||
        pp_dims(2, 2, 16) != pp_expected(2, 2, 16)) {
        note = "p = 2 table mismatch";
        return false;
    }
    if (pp_dims(3, 1, 12) != pp_expected(3, 1, 12) ||
        pp_dims(3, 2, 12) != pp_expected(3, 2, 12)) {
        note = "p = 3 table mismatch";
        return false;
    }
    if (!verify_classes(2, 16).all_pass || !verify_classes(3, 12).all_pass) {
        note = "class check failure";
        return false;
    }
    note = "tables up to 16 (p=2) and 12 (p=3); all classes verified";
    return true;
}

// 7. Filtration: degree assignment and graded reports pass for sampled
// H(d,b,c), the Heisenberg fixture and the sl2 tower fixture.
bool crit7(std::string& note) {
    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5}) {
        FieldCtx F(p, 1);
        for (int t = 0; t < 10; ++t) {
            Ihoe2Params par = random_params(rng, F, 1);
            HopfStructure HS = build_h(par);
            DegreeAssignment A = assign_degrees(HS.base(), HS);
            if (!graded_commutative_report(HS.base(), HS, A, 20, rng()).pass) {
                note = "H(d,b,c) sample failed";
                return false;
            }
        }
        HopfStructure Hh = hopf_primitive(pres_heisenberg(F));
        DegreeAssignment Ah = assign_degrees(Hh.base(), Hh);
        if (Ah.degrees != std::vector<int>{1, 1, 1} ||
            !graded_commutative_report(Hh.base(), Hh, Ah, 20, rng()).pass) {
            note = "Heisenberg fixture failed";
            return false;
        }
        HopfStructure Hs = hopf_primitive(pres_sl2(F));
        DegreeAssignment As = assign_degrees(Hs.base(), Hs);
        if (!graded_commutative_report(Hs.base(), Hs, As, 20, rng()).pass) {
            note = "sl2 fixture failed";
            return false;
        }
    }
    note = "30 sampled families plus both fixtures, p in {2,3,5}";
    return true;
}

// 8. Jacobson binomial: lhs = rhs whenever the hypothesis holds, >= 100
// randomized instances in H and >= 100 in the tensor square.
bool crit8(std::string& note) {
    std::mt19937_64 rng(8);
    int in_h = 0, in_hh = 0;
    for (int p : {2, 3, 5}) {
        FieldCtx F(p, 1);
        Ihoe2Params par = random_params(rng, F, 1);
        par.set_d(0, F.one());  // keep it noncommutative
        HopfStructure HS = build_h(par);
        const OrePresentation& P = HS.base();
        for (int t = 0; t < 14; ++t) {
            // k[X_1]-pair (commuting), and the (f(X_1), X_2) family.
            PbwElement f = random_x1_poly(rng, F, 2, p * p);
            PbwElement g = random_x1_poly(rng, F, 2, p * p);
            auto r1 = jacobson_binomial(P, f, g);
            if (r1.hypothesis_ok) {
                if (!r1.holds) {
                    note = "failure on a commuting pair";
                    return false;
                }
                ++in_h;
            }
            auto r2 = jacobson_binomial(P, f, pbw_gen(F, 2, 2));
            if (r2.hypothesis_ok) {
                if (!r2.holds) {
                    note = "failure on (f(X_1), X_2)";
                    return false;
                }
                ++in_h;
            }
        }
        auto rx = jacobson_binomial(P, pbw_gen(F, 2, 1), pbw_gen(F, 2, 2));
        if (!rx.hypothesis_ok || !rx.holds) {
            note = "failure on (X_1, X_2)";
            return false;
        }
        ++in_h;
        // Tensor square: (f⊗g, b) pairs and the (w, b) pair of Lemma 8.6.
        TensorElement b = tensor_b(F);
        for (int t = 0; t < 12; ++t) {
            TensorElement a = t_of(F, random_x1_poly(rng, F, 2, p), random_x1_poly(rng, F, 2, p));
            auto r = jacobson_binomial_tensor(P, a, b);
            if (r.hypothesis_ok) {
                if (!r.holds) {
                    note = "failure on f⊗g vs b";
                    return false;
                }
                ++in_hh;
            }
        }
        for (int t = 0; t < 23; ++t) {
            Ihoe2Params q = random_params(rng, F, 1);
            HopfStructure HQ = build_h(q);
            auto r = jacobson_binomial_tensor(HQ.base(), tail_w(q), tensor_b(F));
            if (r.hypothesis_ok) {
                if (!r.holds) {
                    note = "failure on (w, b)";
                    return false;
                }
                ++in_hh;
            }
        }
    }
    if (in_h < 100 || in_hh < 100) {
        note = "too few hypothesis-satisfying instances: " + std::to_string(in_h) +
               " in H, " + std::to_string(in_hh) + " in H⊗H";
        return false;
    }
    note = std::to_string(in_h) + " instances in H, " + std::to_string(in_hh) +
           " in H⊗H, all identities exact";
    return true;
}

// 9. S^2 = Id, winding orders divide p^2, and check_hopf_map accepts exactly
// the E5.11.2 wedge over exhaustive small-field scans (p = 2, m <= 2).
bool crit9(std::string& note) {
    std::mt19937_64 rng(9);
    for (int p : {2, 3, 5}) {
        FieldCtx F(p, 1);
        for (int t = 0; t < 10; ++t) {
            Ihoe2Params par = random_params(rng, F, 2);
            HopfStructure HS = build_h(par);
            for (int i = 1; i <= 2; ++i)
                if (antipode(HS, HS.antipode_image(i)) != pbw_gen(F, 2, i)) {
                    note = "S^2 != Id";
                    return false;
                }
            // Valid characters: chi(X_1) a root of sum d_s x^{p^s}, chi(X_2) free.
            std::vector<Fq> roots;
            for (uint64_t v = 0; v < F.size(); ++v) {
                Fq x = F.elt(v);
                Fq acc = F.zero();
                for (const auto& [s, ds] : par.d)
                    acc = F.add(acc, F.mul(ds, F.pow(x, ipow(p, s))));
                if (F.is_zero(acc)) roots.push_back(x);
            }
            std::uniform_int_distribution<size_t> dr(0, roots.size() - 1);
            std::uniform_int_distribution<uint64_t> dc(0, F.size() - 1);
            Character chi{std::vector<Fq>{roots[dr(rng)], F.elt(dc(rng))}};
            if (!character_valid(HS, chi)) {
                note = "character validation failed";
                return false;
            }
            for (WindingSide side : {WindingSide::Left, WindingSide::Right}) {
                WindingResult res = winding(HS, chi, side, p * p + 1);
                if (!res.within_cap || (p * p) % res.order != 0) {
                    note = "winding order does not divide p^2";
                    return false;
                }
            }
        }
    }
    // Exhaustive (alpha, beta, e) scan for p = 2, m <= 2.
    int accepted = 0, rejected = 0;
    for (int m : {1, 2}) {
        FieldCtx F(2, m);
        std::vector<Ihoe2Params> shapes;
        {
            Ihoe2Params a(F);
            a.set_d(0, F.one());
            shapes.push_back(a);
            Ihoe2Params b(F);
            b.set_d(0, F.one());
            b.set_b(0, F.elt(F.size() - 1));
            shapes.push_back(b);
            Ihoe2Params c(F);
            c.set_b(0, F.one());
            shapes.push_back(c);
            Ihoe2Params d(F);
            d.set_d(1, F.one());
            d.set_c(0, 1, F.one());
            shapes.push_back(d);
        }
        for (const Ihoe2Params& P : shapes)
            for (uint64_t ia = 1; ia < F.size(); ++ia)
                for (uint64_t ib = 1; ib < F.size(); ++ib)
                    for (uint64_t ie = 0; ie < F.size(); ++ie) {
                        Fq alpha = F.elt(ia), beta = F.elt(ib);
                        std::map<int, Fq> e;
                        if (!F.is_zero(F.elt(ie))) e[0] = F.elt(ie);
                        bool adm = scalars_admissible(P, alpha, beta);
                        bool got = check_hopf_map(P, P, alpha, beta, e);
                        if (got != adm) {
                            note = "check_hopf_map disagrees with E5.11.2";
                            return false;
                        }
                        (adm ? accepted : rejected) += 1;
                    }
    }
    note = "S^2 and winding orders verified; exhaustive automorphism scan " +
           std::to_string(accepted) + " accepted / " + std::to_string(rejected) +
           " rejected, all per E5.11.2";
    return true;
}

// 10. Isomorphism classification: exhaustive parameter sets with support in
// {0,1}; equal canonical forms <=> iso_scalars succeeds, zero inconsistencies.
bool crit10(std::string& note) {
    long long pairs = 0;
    for (int p : {2, 3}) {
        FieldCtx F(p, 1);
        std::vector<Ihoe2Params> all;
        for (uint64_t d0 = 0; d0 < F.size(); ++d0)
            for (uint64_t d1 = 0; d1 < F.size(); ++d1)
                for (uint64_t b0 = 0; b0 < F.size(); ++b0)
                    for (uint64_t b1 = 0; b1 < F.size(); ++b1)
                        for (uint64_t c01 = 0; c01 < F.size(); ++c01) {
                            Ihoe2Params par(F);
                            par.set_d(0, F.elt(d0));
                            par.set_d(1, F.elt(d1));
                            par.set_b(0, F.elt(b0));
                            par.set_b(1, F.elt(b1));
                            par.set_c(0, 1, F.elt(c01));
                            all.push_back(par);
                        }
        std::vector<Ihoe2Params> canons;
        canons.reserve(all.size());
        for (const auto& par : all) canons.push_back(canonical_form(par));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i; j < all.size(); ++j) {
                bool iso = iso_scalars(all[i], all[j]).isomorphic;
                bool same = params_equal(canons[i], canons[j]);
                if (iso != same) {
                    note = "inconsistency between iso_scalars and canonical_form";
                    return false;
                }
                ++pairs;
            }
    }
    note = std::to_string(pairs) + " ordered pairs, zero inconsistencies";
    return true;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "Hopf-axiom suite over random 2-step parameters", crit1},
        {2, "central z and the Delta(z) identity with criterion agreement", crit2},
        {3, "fiber classification sweeps with exact certificates", crit3},
        {4, "non-Azumaya locus root counts", crit4},
        {5, "restricted quotient dimensions and presentations", crit5},
        {6, "primitive cohomology tables and classes", crit6},
        {7, "filtration degrees and graded commutativity", crit7},
        {8, "Jacobson binomial identities in H and H⊗H", crit8},
        {9, "antipode order, winding orders, automorphism scan", crit9},
        {10, "isomorphism orbits versus canonical forms", crit10},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                    c.id, c.what, detail.c_str(), secs);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
