#include "ihoe/filtration.hpp"

#include <functional>
#include <random>

namespace ihoe {

namespace {

long long wdeg_partial(const std::vector<int>& degrees, const ExpVec& e) {
    long long d = 0;
    for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] < 0) throw Error("weighted degree: negative exponent");
        d += static_cast<long long>(e[j]) * degrees[j];
    }
    return d;
}

}  // namespace

DegreeAssignment assign_degrees(const OrePresentation& P, const HopfStructure& HS) {
    const FieldCtx& F = P.field();
    const int n = P.n();
    DegreeAssignment A;
    A.degrees.assign(static_cast<size_t>(n), 1);
    A.tail_caps.assign(static_cast<size_t>(n), 0);
    for (int i = 2; i <= n; ++i) {
        std::vector<PbwElement> arow, crow;
        for (int j = 1; j < i; ++j) {
            PbwElement aji =
                pbw_sub(F, P.sigma_image(i, j), pbw_gen(F, n, j));
            if (!pbw_below(aji, j))
                throw Error("assign_degrees: sigma_" + std::to_string(i) +
                            " is not of winding shape on X_" + std::to_string(j));
            arow.push_back(std::move(aji));
            crow.push_back(P.delta_image(i, j));
        }
        // D(w_i): max degree of the stored left tensor components.
        long long D = 0;
        for (const auto& [k, c] : HS.tail(i).terms)
            D = std::max(D, wdeg_partial(A.degrees, k[0]));
        A.tail_caps[static_cast<size_t>(i - 1)] = D;
        long long di = std::max<long long>(D + 1, 1);
        for (const PbwElement& c : crow)
            for (const auto& [e, v] : c.terms)
                di = std::max(di, wdeg_partial(A.degrees, e));
        A.degrees[static_cast<size_t>(i - 1)] = static_cast<int>(di);
        A.a_ji.push_back(std::move(arow));
        A.c_ji.push_back(std::move(crow));
    }
    return A;
}

long long weighted_deg(const DegreeAssignment& A, const PbwElement& h) {
    if (h.is_zero()) return -1;
    long long d = 0;
    for (const auto& [e, c] : h.terms) d = std::max(d, wdeg_partial(A.degrees, e));
    return d;
}

GradedReport graded_commutative_report(const OrePresentation& P, const HopfStructure& HS,
                                       const DegreeAssignment& A, int samples,
                                       uint64_t seed, int dim_cap) {
    const FieldCtx& F = P.field();
    const int n = P.n();
    GradedReport rep;

    rep.commutation_ok = true;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            PbwElement comm = commutator(P, pbw_gen(F, n, i), pbw_gen(F, n, j));
            long long d = weighted_deg(A, comm);
            rep.commutator_degrees.push_back(d);
            if (d >= A.degrees[static_cast<size_t>(i - 1)] +
                         A.degrees[static_cast<size_t>(j - 1)])
                rep.commutation_ok = false;
        }

    std::mt19937_64 rng(seed);
    rep.submult_ok = true;
    for (int t = 0; t < samples; ++t) {
        auto rand_elt = [&] {
            PbwElement h;
            std::uniform_int_distribution<int> nits(1, 3);
            int k = nits(rng);
            for (int s = 0; s < k; ++s) {
                ExpVec e = exp_zero(n);
                for (int j = 0; j < n; ++j) {
                    std::uniform_int_distribution<int> de(0, 2);
                    e[static_cast<size_t>(j)] = de(rng);
                }
                std::uniform_int_distribution<uint64_t> dc(0, F.size() - 1);
                pbw_add_term(F, h, e, F.elt(dc(rng)));
            }
            return h;
        };
        PbwElement a = rand_elt(), b = rand_elt();
        if (a.is_zero() || b.is_zero()) continue;
        PbwElement ab = mul(P, a, b);
        if (ab.is_zero()) continue;
        if (weighted_deg(A, ab) > weighted_deg(A, a) + weighted_deg(A, b))
            rep.submult_ok = false;
    }

    // Graded dimensions: enumerate PBW monomials of each weighted degree and
    // compare with the coefficients of prod_i 1/(1 - t^{d_i}).
    rep.graded_dims_ok = true;
    {
        std::vector<long long> count(static_cast<size_t>(dim_cap) + 1, 0);
        std::function<void(int, long long)> walk = [&](int gen, long long deg) {
            if (gen > n) {
                ++count[static_cast<size_t>(deg)];
                return;
            }
            int dgen = A.degrees[static_cast<size_t>(gen - 1)];
            for (long long k = 0; deg + k * dgen <= dim_cap; ++k) walk(gen + 1, deg + k * dgen);
        };
        walk(1, 0);
        std::vector<long long> series(static_cast<size_t>(dim_cap) + 1, 0);
        series[0] = 1;
        for (int i = 1; i <= n; ++i) {
            int d = A.degrees[static_cast<size_t>(i - 1)];
            for (int k = d; k <= dim_cap; ++k) series[static_cast<size_t>(k)] += series[static_cast<size_t>(k - d)];
        }
        if (count != series) rep.graded_dims_ok = false;
    }
    rep.pass = rep.commutation_ok && rep.submult_ok && rep.graded_dims_ok;
    return rep;
}

}  // namespace ihoe
