#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ihoe/gf.hpp"

using namespace ihoe;

namespace {

// Independent irreducibility oracle: f has no root-free factorization over
// F_p iff no monic g of degree 1..deg/2 divides it; done by full scan of
// products g*h instead of trial division.
bool irreducible_by_product_scan(const std::vector<int>& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    auto poly_of = [&](uint64_t v, int deg) {
        std::vector<int> g(static_cast<size_t>(deg) + 1, 0);
        for (int i = 0; i < deg; ++i) {
            g[static_cast<size_t>(i)] = static_cast<int>(v % p);
            v /= static_cast<uint64_t>(p);
        }
        g[static_cast<size_t>(deg)] = 1;
        return g;
    };
    for (int da = 1; da < m; ++da) {
        int db = m - da;
        uint64_t ca = 1, cb = 1;
        for (int i = 0; i < da; ++i) ca *= static_cast<uint64_t>(p);
        for (int i = 0; i < db; ++i) cb *= static_cast<uint64_t>(p);
        for (uint64_t a = 0; a < ca; ++a)
            for (uint64_t b = 0; b < cb; ++b) {
                auto ga = poly_of(a, da), gb = poly_of(b, db);
                std::vector<int> prod(f.size(), 0);
                for (size_t i = 0; i < ga.size(); ++i)
                    for (size_t j = 0; j < gb.size(); ++j)
                        prod[i + j] = (prod[i + j] + ga[i] * gb[j]) % p;
                if (prod == f) return false;
            }
    }
    return true;
}

}  // namespace

TEST_CASE("deterministic moduli") {
    CHECK(FieldCtx(2, 1).modulus() == std::vector<int>{0, 1});
    CHECK(FieldCtx(5, 1).modulus() == std::vector<int>{0, 1});
    // Oracle: index-least irreducible over F_3 of degree 2 is x^2 + 1.
    FieldCtx F9(3, 2);
    CHECK(F9.modulus() == std::vector<int>{1, 0, 1});
    CHECK(irreducible_by_product_scan(F9.modulus(), 3));
    // And every earlier candidate is reducible.
    for (uint64_t v = 0; v < 1; ++v) {
        std::vector<int> f{static_cast<int>(v % 3), static_cast<int>(v / 3), 1};
        CHECK_FALSE(irreducible_by_product_scan(f, 3));
    }
    CHECK(FieldCtx(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(irreducible_by_product_scan(FieldCtx(2, 6).modulus(), 2));
    CHECK(irreducible_by_product_scan(FieldCtx(5, 3).modulus(), 5));
}

TEST_CASE("rejects non-prime p") {
    CHECK_THROWS_AS(FieldCtx(4, 1), Error);
    CHECK_THROWS_AS(FieldCtx(1, 1), Error);
}

TEST_CASE("field axioms on random samples") {
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 6}}) {
        FieldCtx F(p, m);
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
        for (int t = 0; t < 200; ++t) {
            Fq a = F.elt(dist(rng)), b = F.elt(dist(rng)), c = F.elt(dist(rng));
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("frobenius is additive") {
    for (auto [p, m] : {std::pair{3, 2}, {5, 2}, {2, 4}}) {
        FieldCtx F(p, m);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
        for (int t = 0; t < 100; ++t) {
            Fq x = F.elt(dist(rng)), y = F.elt(dist(rng));
            CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
        }
    }
}

TEST_CASE("pth_root inverts frobenius, exhaustive for |field| <= 625") {
    for (auto [p, m] : {std::pair{2, 1}, {2, 4}, {3, 2}, {5, 2}, {3, 4}}) {
        FieldCtx F(p, m);
        for (uint64_t v = 0; v < F.size(); ++v) {
            Fq x = F.elt(v);
            CHECK(F.pow(F.pth_root(x), p) == x);
        }
    }
    // F_9, x = g (the modulus root): root is g^3 since (g^3)^3 = g^9 = g.
    FieldCtx F9(3, 2);
    Fq g = F9.from_coords({0, 1});
    CHECK(F9.pth_root(g) == F9.pow(g, 3));
    CHECK(F9.pow(F9.pow(g, 3), 3) == g);
    CHECK(F9.pth_root(F9.one()) == F9.one());
    CHECK(FieldCtx(2, 1).pth_root(Fq{}) == Fq{});
}

TEST_CASE("artin-schreier roots") {
    FieldCtx F2(2, 1);
    auto r = F2.artin_schreier_roots(F2.zero());
    CHECK(r.roots.size() == 2);  // y^2 - y = 0 on F_2
    CHECK(r.ext_multiplier == 1);

    FieldCtx F5(5, 1);
    auto r5 = F5.artin_schreier_roots(F5.zero());
    CHECK(r5.roots.size() == 5);  // all of the prime field

    FieldCtx F3(3, 1);
    auto r3 = F3.artin_schreier_roots(F3.one());
    CHECK(r3.roots.empty());
    CHECK(r3.ext_multiplier == 3);  // splits over F_27
    // Cross-check by scanning F_27 through the embedding.
    FieldCtx F27(3, 3);
    FieldEmbedding emb(F3, F27);
    auto r27 = F27.artin_schreier_roots(emb.map(F3.one()));
    CHECK(r27.roots.size() == 3);
}

TEST_CASE("artin-schreier root sets are F_p-cosets") {
    for (auto [p, m] : {std::pair{2, 2}, {3, 2}, {5, 2}}) {
        FieldCtx F(p, m);
        for (uint64_t v = 0; v < F.size(); ++v) {
            auto r = F.artin_schreier_roots(F.elt(v));
            if (r.roots.empty()) continue;
            CHECK(r.roots.size() == static_cast<size_t>(p));
            for (int k = 0; k < p; ++k) {
                Fq shifted = F.add(r.roots[0], F.from_int(k));
                CHECK(std::find(r.roots.begin(), r.roots.end(), shifted) != r.roots.end());
            }
        }
    }
}

TEST_CASE("embedding is a field homomorphism") {
    FieldCtx F9(3, 2), F729(3, 6);
    FieldEmbedding emb(F9, F729);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<uint64_t> dist(0, F9.size() - 1);
    for (int t = 0; t < 100; ++t) {
        Fq a = F9.elt(dist(rng)), b = F9.elt(dist(rng));
        CHECK(emb.map(F9.add(a, b)) == F729.add(emb.map(a), emb.map(b)));
        CHECK(emb.map(F9.mul(a, b)) == F729.mul(emb.map(a), emb.map(b)));
    }
    CHECK(emb.map(F9.one()) == F729.one());
    // Injective on a full scan.
    std::set<Fq> images;
    for (uint64_t v = 0; v < F9.size(); ++v) images.insert(emb.map(F9.elt(v)));
    CHECK(images.size() == F9.size());
}

TEST_CASE("trace to prime field") {
    FieldCtx F4(2, 2);
    int zero_traces = 0;
    for (uint64_t v = 0; v < F4.size(); ++v)
        if (F4.is_zero(F4.trace_to_prime(F4.elt(v)))) ++zero_traces;
    CHECK(zero_traces == 2);  // kernel of the trace has size q/p
}
