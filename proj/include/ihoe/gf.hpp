#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ihoe {

// Maximum extension degree supported (desk scale: fields up to 5^6).
inline constexpr int kMaxExt = 8;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of F_{p^m}: coordinate vector over F_p in the power basis of the
/// modulus root, little-endian, entries reduced mod p, padded with zeros.
struct Fq {
    std::array<uint8_t, kMaxExt> c{};
    friend auto operator<=>(const Fq&, const Fq&) = default;
};

/// Context for F_{p^m} with the deterministic (index-least) monic irreducible
/// modulus of degree m over F_p. Immutable after construction.
class FieldCtx {
public:
    FieldCtx(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    uint64_t size() const { return q_; }
    // Length m+1, monic; modulus()[k] is the coefficient of x^k.
    const std::vector<int>& modulus() const { return modulus_; }

    Fq zero() const { return Fq{}; }
    Fq one() const { return from_int(1); }
    Fq from_int(long long v) const;
    Fq from_coords(const std::vector<int>& coords) const;

    // Enumeration: index = c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
    Fq elt(uint64_t index) const;
    uint64_t index(const Fq& x) const;

    bool is_zero(const Fq& x) const { return x == Fq{}; }
    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && m_ == other.m_;
    }

    Fq add(const Fq& a, const Fq& b) const;
    Fq sub(const Fq& a, const Fq& b) const;
    Fq neg(const Fq& a) const;
    Fq mul(const Fq& a, const Fq& b) const;
    Fq inv(const Fq& a) const;
    Fq div(const Fq& a, const Fq& b) const { return mul(a, inv(b)); }
    Fq pow(const Fq& a, long long e) const;

    Fq frobenius(const Fq& a) const { return pow(a, p_); }
    // Unique y with y^p = x, computed as x^{p^{m-1}}.
    Fq pth_root(const Fq& x) const;
    // Trace to the prime field, returned as an element with coords (t,0,..).
    Fq trace_to_prime(const Fq& x) const;

    struct ArtinSchreierRoots {
        std::vector<Fq> roots;  // all y in F_{p^m} with y^p - y = c, index order
        // 1 when roots is nonempty, else the minimal k with roots in F_{p^{mk}}.
        int ext_multiplier = 1;
    };
    ArtinSchreierRoots artin_schreier_roots(const Fq& c) const;

    std::string to_string(const Fq& x) const;

private:
    int p_ = 0;
    int m_ = 0;
    uint64_t q_ = 0;
    std::vector<int> modulus_;
};

/// Embedding F_{p^m} -> F_{p^M} for m | M, sending the modulus root of the
/// source to its index-least root in the destination.
class FieldEmbedding {
public:
    FieldEmbedding(const FieldCtx& src, const FieldCtx& dst);
    Fq map(const Fq& x) const;
    const FieldCtx& src() const { return src_; }
    const FieldCtx& dst() const { return dst_; }

private:
    FieldCtx src_;
    FieldCtx dst_;
    std::vector<Fq> root_powers_;  // rho^0 .. rho^{m-1} in dst
};

bool is_prime(long long n);
/// binom(n, k) mod p by Lucas' theorem.
int binom_mod_p(long long n, long long k, int p);

}  // namespace ihoe
