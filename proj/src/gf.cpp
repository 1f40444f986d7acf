#include "ihoe/gf.hpp"

#include <algorithm>

namespace ihoe {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense univariate polynomials over F_p, coefficients in [0,p).
using Poly = std::vector<int>;

int pdeg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// a mod b, b monic.
Poly pmod(Poly a, const Poly& b, int p) {
    int db = pdeg(b);
    for (int i = pdeg(a); i >= db; i = pdeg(a)) {
        int c = a[i];
        if (c != 0) {
            for (int j = 0; j <= db; ++j) {
                int k = i - db + j;
                a[k] = ((a[k] - c * b[j]) % p + p) % p;
            }
        }
        a[i] = 0;
    }
    a.resize(std::max(db, 1));
    return a;
}

bool divides(const Poly& d, const Poly& f, int p) {
    Poly r = pmod(f, d, p);
    return pdeg(r) < 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, int p) {
    int n = pdeg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
        for (uint64_t v = 0; v < count; ++v) {
            Poly g(d + 1, 0);
            uint64_t t = v;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

FieldCtx::FieldCtx(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw Error("field_create: p = " + std::to_string(p) + " is not prime");
    if (m < 1 || m > kMaxExt - 1) throw Error("field_create: extension degree out of range");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= static_cast<uint64_t>(p);
        if (q_ > (1u << 24)) throw Error("field_create: field too large for desk scale");
    }
    // Index-least monic irreducible of degree m.
    uint64_t lower = 1;
    for (int i = 0; i < m; ++i) lower *= static_cast<uint64_t>(p);
    bool found = false;
    for (uint64_t v = 0; v < lower; ++v) {
        Poly f(m + 1, 0);
        uint64_t t = v;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            found = true;
            break;
        }
    }
    if (!found) throw Error("field_create: internal error, no irreducible modulus found");
}

Fq FieldCtx::from_int(long long v) const {
    Fq x;
    long long r = v % p_;
    if (r < 0) r += p_;
    x.c[0] = static_cast<uint8_t>(r);
    return x;
}

Fq FieldCtx::from_coords(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) > m_)
        throw Error("from_coords: too many coordinates");
    Fq x;
    for (size_t i = 0; i < coords.size(); ++i) {
        int r = coords[i] % p_;
        if (r < 0) r += p_;
        x.c[i] = static_cast<uint8_t>(r);
    }
    return x;
}

Fq FieldCtx::elt(uint64_t index) const {
    Fq x;
    for (int i = 0; i < m_; ++i) {
        x.c[i] = static_cast<uint8_t>(index % p_);
        index /= p_;
    }
    return x;
}

uint64_t FieldCtx::index(const Fq& x) const {
    uint64_t v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * p_ + x.c[i];
    return v;
}

Fq FieldCtx::add(const Fq& a, const Fq& b) const {
    Fq r;
    for (int i = 0; i < m_; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] + b.c[i]) % p_);
    return r;
}

Fq FieldCtx::sub(const Fq& a, const Fq& b) const {
    Fq r;
    for (int i = 0; i < m_; ++i)
        r.c[i] = static_cast<uint8_t>((a.c[i] - b.c[i] + p_) % p_);
    return r;
}

Fq FieldCtx::neg(const Fq& a) const { return sub(Fq{}, a); }

Fq FieldCtx::mul(const Fq& a, const Fq& b) const {
    if (m_ == 1) {
        Fq r;
        r.c[0] = static_cast<uint8_t>((a.c[0] * b.c[0]) % p_);
        return r;
    }
    std::array<int, 2 * kMaxExt> conv{};
    for (int i = 0; i < m_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < m_; ++j) conv[i + j] += a.c[i] * b.c[j];
    }
    // x^m ≡ -sum_{j<m} modulus[j] x^j
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        int c = ((conv[i] % p_) + p_) % p_;
        if (c != 0)
            for (int j = 0; j < m_; ++j) conv[i - m_ + j] -= c * modulus_[j];
        conv[i] = 0;
    }
    Fq r;
    for (int i = 0; i < m_; ++i) r.c[i] = static_cast<uint8_t>(((conv[i] % p_) + p_) % p_);
    return r;
}

Fq FieldCtx::pow(const Fq& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Fq base = a;
    Fq r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fq FieldCtx::inv(const Fq& a) const {
    if (is_zero(a)) throw Error("inv: division by zero");
    return pow(a, static_cast<long long>(q_) - 2);
}

Fq FieldCtx::pth_root(const Fq& x) const {
    long long e = 1;
    for (int i = 0; i < m_ - 1; ++i) e *= p_;
    return pow(x, e);
}

Fq FieldCtx::trace_to_prime(const Fq& x) const {
    Fq t = x;
    Fq acc = x;
    for (int i = 1; i < m_; ++i) {
        t = frobenius(t);
        acc = add(acc, t);
    }
    return acc;
}

FieldCtx::ArtinSchreierRoots FieldCtx::artin_schreier_roots(const Fq& c) const {
    ArtinSchreierRoots out;
    for (uint64_t v = 0; v < q_; ++v) {
        Fq y = elt(v);
        if (sub(pow(y, p_), y) == c) out.roots.push_back(y);
    }
    // y^p - y = c splits over F_{p^{mk}} iff k*Tr(c) = 0 in F_p.
    out.ext_multiplier = out.roots.empty() ? p_ : 1;
    return out;
}

std::string FieldCtx::to_string(const Fq& x) const {
    if (m_ == 1) return std::to_string(static_cast<int>(x.c[0]));
    std::string s = "[";
    for (int i = 0; i < m_; ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(x.c[i]));
    }
    return s + "]";
}

FieldEmbedding::FieldEmbedding(const FieldCtx& src, const FieldCtx& dst)
    : src_(src), dst_(dst) {
    if (src.p() != dst.p() || dst.m() % src.m() != 0)
        throw Error("FieldEmbedding: no embedding F_{p^m} -> F_{p^M} unless m | M");
    // Index-least root of the source modulus in dst.
    Fq root;
    bool found = false;
    for (uint64_t v = 0; v < dst.size(); ++v) {
        Fq x = dst.elt(v);
        Fq acc = dst.zero();
        for (int k = src.m(); k >= 0; --k)
            acc = dst.add(dst.mul(acc, x), dst.from_int(src.modulus()[k]));
        if (dst.is_zero(acc)) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) throw Error("FieldEmbedding: modulus has no root in destination");
    root_powers_.resize(src.m());
    Fq pw = dst.one();
    for (int i = 0; i < src.m(); ++i) {
        root_powers_[i] = pw;
        pw = dst.mul(pw, root);
    }
}

Fq FieldEmbedding::map(const Fq& x) const {
    Fq acc = dst_.zero();
    for (int i = 0; i < src_.m(); ++i) {
        Fq coef = dst_.from_int(x.c[i]);
        acc = dst_.add(acc, dst_.mul(coef, root_powers_[i]));
    }
    return acc;
}

}  // namespace ihoe
