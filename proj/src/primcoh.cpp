#include "ihoe/primcoh.hpp"

#include <algorithm>

#include "ihoe/ihoe2.hpp"

namespace ihoe {

namespace {

// binom(n, k) mod p via Pascal's rule (desk-scale degrees).
int binom_mod(int n, int k, int p) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<int>> row(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (row[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                 row[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]) % p;
    }
    return row[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// ∂(X^k) in the degree-k slice of C⊗C as (a, k-a) -> coeff; k = 0 gives
// the single term -(0,0).
std::map<int, int> d_of_power(int k, int p) {
    std::map<int, int> out;
    if (k == 0) {
        out[0] = p - 1;  // -1⊗1
        return out;
    }
    for (int j = 1; j < k; ++j) {
        int b = binom_mod(k, j, p);
        if (b != 0) out[j] = b;
    }
    return out;
}

}  // namespace

ComplexSlice boundary_slice(int p, int i) {
    if (i < 1) throw Error("boundary_slice: degree must be >= 1");
    ComplexSlice S{FieldCtx(p, 1)};
    S.degree = i;
    const FieldCtx& F = S.field;
    for (int a = 0; a <= i; ++a) S.basis2.emplace_back(a, i - a);
    for (int a = 0; a <= i; ++a)
        for (int b = 0; a + b <= i; ++b) S.basis3.push_back({a, b, i - a - b});
    auto idx2 = [&](int a) { return a; };  // pair (a, i-a)
    auto idx3 = [&](int a, int b) {
        auto it = std::find(S.basis3.begin(), S.basis3.end(),
                            std::array<int, 3>{a, b, i - a - b});
        return static_cast<int>(it - S.basis3.begin());
    };

    S.d1 = Mat(static_cast<int>(S.basis2.size()), 1);
    for (const auto& [a, coef] : d_of_power(i, p)) S.d1.at(idx2(a), 0) = F.from_int(coef);

    S.d2 = Mat(static_cast<int>(S.basis3.size()), static_cast<int>(S.basis2.size()));
    for (int col = 0; col <= i; ++col) {
        int a = col, b = i - col;
        // ∂(X^a⊗X^b) = ∂(X^a)⊗X^b - X^a⊗∂(X^b)
        for (const auto& [j, coef] : d_of_power(a, p)) {
            int r = idx3(j, a - j);  // term X^j ⊗ X^{a-j} ⊗ X^b
            S.d2.at(r, col) = F.add(S.d2.at(r, col), F.from_int(coef));
        }
        for (const auto& [j, coef] : d_of_power(b, p)) {
            int r = idx3(a, j);  // term X^a ⊗ X^j ⊗ X^{b-j}
            S.d2.at(r, col) = F.sub(S.d2.at(r, col), F.from_int(coef));
        }
    }
    return S;
}

std::map<int, int> pp_dims(int p, int n, int N) {
    if (N < 1) throw Error("pp_dims: cap must be >= 1");
    if (n != 1 && n != 2) throw Error("pp_dims: only n = 1 or 2");
    std::map<int, int> out;
    for (int i = 1; i <= N; ++i) {
        ComplexSlice S = boundary_slice(p, i);
        const FieldCtx& F = S.field;
        if (n == 1) {
            // B^1 = 0; P^1_i = ker d1 (1 - rank).
            out[i] = 1 - rank(F, S.d1);
        } else {
            int z = static_cast<int>(S.basis2.size()) - rank(F, S.d2);
            int b = rank(F, S.d1);
            out[i] = z - b;
        }
    }
    return out;
}

std::map<int, int> pp_expected(int p, int n, int N) {
    std::map<int, int> out;
    for (int i = 1; i <= N; ++i) out[i] = 0;
    if (n == 1) {
        for (long long q = 1; q <= N; q *= p) out[static_cast<int>(q)] = 1;
        return out;
    }
    for (long long q = p; q <= N; q *= p) out[static_cast<int>(q)] = 1;  // p^{s+1}
    for (long long qs = 1; qs <= N; qs *= p)
        for (long long qt = qs * p; qs + qt <= N; qt *= p)
            out[static_cast<int>(qs + qt)] = 1;  // p^s + p^t, s < t
    return out;
}

std::vector<Fq> class_z(const ComplexSlice& S, int p, int s) {
    const FieldCtx& F = S.field;
    std::vector<int> lam = lambda_coeffs(p);
    long long ps = ipow(p, s);
    std::vector<Fq> v(S.basis2.size(), F.zero());
    for (int i = 1; i <= p - 1; ++i) {
        long long a = i * ps;
        v[static_cast<size_t>(a)] = F.from_int(lam[static_cast<size_t>(i - 1)]);
    }
    return v;
}

std::vector<Fq> class_y(const ComplexSlice& S, int p, int s, int t) {
    const FieldCtx& F = S.field;
    long long ps = ipow(p, s), pt = ipow(p, t);
    std::vector<Fq> v(S.basis2.size(), F.zero());
    v[static_cast<size_t>(ps)] = F.one();
    v[static_cast<size_t>(pt)] = F.sub(v[static_cast<size_t>(pt)], F.one());
    return v;
}

namespace {

bool in_image(const FieldCtx& F, const Mat& A, const std::vector<Fq>& v) {
    Mat ext(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) ext.at(r, c) = A.at(r, c);
        ext.at(r, A.cols) = v[static_cast<size_t>(r)];
    }
    Mat base = A;
    return rank(F, std::move(ext)) == rank(F, std::move(base));
}

bool in_kernel(const FieldCtx& F, const Mat& A, const std::vector<Fq>& v) {
    for (int r = 0; r < A.rows; ++r) {
        Fq acc = F.zero();
        for (int c = 0; c < A.cols; ++c) acc = F.add(acc, F.mul(A.at(r, c), v[static_cast<size_t>(c)]));
        if (!F.is_zero(acc)) return false;
    }
    return true;
}

}  // namespace

ClassReport verify_classes(int p, int N) {
    ClassReport rep;
    auto dims = pp_dims(p, 2, N);
    auto add_check = [&](const std::string& name, int degree, const std::vector<Fq>& v) {
        ComplexSlice S = boundary_slice(p, degree);
        const FieldCtx& F = S.field;
        ClassCheck ck;
        ck.name = name;
        ck.degree = degree;
        ck.cocycle = in_kernel(F, S.d2, v);
        ck.not_coboundary = !in_image(F, S.d1, v);
        ck.spans = (dims[degree] == 1);
        if (!(ck.cocycle && ck.not_coboundary && ck.spans)) rep.all_pass = false;
        rep.checks.push_back(std::move(ck));
    };
    for (int s = 0; ipow(p, s + 1) <= N; ++s) {
        int deg = static_cast<int>(ipow(p, s + 1));
        ComplexSlice S = boundary_slice(p, deg);
        add_check("Z_" + std::to_string(s), deg, class_z(S, p, s));
    }
    for (int s = 0; ipow(p, s) + ipow(p, s + 1) <= N; ++s)
        for (int t = s + 1; ipow(p, s) + ipow(p, t) <= N; ++t) {
            int deg = static_cast<int>(ipow(p, s) + ipow(p, t));
            ComplexSlice S = boundary_slice(p, deg);
            add_check("Y_" + std::to_string(s) + "_" + std::to_string(t), deg,
                      class_y(S, p, s, t));
        }
    return rep;
}

}  // namespace ihoe
