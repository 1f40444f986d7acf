#include "ihoe/linalg.hpp"

namespace ihoe {

Mat mat_mul(const FieldCtx& F, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw Error("mat_mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Fq& aik = A.at(i, k);
            if (F.is_zero(aik)) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

Mat mat_identity(const FieldCtx& F, int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
    return I;
}

bool mat_equal(const Mat& A, const Mat& B) {
    return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
}

Mat mat_add(const FieldCtx& F, const Mat& A, const Mat& B) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Mat mat_sub(const FieldCtx& F, const Mat& A, const Mat& B) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

Mat mat_scale(const FieldCtx& F, const Fq& c, const Mat& A) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
    return C;
}

Mat mat_pow(const FieldCtx& F, Mat A, long long e) {
    Mat R = mat_identity(F, A.rows);
    while (e > 0) {
        if (e & 1) R = mat_mul(F, R, A);
        A = mat_mul(F, A, A);
        e >>= 1;
    }
    return R;
}

int rref(const FieldCtx& F, Mat& A, std::vector<int>* pivot_cols) {
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int piv = -1;
        for (int i = r; i < A.rows; ++i)
            if (!F.is_zero(A.at(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
        Fq s = F.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(s, A.at(r, j));
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            Fq f = A.at(i, c);
            if (F.is_zero(f)) continue;
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

int rank(const FieldCtx& F, Mat A) { return rref(F, A); }

std::vector<std::vector<Fq>> kernel_basis(const FieldCtx& F, Mat A) {
    std::vector<int> pivots;
    rref(F, A, &pivots);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fq>> basis;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fq> v(A.cols, F.zero());
        v[c] = F.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(A.at(static_cast<int>(r), c));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_invertible(const FieldCtx& F, Mat A) {
    const int n = A.rows;
    if (A.cols != n) return false;
    return rank(F, std::move(A)) == n;
}

}  // namespace ihoe
