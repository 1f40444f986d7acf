#pragma once

#include <vector>

#include "ihoe/gf.hpp"

namespace ihoe {

/// Dense matrix over F_{p^m}; all operations take the field context.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Fq> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Fq& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Fq& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

Mat mat_mul(const FieldCtx& F, const Mat& A, const Mat& B);
Mat mat_identity(const FieldCtx& F, int n);
bool mat_equal(const Mat& A, const Mat& B);
Mat mat_add(const FieldCtx& F, const Mat& A, const Mat& B);
Mat mat_sub(const FieldCtx& F, const Mat& A, const Mat& B);
Mat mat_scale(const FieldCtx& F, const Fq& c, const Mat& A);
Mat mat_pow(const FieldCtx& F, Mat A, long long e);

/// Reduced row echelon form in place; returns rank, fills pivot columns.
int rref(const FieldCtx& F, Mat& A, std::vector<int>* pivot_cols = nullptr);
int rank(const FieldCtx& F, Mat A);
/// Basis of the right kernel {x : Ax = 0}, each vector length A.cols.
std::vector<std::vector<Fq>> kernel_basis(const FieldCtx& F, Mat A);
bool is_invertible(const FieldCtx& F, Mat A);

}  // namespace ihoe
