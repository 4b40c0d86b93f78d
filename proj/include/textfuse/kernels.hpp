#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "textfuse/csr.hpp"
#include "textfuse/mat.hpp"

// Data-parallel kernels behind classifier training, SVD fitting and batch
// vectorization. Each kernel comes in two variants: a plain serial reference
// (`*_serial`) and an OpenMP version. The OpenMP versions parallelize only
// over independent output rows/columns and keep every per-element reduction
// in a fixed order, so both variants produce bit-identical results at any
// thread count. Tests compare them; bench/ times them.

namespace textfuse::kern {

/// Y = A * B. A is n x d (CSR), B is d x l, Y is n x l.
void csr_mm_serial(const CsrMatrix& A, const Mat& B, Mat& Y);
void csr_mm(const CsrMatrix& A, const Mat& B, Mat& Y);

/// Z = A^T * Y. A is n x d (CSR), Y is n x l, Z is d x l.
void csr_tmm_serial(const CsrMatrix& A, const Mat& Y, Mat& Z);
void csr_tmm(const CsrMatrix& A, const Mat& Y, Mat& Z);

/// Z = X * W^T + 1 b^T. X is n x D (CSR), W is C x D, b has C entries.
void linear_scores_serial(const CsrMatrix& X, const Mat& W, const std::vector<double>& b, Mat& Z);
void linear_scores(const CsrMatrix& X, const Mat& W, const std::vector<double>& b, Mat& Z);

/// In place: row-wise softmax of logits Z; for rows with y[i] >= 0 also the
/// cross-entropy -log p(y[i]) into loss_i (0 for unlabeled rows).
void softmax_xent_rows_serial(Mat& Z, const std::vector<int32_t>& y, std::vector<double>& loss_i);
void softmax_xent_rows(Mat& Z, const std::vector<int32_t>& y, std::vector<double>& loss_i);

/// G = R^T * X. R is n x C, X is n x D (CSR), G is C x D.
/// One output class per task; each scans the rows of X in index order.
void grad_wt_serial(const CsrMatrix& X, const Mat& R, Mat& G);
void grad_wt(const CsrMatrix& X, const Mat& R, Mat& G);

/// Per-column mean and population variance of a dense n x d matrix.
void col_mean_var_serial(const Mat& X, std::vector<double>& mean, std::vector<double>& var);
void col_mean_var(const Mat& X, std::vector<double>& mean, std::vector<double>& var);

/// Fixed-order sum; the reduction used wherever a scalar total must be
/// independent of the thread count.
double sum_ordered(std::span<const double> xs);

}  // namespace textfuse::kern
