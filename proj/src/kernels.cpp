#include "textfuse/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace textfuse::kern {

void csr_mm_serial(const CsrMatrix& A, const Mat& B, Mat& Y) {
    for (int64_t i = 0; i < A.rows; ++i) {
        double* yi = Y.row_ptr(i);
        std::fill(yi, yi + Y.cols, 0.0);
        for (int64_t k = A.indptr[i]; k < A.indptr[i + 1]; ++k) {
            const double v = A.values[k];
            const double* brow = B.row_ptr(A.indices[k]);
            for (int64_t j = 0; j < Y.cols; ++j) yi[j] += v * brow[j];
        }
    }
}

void csr_mm(const CsrMatrix& A, const Mat& B, Mat& Y) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < A.rows; ++i) {
        double* yi = Y.row_ptr(i);
        std::fill(yi, yi + Y.cols, 0.0);
        for (int64_t k = A.indptr[i]; k < A.indptr[i + 1]; ++k) {
            const double v = A.values[k];
            const double* brow = B.row_ptr(A.indices[k]);
            for (int64_t j = 0; j < Y.cols; ++j) yi[j] += v * brow[j];
        }
    }
}

// Column j of Z depends on every row of A; parallelizing over columns keeps
// the row scan order fixed per output element.
void csr_tmm_serial(const CsrMatrix& A, const Mat& Y, Mat& Z) {
    Z.fill(0.0);
    for (int64_t j = 0; j < Y.cols; ++j) {
        for (int64_t i = 0; i < A.rows; ++i) {
            const double yij = Y(i, j);
            if (yij == 0.0) continue;
            for (int64_t k = A.indptr[i]; k < A.indptr[i + 1]; ++k) {
                Z(A.indices[k], j) += A.values[k] * yij;
            }
        }
    }
}

void csr_tmm(const CsrMatrix& A, const Mat& Y, Mat& Z) {
    Z.fill(0.0);
#pragma omp parallel for schedule(static)
    for (int64_t j = 0; j < Y.cols; ++j) {
        for (int64_t i = 0; i < A.rows; ++i) {
            const double yij = Y(i, j);
            if (yij == 0.0) continue;
            for (int64_t k = A.indptr[i]; k < A.indptr[i + 1]; ++k) {
                Z(A.indices[k], j) += A.values[k] * yij;
            }
        }
    }
}

static inline void linear_scores_row(const CsrMatrix& X, const Mat& W, const std::vector<double>& b,
                                     Mat& Z, int64_t i) {
    double* zi = Z.row_ptr(i);
    for (int64_t c = 0; c < W.rows; ++c) {
        const double* wc = W.row_ptr(c);
        double s = b[static_cast<size_t>(c)];
        for (int64_t k = X.indptr[i]; k < X.indptr[i + 1]; ++k) {
            s += X.values[k] * wc[X.indices[k]];
        }
        zi[c] = s;
    }
}

void linear_scores_serial(const CsrMatrix& X, const Mat& W, const std::vector<double>& b, Mat& Z) {
    for (int64_t i = 0; i < X.rows; ++i) linear_scores_row(X, W, b, Z, i);
}

void linear_scores(const CsrMatrix& X, const Mat& W, const std::vector<double>& b, Mat& Z) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < X.rows; ++i) linear_scores_row(X, W, b, Z, i);
}

static inline void softmax_xent_row(Mat& Z, const std::vector<int32_t>& y,
                                    std::vector<double>& loss_i, int64_t i) {
    double* zi = Z.row_ptr(i);
    double m = zi[0];
    for (int64_t c = 1; c < Z.cols; ++c) m = std::max(m, zi[c]);
    double sum = 0.0;
    for (int64_t c = 0; c < Z.cols; ++c) {
        zi[c] = std::exp(zi[c] - m);
        sum += zi[c];
    }
    const int32_t yi = y[static_cast<size_t>(i)];
    loss_i[static_cast<size_t>(i)] = yi >= 0 ? std::log(sum) - std::log(zi[yi]) : 0.0;
    const double inv = 1.0 / sum;
    for (int64_t c = 0; c < Z.cols; ++c) zi[c] *= inv;
}

void softmax_xent_rows_serial(Mat& Z, const std::vector<int32_t>& y, std::vector<double>& loss_i) {
    loss_i.assign(static_cast<size_t>(Z.rows), 0.0);
    for (int64_t i = 0; i < Z.rows; ++i) softmax_xent_row(Z, y, loss_i, i);
}

void softmax_xent_rows(Mat& Z, const std::vector<int32_t>& y, std::vector<double>& loss_i) {
    loss_i.assign(static_cast<size_t>(Z.rows), 0.0);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < Z.rows; ++i) softmax_xent_row(Z, y, loss_i, i);
}

static inline void grad_wt_class(const CsrMatrix& X, const Mat& R, Mat& G, int64_t c) {
    double* gc = G.row_ptr(c);
    std::fill(gc, gc + G.cols, 0.0);
    for (int64_t i = 0; i < X.rows; ++i) {
        const double ric = R(i, c);
        if (ric == 0.0) continue;
        for (int64_t k = X.indptr[i]; k < X.indptr[i + 1]; ++k) {
            gc[X.indices[k]] += ric * X.values[k];
        }
    }
}

void grad_wt_serial(const CsrMatrix& X, const Mat& R, Mat& G) {
    for (int64_t c = 0; c < R.cols; ++c) grad_wt_class(X, R, G, c);
}

void grad_wt(const CsrMatrix& X, const Mat& R, Mat& G) {
#pragma omp parallel for schedule(static)
    for (int64_t c = 0; c < R.cols; ++c) grad_wt_class(X, R, G, c);
}

static inline void col_mean_var_col(const Mat& X, std::vector<double>& mean,
                                    std::vector<double>& var, int64_t j) {
    double s = 0.0;
    for (int64_t i = 0; i < X.rows; ++i) s += X(i, j);
    const double mu = s / static_cast<double>(X.rows);
    double sq = 0.0;
    for (int64_t i = 0; i < X.rows; ++i) {
        const double d = X(i, j) - mu;
        sq += d * d;
    }
    mean[static_cast<size_t>(j)] = mu;
    var[static_cast<size_t>(j)] = sq / static_cast<double>(X.rows);
}

void col_mean_var_serial(const Mat& X, std::vector<double>& mean, std::vector<double>& var) {
    mean.assign(static_cast<size_t>(X.cols), 0.0);
    var.assign(static_cast<size_t>(X.cols), 0.0);
    for (int64_t j = 0; j < X.cols; ++j) col_mean_var_col(X, mean, var, j);
}

void col_mean_var(const Mat& X, std::vector<double>& mean, std::vector<double>& var) {
    mean.assign(static_cast<size_t>(X.cols), 0.0);
    var.assign(static_cast<size_t>(X.cols), 0.0);
#pragma omp parallel for schedule(static)
    for (int64_t j = 0; j < X.cols; ++j) col_mean_var_col(X, mean, var, j);
}

double sum_ordered(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
}

}  // namespace textfuse::kern
