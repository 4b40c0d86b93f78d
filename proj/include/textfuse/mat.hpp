#pragma once

#include <cstdint>
#include <vector>

namespace textfuse {

/// Row-major dense matrix of doubles.
struct Mat {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int64_t r, int64_t c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0.0) {}

    double& operator()(int64_t i, int64_t j) { return a[static_cast<size_t>(i * cols + j)]; }
    double operator()(int64_t i, int64_t j) const { return a[static_cast<size_t>(i * cols + j)]; }

    double* row_ptr(int64_t i) { return a.data() + i * cols; }
    const double* row_ptr(int64_t i) const { return a.data() + i * cols; }

    void fill(double v) { std::fill(a.begin(), a.end(), v); }
};

}  // namespace textfuse
