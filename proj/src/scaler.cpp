#include "textfuse/scaler.hpp"

#include <cmath>
#include <stdexcept>

#include "textfuse/kernels.hpp"

namespace textfuse {

BlockScaler::Kind BlockScaler::kind_from_name(const std::string& s) {
    if (s == "zscore") return Kind::ZScore;
    if (s == "l2row") return Kind::L2Row;
    throw std::runtime_error("unknown scaler kind: " + s);
}

BlockScaler fit_zscore(const Mat& train) {
    BlockScaler s;
    s.kind = BlockScaler::Kind::ZScore;
    std::vector<double> var;
    kern::col_mean_var(train, s.mean, var);
    s.std.resize(var.size());
    for (size_t j = 0; j < var.size(); ++j) {
        s.std[j] = std::max(std::sqrt(var[j]), 1e-8);
    }
    return s;
}

DenseVec apply_scaler(const BlockScaler& s, DenseVec x) {
    if (s.kind == BlockScaler::Kind::ZScore) {
        for (size_t j = 0; j < x.size(); ++j) x[j] = (x[j] - s.mean[j]) / s.std[j];
        return x;
    }
    double sq = 0.0;
    for (double v : x) sq += v * v;
    if (sq > 0.0) {
        const double inv = 1.0 / std::sqrt(sq);
        for (auto& v : x) v *= inv;
    }
    return x;
}

SparseVec apply_l2row(SparseVec x) {
    double sq = 0.0;
    for (double v : x.val) sq += v * v;
    if (sq > 0.0) {
        const double inv = 1.0 / std::sqrt(sq);
        for (auto& v : x.val) v *= inv;
    }
    return x;
}

}  // namespace textfuse
