#pragma once

#include <string>
#include <vector>

#include "textfuse/mat.hpp"
#include "textfuse/vecs.hpp"

namespace textfuse {

/// Per-block normalization: z-score (dense blocks, fitted on the train
/// split) or stateless row-wise L2 (sparse blocks).
struct BlockScaler {
    enum class Kind { ZScore, L2Row };

    Kind kind = Kind::L2Row;
    std::vector<double> mean;  // zscore only
    std::vector<double> std;   // zscore only, floored at 1e-8

    static const char* kind_name(Kind k) { return k == Kind::ZScore ? "zscore" : "l2row"; }
    static Kind kind_from_name(const std::string& s);
};

/// Column means and population stddev of the train block matrix.
BlockScaler fit_zscore(const Mat& train);

inline BlockScaler l2row_scaler() { return BlockScaler{BlockScaler::Kind::L2Row, {}, {}}; }

DenseVec apply_scaler(const BlockScaler& s, DenseVec x);
SparseVec apply_l2row(SparseVec x);

}  // namespace textfuse
