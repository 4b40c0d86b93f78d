#pragma once

#include <cstdint>
#include <vector>

namespace textfuse {

/// Dense vector of doubles. All entries are expected to be finite.
using DenseVec = std::vector<double>;

/// Sparse vector: strictly increasing indices < dim, no explicit zeros.
struct SparseVec {
    int32_t dim = 0;
    std::vector<int32_t> idx;
    std::vector<double> val;

    size_t nnz() const { return idx.size(); }

    void push(int32_t i, double v) {
        if (v == 0.0) return;
        idx.push_back(i);
        val.push_back(v);
    }

    DenseVec to_dense() const {
        DenseVec out(static_cast<size_t>(dim), 0.0);
        for (size_t k = 0; k < idx.size(); ++k) out[static_cast<size_t>(idx[k])] = val[k];
        return out;
    }

    bool well_formed() const {
        for (size_t k = 0; k < idx.size(); ++k) {
            if (idx[k] < 0 || idx[k] >= dim) return false;
            if (k > 0 && idx[k] <= idx[k - 1]) return false;
            if (val[k] == 0.0) return false;
        }
        return idx.size() == val.size();
    }
};

}  // namespace textfuse
