#pragma once

#include <cstdint>
#include <vector>

#include "textfuse/vecs.hpp"

namespace textfuse {

/// Compressed sparse row matrix, the storage format of every design matrix.
struct CsrMatrix {
    int64_t rows = 0;
    int64_t cols = 0;
    std::vector<int64_t> indptr{0};
    std::vector<int32_t> indices;
    std::vector<double> values;

    void append_row(const SparseVec& v) {
        indices.insert(indices.end(), v.idx.begin(), v.idx.end());
        values.insert(values.end(), v.val.begin(), v.val.end());
        indptr.push_back(static_cast<int64_t>(indices.size()));
        ++rows;
    }

    SparseVec row(int64_t i) const {
        SparseVec v;
        v.dim = static_cast<int32_t>(cols);
        for (int64_t k = indptr[i]; k < indptr[i + 1]; ++k) {
            v.idx.push_back(indices[k]);
            v.val.push_back(values[k]);
        }
        return v;
    }

    int64_t nnz() const { return static_cast<int64_t>(indices.size()); }

    static CsrMatrix from_rows(const std::vector<SparseVec>& rows_in, int64_t cols) {
        CsrMatrix m;
        m.cols = cols;
        int64_t total = 0;
        for (const auto& r : rows_in) total += static_cast<int64_t>(r.nnz());
        m.indices.reserve(total);
        m.values.reserve(total);
        for (const auto& r : rows_in) m.append_row(r);
        return m;
    }
};

}  // namespace textfuse
