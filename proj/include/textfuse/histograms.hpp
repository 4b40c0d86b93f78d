#pragma once

#include <string>
#include <vector>

#include "textfuse/corpus.hpp"
#include "textfuse/tagset.hpp"
#include "textfuse/vecs.hpp"

namespace textfuse {

/// 45-dim normalized tag frequency vector ("grammatical fingerprint").
/// All-zero when there are no tags; otherwise entries sum to 1.
DenseVec pos_histogram(const std::vector<std::string>& tags);

/// Normalized entity-label frequency vector over the given label set
/// ("entity fingerprint"); all-zero when no entity carries a set label.
DenseVec ner_histogram(const std::vector<EntitySpan>& entities, const TagSet& labels);

}  // namespace textfuse
