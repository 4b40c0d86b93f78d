#pragma once

#include <string>
#include <vector>

namespace textfuse {

/// Penn-Treebank-style word tokenizer: splits punctuation, separates
/// contraction suffixes ("don't" -> "do", "n't"), maps double quotes to
/// `` / ''. Deterministic; empty input yields an empty list.
std::vector<std::string> tokenize(const std::string& text);

}  // namespace textfuse
