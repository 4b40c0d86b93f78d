#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace textfuse {

/// Fixed, ordered tag vocabulary with a bijective tag -> position index.
class TagSet {
public:
    explicit TagSet(std::vector<std::string> tags);

    const std::vector<std::string>& tags() const { return tags_; }
    size_t size() const { return tags_.size(); }
    const std::string& tag(size_t i) const { return tags_[i]; }

    /// Position of the tag, or -1 if not a member.
    int index(const std::string& tag) const;

private:
    std::vector<std::string> tags_;
    std::unordered_map<std::string, int> index_;
};

/// The 45-tag Penn Treebank set used for POS histograms and bigrams.
const TagSet& pos_tagset();

/// The 12 entity labels, in fixed order.
const TagSet& entity_tagset();

/// First 9 labels of the entity tagset (reduced fingerprint variant).
const TagSet& entity_tagset_9();

}  // namespace textfuse
