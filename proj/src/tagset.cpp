#include "textfuse/tagset.hpp"

namespace textfuse {

TagSet::TagSet(std::vector<std::string> tags) : tags_(std::move(tags)) {
    for (size_t i = 0; i < tags_.size(); ++i) index_[tags_[i]] = static_cast<int>(i);
}

int TagSet::index(const std::string& tag) const {
    auto it = index_.find(tag);
    return it == index_.end() ? -1 : it->second;
}

const TagSet& pos_tagset() {
    static const TagSet set({
        "CC",   "CD",  "DT",   "EX",   "FW",   "IN",   "JJ",  "JJR",  "JJS",   "LS",
        "MD",   "NN",  "NNS",  "NNP",  "NNPS", "PDT",  "POS", "PRP",  "PRP$",  "RB",
        "RBR",  "RBS", "RP",   "SYM",  "TO",   "UH",   "VB",  "VBD",  "VBG",   "VBN",
        "VBP",  "VBZ", "WDT",  "WP",   "WP$",  "WRB",  "#",   "$",    "``",    "''",
        ",",    ".",   ":",    "-LRB-", "-RRB-",
    });
    return set;
}

const TagSet& entity_tagset() {
    static const TagSet set({
        "PERSON", "NORP", "FAC", "ORG", "GPE", "LOC",
        "PRODUCT", "EVENT", "DATE", "TIME", "CARDINAL", "MONEY",
    });
    return set;
}

const TagSet& entity_tagset_9() {
    static const TagSet set({
        "PERSON", "NORP", "FAC", "ORG", "GPE", "LOC", "PRODUCT", "EVENT", "DATE",
    });
    return set;
}

}  // namespace textfuse
