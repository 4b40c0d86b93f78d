#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "textfuse/tagset.hpp"

namespace textfuse {

struct TaggedSentence {
    std::vector<std::string> tokens;
    std::vector<std::string> tags;
};

/// Two-column training corpus: `token<TAB>tag`, blank line between sentences.
std::vector<TaggedSentence> load_tagged_tsv(const std::filesystem::path& path);

/// Greedy left-to-right POS tagger over the 45-tag Penn set with averaged
/// perceptron weights. Prediction is pure once training has finalized the
/// averages; tagging is safe to run from multiple threads.
class PerceptronTagger {
public:
    /// One weight row per feature string, indexed by tag position.
    using WeightRow = std::vector<double>;

    PerceptronTagger() : tags_(&pos_tagset()) {}

    std::vector<std::string> tag(const std::vector<std::string>& tokens) const;

    bool averaged() const { return averaged_; }
    int epochs() const { return epochs_; }
    uint64_t seed() const { return seed_; }
    size_t feature_count() const { return weights_.size(); }
    const std::unordered_map<std::string, WeightRow>& weights() const { return weights_; }

    void save(const std::filesystem::path& path) const;
    static PerceptronTagger load(const std::filesystem::path& path);

    friend PerceptronTagger train_tagger(const std::vector<TaggedSentence>&, int, uint64_t);

private:
    int predict(const std::vector<std::string>& feats) const;
    static void extract_features(const std::vector<std::string>& tokens, size_t i,
                                 const std::string& prev, const std::string& prev2,
                                 std::vector<std::string>& out);

    const TagSet* tags_;
    std::unordered_map<std::string, WeightRow> weights_;
    bool averaged_ = false;
    int epochs_ = 0;
    uint64_t seed_ = 0;
};

/// Averaged-perceptron training: per-token update on mispredict, final
/// weights are the average of the weight trajectory over all token steps.
/// Sentence order is shuffled per epoch from the seed; fixed seed gives
/// identical weights. Unknown gold tags are fatal.
PerceptronTagger train_tagger(const std::vector<TaggedSentence>& corpus, int epochs,
                              uint64_t seed);

/// Token-level accuracy of the tagger on gold sentences.
double tagger_accuracy(const PerceptronTagger& tagger, const std::vector<TaggedSentence>& gold);

}  // namespace textfuse
