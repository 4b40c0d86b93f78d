#include "textfuse/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "textfuse/common.hpp"
#include "textfuse/rng.hpp"

using json = nlohmann::json;

namespace textfuse {

namespace {

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::vector<TaggedSentence> load_tagged_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read tagged corpus: " + path.string());
    std::vector<TaggedSentence> out;
    TaggedSentence cur;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (!cur.tokens.empty()) out.push_back(std::move(cur));
            cur = {};
            continue;
        }
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ConfigError("tagged corpus line " + std::to_string(line_no) +
                              ": expected token<TAB>tag");
        cur.tokens.push_back(line.substr(0, tab));
        cur.tags.push_back(line.substr(tab + 1));
    }
    if (!cur.tokens.empty()) out.push_back(std::move(cur));
    return out;
}

// Template: word lower, suffixes 1-3, prefix 1, shape flags, previous two
// predicted tags, neighbouring words lowercased.
void PerceptronTagger::extract_features(const std::vector<std::string>& tokens, size_t i,
                                        const std::string& prev, const std::string& prev2,
                                        std::vector<std::string>& out) {
    const std::string& w = tokens[i];
    const std::string wl = lower(w);
    out.clear();
    out.push_back("b");
    out.push_back("w=" + wl);
    for (size_t n = 1; n <= 3 && n <= wl.size(); ++n) out.push_back("s" + std::to_string(n) + "=" + wl.substr(wl.size() - n));
    out.push_back("p1=" + wl.substr(0, 1));
    if (std::isupper(static_cast<unsigned char>(w[0]))) out.push_back("cap");
    if (all_digits(w)) out.push_back("dig");
    if (w.find('-') != std::string::npos) out.push_back("hyp");
    out.push_back("t1=" + prev);
    out.push_back("t2=" + prev2);
    out.push_back("pw=" + (i > 0 ? lower(tokens[i - 1]) : std::string("-START-")));
    out.push_back("nw=" + (i + 1 < tokens.size() ? lower(tokens[i + 1]) : std::string("-END-")));
}

int PerceptronTagger::predict(const std::vector<std::string>& feats) const {
    const size_t n = tags_->size();
    std::vector<double> scores(n, 0.0);
    for (const auto& f : feats) {
        auto it = weights_.find(f);
        if (it == weights_.end()) continue;
        const WeightRow& row = it->second;
        for (size_t t = 0; t < n; ++t) scores[t] += row[t];
    }
    int best = 0;
    for (size_t t = 1; t < n; ++t) {
        if (scores[t] > scores[best]) best = static_cast<int>(t);
    }
    return best;
}

std::vector<std::string> PerceptronTagger::tag(const std::vector<std::string>& tokens) const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    std::string prev = "-S1-", prev2 = "-S2-";
    std::vector<std::string> feats;
    for (size_t i = 0; i < tokens.size(); ++i) {
        extract_features(tokens, i, prev, prev2, feats);
        const int t = predict(feats);
        prev2 = prev;
        prev = tags_->tag(static_cast<size_t>(t));
        out.push_back(prev);
    }
    return out;
}

PerceptronTagger train_tagger(const std::vector<TaggedSentence>& corpus, int epochs,
                              uint64_t seed) {
    if (epochs < 1) throw ConfigError("train_tagger: epochs must be >= 1");
    const TagSet& tags = pos_tagset();
    for (const auto& s : corpus) {
        if (s.tokens.size() != s.tags.size())
            throw ConfigError("train_tagger: tokens/tags length mismatch");
        for (const auto& t : s.tags) {
            if (tags.index(t) < 0) throw ConfigError("train_tagger: unknown gold tag '" + t + "'");
        }
    }

    PerceptronTagger tagger;
    const size_t n_tags = tags.size();

    // Lazy averaging bookkeeping: per weight, the accumulated trajectory sum
    // and the step at which it was last flushed.
    struct AvgRow {
        std::vector<double> w, acc;
        std::vector<uint64_t> ts;
        explicit AvgRow(size_t n) : w(n, 0.0), acc(n, 0.0), ts(n, 0) {}
    };
    std::unordered_map<std::string, AvgRow> table;
    uint64_t step = 0;

    auto bump = [&](const std::string& feat, int t, double delta) {
        auto [it, inserted] = table.try_emplace(feat, n_tags);
        AvgRow& row = it->second;
        const size_t ti = static_cast<size_t>(t);
        row.acc[ti] += static_cast<double>(step - 1 - row.ts[ti]) * row.w[ti];
        row.ts[ti] = step - 1;
        row.w[ti] += delta;
    };

    std::vector<size_t> order(corpus.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed);

    std::vector<std::string> feats;
    for (int epoch = 0; epoch < epochs; ++epoch) {
        Rng epoch_rng = rng.derive(static_cast<uint64_t>(epoch));
        epoch_rng.shuffle(order);
        for (const size_t si : order) {
            const TaggedSentence& sent = corpus[si];
            std::string prev = "-S1-", prev2 = "-S2-";
            for (size_t i = 0; i < sent.tokens.size(); ++i) {
                ++step;
                PerceptronTagger::extract_features(sent.tokens, i, prev, prev2, feats);
                // Score with current (non-averaged) weights.
                std::vector<double> scores(n_tags, 0.0);
                for (const auto& f : feats) {
                    auto it = table.find(f);
                    if (it == table.end()) continue;
                    for (size_t t = 0; t < n_tags; ++t) scores[t] += it->second.w[t];
                }
                int guess = 0;
                for (size_t t = 1; t < n_tags; ++t)
                    if (scores[t] > scores[guess]) guess = static_cast<int>(t);
                const int gold = tags.index(sent.tags[i]);
                if (guess != gold) {
                    for (const auto& f : feats) {
                        bump(f, gold, 1.0);
                        bump(f, guess, -1.0);
                    }
                }
                prev2 = prev;
                prev = tags.tag(static_cast<size_t>(guess));
            }
        }
    }

    // Finalize averages.
    for (auto& [feat, row] : table) {
        PerceptronTagger::WeightRow avg(n_tags, 0.0);
        bool any = false;
        for (size_t t = 0; t < n_tags; ++t) {
            const double total = row.acc[t] + static_cast<double>(step - row.ts[t]) * row.w[t];
            avg[t] = step > 0 ? total / static_cast<double>(step) : 0.0;
            if (avg[t] != 0.0) any = true;
        }
        if (any) tagger.weights_.emplace(feat, std::move(avg));
    }
    tagger.averaged_ = true;
    tagger.epochs_ = epochs;
    tagger.seed_ = seed;
    return tagger;
}

double tagger_accuracy(const PerceptronTagger& tagger, const std::vector<TaggedSentence>& gold) {
    size_t correct = 0, total = 0;
    for (const auto& s : gold) {
        const auto pred = tagger.tag(s.tokens);
        for (size_t i = 0; i < s.tags.size(); ++i) {
            ++total;
            if (pred[i] == s.tags[i]) ++correct;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

void PerceptronTagger::save(const std::filesystem::path& path) const {
    json j;
    j["format"] = "textfuse-tagger";
    j["version"] = 1;
    j["epochs"] = epochs_;
    j["seed"] = seed_;
    j["averaged"] = averaged_;
    j["tags"] = tags_->tags();
    json w = json::object();
    for (const auto& [feat, row] : weights_) {
        json entries = json::array();
        for (size_t t = 0; t < row.size(); ++t) {
            if (row[t] != 0.0) entries.push_back({static_cast<int>(t), row[t]});
        }
        w[feat] = std::move(entries);
    }
    j["weights"] = std::move(w);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write tagger model: " + path.string());
    out << j.dump();
}

PerceptronTagger PerceptronTagger::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read tagger model: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("invalid tagger model " + path.string() + ": " + e.what());
    }
    if (j.value("format", "") != "textfuse-tagger")
        throw std::runtime_error("not a tagger model: " + path.string());
    PerceptronTagger tagger;
    if (j["tags"].get<std::vector<std::string>>() != tagger.tags_->tags())
        throw std::runtime_error("tagger model tagset mismatch: " + path.string());
    tagger.epochs_ = j.value("epochs", 0);
    tagger.seed_ = j.value("seed", 0ULL);
    tagger.averaged_ = j.value("averaged", true);
    const size_t n = tagger.tags_->size();
    for (const auto& [feat, entries] : j["weights"].items()) {
        WeightRow row(n, 0.0);
        for (const auto& e : entries) row[e[0].get<size_t>()] = e[1].get<double>();
        tagger.weights_.emplace(feat, std::move(row));
    }
    return tagger;
}

}  // namespace textfuse
