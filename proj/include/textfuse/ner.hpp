#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "textfuse/corpus.hpp"

namespace textfuse {

/// Case-sensitive surface-form lists, one file per entity label
/// (PERSON.txt, ORG.txt, ...). Multi-word entries match token sequences.
class Gazetteer {
public:
    Gazetteer() = default;

    /// Loads `<label>.txt` for each gazetteer-backed label found in dir.
    static Gazetteer load(const std::filesystem::path& dir);

    void add(const std::string& label, const std::vector<std::string>& token_seq);

    /// All entries starting with `first`, as (sequence, label-priority, label).
    struct Entry {
        std::vector<std::string> seq;
        int priority = 0;
        std::string label;
    };
    const std::vector<Entry>* lookup(const std::string& first) const;

    size_t size() const { return n_entries_; }

private:
    std::unordered_map<std::string, std::vector<Entry>> by_first_;
    size_t n_entries_ = 0;
};

enum class NerMode { Sidecar, Gazetteer };

/// Rule + gazetteer entity annotation over tokens. Priority: date/time
/// patterns, currency, bare numerals, then gazetteer longest-match.
/// Spans never overlap and come out sorted by start token.
std::vector<EntitySpan> gazetteer_entities(const std::vector<std::string>& tokens,
                                           const Gazetteer& gaz, bool nine_types = false);

/// Sidecar mode returns the already-ingested entities (warning once per run
/// when nothing was ingested); gazetteer mode runs the rules above.
Document annotate_entities(Document doc, NerMode mode, const Gazetteer* gaz = nullptr,
                           bool nine_types = false);

}  // namespace textfuse
