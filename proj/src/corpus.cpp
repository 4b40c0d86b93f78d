#include "textfuse/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "textfuse/common.hpp"
#include "textfuse/rng.hpp"
#include "textfuse/tagset.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace textfuse {

const char* split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Dev: return "dev";
        default: return "test";
    }
}

int LabeledCorpus::class_index(const std::string& name) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), name);
    if (it == classes.end() || *it != name) return -1;
    return static_cast<int>(it - classes.begin());
}

std::vector<size_t> LabeledCorpus::doc_indices(Split s) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < documents.size(); ++i) {
        auto it = split.find(documents[i].id);
        if (it != split.end() && it->second == s) out.push_back(i);
    }
    return out;
}

const Document* LabeledCorpus::find(const std::string& id) const {
    for (const auto& d : documents)
        if (d.id == id) return &d;
    return nullptr;
}

Document* LabeledCorpus::find(const std::string& id) {
    return const_cast<Document*>(static_cast<const LabeledCorpus*>(this)->find(id));
}

std::string utf8_sanitize(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    static const char kReplacement[] = "\xEF\xBF\xBD";
    size_t i = 0;
    while (i < raw.size()) {
        const unsigned char c = static_cast<unsigned char>(raw[i]);
        size_t len = 0;
        uint32_t min_cp = 0;
        if (c < 0x80) {
            out.push_back(raw[i++]);
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2; min_cp = 0x80;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3; min_cp = 0x800;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4; min_cp = 0x10000;
        } else {
            out.append(kReplacement);
            ++i;
            continue;
        }
        if (i + len > raw.size()) {
            out.append(kReplacement);
            ++i;
            continue;
        }
        uint32_t cp = c & (0xFF >> (len + 1));
        bool ok = true;
        for (size_t k = 1; k < len; ++k) {
            const unsigned char cc = static_cast<unsigned char>(raw[i + k]);
            if ((cc & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (!ok || cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.append(kReplacement);
            ++i;  // resync on the next byte
        } else {
            out.append(raw, i, len);
            i += len;
        }
    }
    return out;
}

namespace {

std::string strip_headers(const std::string& text) {
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) return {};
        bool blank = true;
        for (size_t k = pos; k < eol; ++k) {
            if (!std::isspace(static_cast<unsigned char>(text[k]))) {
                blank = false;
                break;
            }
        }
        pos = eol + 1;
        if (blank) return text.substr(pos);
    }
    return {};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> sorted_subdirs(const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_directory()) names.push_back(e.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::vector<std::string> sorted_files(const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file()) names.push_back(e.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

struct PendingDoc {
    fs::path path;
    std::string id;
    std::string label;
    Split split;
};

}  // namespace

LabeledCorpus load_corpus(const fs::path& root, const LoadOptions& opts) {
    if (!fs::is_directory(root)) throw ConfigError("corpus root does not exist: " + root.string());

    LabeledCorpus corpus;
    std::vector<PendingDoc> pending;

    if (opts.layout == SplitLayout::BydateDirs) {
        for (const char* part : {"train", "test"}) {
            const fs::path dir = root / part;
            if (!fs::is_directory(dir))
                throw ConfigError("missing split directory: " + dir.string());
            const Split sp = std::string(part) == "train" ? Split::Train : Split::Test;
            for (const auto& cls : sorted_subdirs(dir)) {
                auto files = sorted_files(dir / cls);
                if (files.empty()) warn("empty class directory: " + (dir / cls).string());
                if (std::find(corpus.classes.begin(), corpus.classes.end(), cls) ==
                    corpus.classes.end())
                    corpus.classes.push_back(cls);
                for (const auto& f : files) {
                    pending.push_back({dir / cls / f, std::string(part) + "/" + cls + "/" + f,
                                       cls, sp});
                }
            }
        }
    } else {
        auto classes = sorted_subdirs(root);
        if (classes.empty()) throw ConfigError("no class directories under " + root.string());
        corpus.classes = classes;
        Rng rng(opts.seed);
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            const auto& cls = classes[ci];
            auto files = sorted_files(root / cls);
            if (files.empty()) warn("empty class directory: " + (root / cls).string());
            std::vector<size_t> order(files.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = i;
            Rng class_rng = rng.derive(ci);
            class_rng.shuffle(order);
            const size_t n_test =
                static_cast<size_t>(std::llround(opts.test_fraction * static_cast<double>(files.size())));
            for (size_t i = 0; i < order.size(); ++i) {
                const auto& f = files[order[i]];
                pending.push_back({root / cls / f, cls + "/" + f, cls,
                                   i < n_test ? Split::Test : Split::Train});
            }
        }
    }

    std::sort(corpus.classes.begin(), corpus.classes.end());
    if (corpus.classes.empty()) throw ConfigError("no class directories under " + root.string());
    std::sort(pending.begin(), pending.end(),
              [](const PendingDoc& a, const PendingDoc& b) { return a.id < b.id; });

    corpus.documents.resize(pending.size());
#pragma omp parallel for schedule(dynamic, 32)
    for (int64_t i = 0; i < static_cast<int64_t>(pending.size()); ++i) {
        const auto& p = pending[i];
        Document d;
        d.id = p.id;
        d.label = p.label;
        d.text = utf8_sanitize(read_file(p.path));
        if (opts.strip_headers) d.text = strip_headers(d.text);
        corpus.documents[i] = std::move(d);
    }
    for (const auto& p : pending) corpus.split[p.id] = p.split;
    return corpus;
}

LabeledCorpus make_dev_split(LabeledCorpus corpus, double dev_fraction, uint64_t seed) {
    if (!(dev_fraction > 0.0 && dev_fraction < 1.0))
        throw ConfigError("dev_fraction must be in (0,1)");

    // Bucket train docs per class, ordered by id so the result is independent
    // of filesystem enumeration order.
    std::map<std::string, std::vector<std::string>> by_class;
    for (const auto& d : corpus.documents) {
        auto it = corpus.split.find(d.id);
        if (it != corpus.split.end() && it->second == Split::Train)
            by_class[d.label].push_back(d.id);
    }

    Rng rng(seed);
    size_t class_idx = 0;
    for (auto& [cls, ids] : by_class) {
        std::sort(ids.begin(), ids.end());
        if (ids.size() < 2) {
            warn("class '" + cls + "' has fewer than 2 train docs; keeping all in train");
            ++class_idx;
            continue;
        }
        Rng class_rng = rng.derive(class_idx);
        class_rng.shuffle(ids);
        const size_t n_dev =
            static_cast<size_t>(std::llround(dev_fraction * static_cast<double>(ids.size())));
        for (size_t i = 0; i < n_dev; ++i) corpus.split[ids[i]] = Split::Dev;
        ++class_idx;
    }
    return corpus;
}

void write_annotations(const LabeledCorpus& corpus, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write sidecar: " + path.string());
    for (const auto& d : corpus.documents) {
        if (!d.tokens) throw ConfigError("write_annotations: doc '" + d.id + "' has no tokens");
        json j;
        j["id"] = d.id;
        j["tokens"] = *d.tokens;
        if (d.pos_tags) j["pos"] = *d.pos_tags;
        if (d.entities) {
            json ents = json::array();
            for (const auto& e : *d.entities) {
                ents.push_back({{"start", e.start_token}, {"end", e.end_token}, {"label", e.label}});
            }
            j["entities"] = ents;
        }
        out << j.dump() << "\n";
    }
}

size_t read_annotations(LabeledCorpus& corpus, const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read sidecar: " + path.string());

    std::unordered_map<std::string, size_t> by_id;
    for (size_t i = 0; i < corpus.documents.size(); ++i) by_id[corpus.documents[i].id] = i;

    size_t skipped = 0;
    size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
            if (!j.is_object() || !j.contains("id") || !j.contains("tokens"))
                throw std::runtime_error("missing id/tokens");
        } catch (const std::exception& e) {
            throw std::runtime_error("malformed sidecar line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
        const std::string id = j["id"].get<std::string>();
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            warn("sidecar id not in corpus, skipping: " + id);
            ++skipped;
            continue;
        }
        Document& d = corpus.documents[it->second];
        d.tokens = j["tokens"].get<std::vector<std::string>>();
        if (j.contains("pos")) {
            auto pos = j["pos"].get<std::vector<std::string>>();
            if (pos.size() != d.tokens->size())
                throw std::runtime_error("malformed sidecar line " + std::to_string(line_no) +
                                         ": pos/tokens length mismatch for '" + id + "'");
            d.pos_tags = std::move(pos);
        }
        if (j.contains("entities")) {
            std::vector<EntitySpan> ents;
            for (const auto& ej : j["entities"]) {
                EntitySpan e{ej.at("start").get<int32_t>(), ej.at("end").get<int32_t>(),
                             ej.at("label").get<std::string>()};
                const auto n = static_cast<int32_t>(d.tokens->size());
                if (!(0 <= e.start_token && e.start_token < e.end_token && e.end_token <= n))
                    throw std::runtime_error("malformed sidecar line " + std::to_string(line_no) +
                                             ": entity span out of range for '" + id + "'");
                if (entity_tagset().index(e.label) < 0)
                    throw std::runtime_error("malformed sidecar line " + std::to_string(line_no) +
                                             ": unknown entity label '" + e.label + "'");
                ents.push_back(std::move(e));
            }
            d.entities = std::move(ents);
        }
    }
    if (skipped > 0) info("sidecar: skipped " + std::to_string(skipped) + " unknown doc ids");
    return skipped;
}

}  // namespace textfuse
