#include "textfuse/ner.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

#include "textfuse/common.hpp"
#include "textfuse/tagset.hpp"
#include "textfuse/tokenize.hpp"

namespace textfuse {

namespace {

const char* kGazetteerLabels[] = {"PERSON", "NORP", "FAC",     "ORG",
                                  "GPE",    "LOC",  "PRODUCT", "EVENT"};

bool is_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Numerals possibly with grouping commas or a decimal point: 5,000 / 3.14
bool is_numeral(const std::string& s) {
    if (s.empty()) return false;
    bool digit_seen = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit_seen = true;
        } else if (c != ',' && c != '.') {
            return false;
        }
    }
    return digit_seen;
}

bool is_month(const std::string& s) {
    static const std::vector<std::string> months = {
        "January", "February", "March",     "April",   "May",      "June",
        "July",    "August",   "September", "October", "November", "December",
        "Jan",     "Feb",      "Mar",       "Apr",     "Jun",      "Jul",
        "Aug",     "Sep",      "Sept",      "Oct",     "Nov",      "Dec"};
    std::string t = s;
    if (!t.empty() && t.back() == '.') t.pop_back();
    return std::find(months.begin(), months.end(), t) != months.end();
}

bool is_weekday(const std::string& s) {
    static const std::vector<std::string> days = {"Monday", "Tuesday",  "Wednesday", "Thursday",
                                                  "Friday", "Saturday", "Sunday"};
    return std::find(days.begin(), days.end(), s) != days.end();
}

bool is_year(const std::string& s) {
    if (s.size() != 4 || !is_digits(s)) return false;
    return s[0] == '1' || s[0] == '2';
}

bool is_day_number(const std::string& s) {
    if (!is_digits(s) || s.size() > 2) return false;
    const int v = std::stoi(s);
    return v >= 1 && v <= 31;
}

bool is_clock(const std::string& s) {
    // H:MM or HH:MM(:SS)
    const size_t colon = s.find(':');
    if (colon == std::string::npos || colon == 0) return false;
    if (!is_digits(s.substr(0, colon))) return false;
    std::string rest = s.substr(colon + 1);
    const size_t colon2 = rest.find(':');
    if (colon2 != std::string::npos) {
        if (!is_digits(rest.substr(colon2 + 1))) return false;
        rest = rest.substr(0, colon2);
    }
    return rest.size() == 2 && is_digits(rest);
}

bool is_meridiem(const std::string& s) {
    std::string t;
    for (char c : s)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (!t.empty() && t.back() == '.') t.pop_back();
    return t == "am" || t == "pm" || t == "a.m" || t == "p.m";
}

// "5pm" style single token
bool is_numeric_meridiem(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i > 0 && i < s.size() && is_meridiem(s.substr(i));
}

bool is_currency_symbol(const std::string& s) {
    return s == "$" || s == "US$" || s == "C$" || s == "\xC2\xA3" || s == "\xE2\x82\xAC";
}

bool is_money_unit(const std::string& s) {
    static const std::vector<std::string> units = {"dollars", "dollar", "cents", "cent",
                                                   "million", "billion", "thousand", "trillion"};
    std::string t;
    for (char c : s)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return std::find(units.begin(), units.end(), t) != units.end();
}

}  // namespace

Gazetteer Gazetteer::load(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw ConfigError("gazetteer directory does not exist: " + dir.string());
    Gazetteer gaz;
    for (const char* label : kGazetteerLabels) {
        const auto file = dir / (std::string(label) + ".txt");
        if (!std::filesystem::exists(file)) continue;
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            std::vector<std::string> seq;
            std::string tok;
            while (ss >> tok) seq.push_back(tok);
            if (!seq.empty()) gaz.add(label, seq);
        }
    }
    return gaz;
}

void Gazetteer::add(const std::string& label, const std::vector<std::string>& token_seq) {
    const int prio = entity_tagset().index(label);
    if (prio < 0) throw ConfigError("gazetteer: unknown entity label '" + label + "'");
    by_first_[token_seq.front()].push_back({token_seq, prio, label});
    ++n_entries_;
}

const std::vector<Gazetteer::Entry>* Gazetteer::lookup(const std::string& first) const {
    auto it = by_first_.find(first);
    return it == by_first_.end() ? nullptr : &it->second;
}

std::vector<EntitySpan> gazetteer_entities(const std::vector<std::string>& tokens,
                                           const Gazetteer& gaz, bool nine_types) {
    std::vector<EntitySpan> spans;
    const int32_t n = static_cast<int32_t>(tokens.size());
    int32_t i = 0;
    while (i < n) {
        const std::string& t = tokens[static_cast<size_t>(i)];

        // 1. Date / time patterns.
        if (is_month(t)) {
            int32_t end = i + 1;
            while (end < n) {
                const std::string& nx = tokens[static_cast<size_t>(end)];
                if (is_day_number(nx) || is_year(nx)) {
                    ++end;
                } else if (nx == "," && end + 1 < n && is_year(tokens[static_cast<size_t>(end + 1)])) {
                    end += 2;
                } else {
                    break;
                }
            }
            spans.push_back({i, end, "DATE"});
            i = end;
            continue;
        }
        if (is_weekday(t) || is_year(t)) {
            spans.push_back({i, i + 1, "DATE"});
            ++i;
            continue;
        }
        if (is_clock(t) || is_numeric_meridiem(t)) {
            int32_t end = i + 1;
            if (end < n && is_meridiem(tokens[static_cast<size_t>(end)])) ++end;
            spans.push_back({i, end, "TIME"});
            i = end;
            continue;
        }
        if (is_digits(t) && i + 1 < n && is_meridiem(tokens[static_cast<size_t>(i + 1)])) {
            spans.push_back({i, i + 2, "TIME"});
            i += 2;
            continue;
        }

        // 2. Currency.
        if (is_currency_symbol(t) && i + 1 < n && is_numeral(tokens[static_cast<size_t>(i + 1)])) {
            int32_t end = i + 2;
            if (end < n && is_money_unit(tokens[static_cast<size_t>(end)])) ++end;
            spans.push_back({i, end, "MONEY"});
            i = end;
            continue;
        }
        if (is_numeral(t) && i + 1 < n && is_money_unit(tokens[static_cast<size_t>(i + 1)])) {
            const std::string& unit = tokens[static_cast<size_t>(i + 1)];
            std::string ul;
            for (char c : unit)
                ul.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            if (ul.find("dollar") == 0 || ul.find("cent") == 0) {
                spans.push_back({i, i + 2, "MONEY"});
                i += 2;
                continue;
            }
        }

        // 3. Gazetteer, longest match; label priority breaks length ties.
        if (const auto* entries = gaz.lookup(t)) {
            const Gazetteer::Entry* best = nullptr;
            for (const auto& e : entries[0]) {
                if (i + static_cast<int32_t>(e.seq.size()) > n) continue;
                bool match = true;
                for (size_t k = 1; k < e.seq.size(); ++k) {
                    if (tokens[static_cast<size_t>(i) + k] != e.seq[k]) {
                        match = false;
                        break;
                    }
                }
                if (!match) continue;
                if (!best || e.seq.size() > best->seq.size() ||
                    (e.seq.size() == best->seq.size() && e.priority < best->priority)) {
                    best = &e;
                }
            }
            if (best) {
                spans.push_back({i, i + static_cast<int32_t>(best->seq.size()), best->label});
                i += static_cast<int32_t>(best->seq.size());
                continue;
            }
        }

        // 4. Bare numerals.
        if (is_numeral(t)) {
            spans.push_back({i, i + 1, "CARDINAL"});
            ++i;
            continue;
        }

        ++i;
    }

    if (nine_types) {
        const TagSet& nine = entity_tagset_9();
        std::erase_if(spans, [&](const EntitySpan& e) { return nine.index(e.label) < 0; });
    }
    return spans;
}

Document annotate_entities(Document doc, NerMode mode, const Gazetteer* gaz, bool nine_types) {
    if (mode == NerMode::Sidecar) {
        if (!doc.entities) {
            static std::once_flag warned;
            std::call_once(warned, [] {
                warn("sidecar NER mode but no ingested entities; emitting empty entity lists");
            });
            doc.entities = std::vector<EntitySpan>{};
        }
        return doc;
    }
    if (!doc.tokens) throw ConfigError("annotate_entities: gazetteer mode requires tokens");
    if (!gaz) throw ConfigError("annotate_entities: gazetteer mode requires a gazetteer");
    doc.entities = gazetteer_entities(*doc.tokens, *gaz, nine_types);
    return doc;
}

}  // namespace textfuse
