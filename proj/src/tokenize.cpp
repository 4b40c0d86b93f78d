#include "textfuse/tokenize.hpp"

#include <algorithm>
#include <cctype>

namespace textfuse {

namespace {

bool is_ws(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string to_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Curly quotes and unicode dashes to their ASCII equivalents so the main
// scanner only deals with single-byte punctuation.
std::string normalize_unicode_punct(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x80) {
            const unsigned char b = static_cast<unsigned char>(text[i + 2]);
            if (b == 0x9C) { out.push_back('"'); i += 3; continue; }   // left double
            if (b == 0x9D) { out.push_back('"'); i += 3; continue; }   // right double
            if (b == 0x98 || b == 0x99) { out.push_back('\''); i += 3; continue; }
            if (b == 0x93 || b == 0x94) { out.append("--"); i += 3; continue; }
            if (b == 0xA6) { out.append("..."); i += 3; continue; }
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

const char* bracket_token(char c) {
    switch (c) {
        case '(': return "-LRB-";
        case ')': return "-RRB-";
        default: return nullptr;
    }
}

void emit_core(const std::string& s, std::vector<std::string>& out);

// Contraction suffixes, checked case-insensitively; "n't" must come first.
const char* kSuffixes[] = {"n't", "'re", "'ve", "'ll", "'m", "'s", "'d"};

struct Irregular {
    const char* word;
    size_t split_at;
};
const Irregular kIrregulars[] = {
    {"cannot", 3}, {"gonna", 3}, {"wanna", 3}, {"gotta", 3}, {"lemme", 3}, {"gimme", 3},
};

void emit_core(const std::string& s, std::vector<std::string>& out) {
    if (s.empty()) return;
    if (s == "``" || s == "''") {
        out.push_back(s);
        return;
    }
    const std::string lower = to_lower(s);
    for (const auto& irr : kIrregulars) {
        if (lower == irr.word) {
            out.push_back(s.substr(0, irr.split_at));
            out.push_back(s.substr(irr.split_at));
            return;
        }
    }
    for (const char* suf : kSuffixes) {
        const size_t n = std::char_traits<char>::length(suf);
        if (lower.size() > n && lower.compare(lower.size() - n, n, suf) == 0) {
            emit_core(s.substr(0, s.size() - n), out);
            out.push_back(s.substr(s.size() - n));
            return;
        }
    }
    const size_t dash = s.find("--");
    if (dash != std::string::npos) {
        emit_core(s.substr(0, dash), out);
        size_t end = dash;
        while (end < s.size() && s[end] == '-') ++end;
        out.push_back(s.substr(dash, end - dash));
        emit_core(s.substr(end), out);
        return;
    }
    out.push_back(s);
}

void process_chunk(std::string s, std::vector<std::string>& out) {
    // Leading openers.
    while (!s.empty()) {
        const char c = s.front();
        if (const char* br = bracket_token(c)) {
            out.emplace_back(br);
            s.erase(0, 1);
        } else if (c == '[' || c == '{' || c == '<') {
            out.push_back(std::string(1, c));
            s.erase(0, 1);
        } else if (c == '"') {
            out.emplace_back("``");
            s.erase(0, 1);
        } else if (s.size() >= 2 && s[0] == '`' && s[1] == '`') {
            out.emplace_back("``");
            s.erase(0, 2);
        } else if (c == '$' || c == '#') {
            out.push_back(std::string(1, c));
            s.erase(0, 1);
        } else {
            break;
        }
    }

    // Trailing closers, collected in reverse.
    std::vector<std::string> trail;
    while (!s.empty()) {
        const char c = s.back();
        if (const char* br = bracket_token(c)) {
            trail.emplace_back(br);
            s.pop_back();
        } else if (c == ']' || c == '}' || c == '>') {
            trail.push_back(std::string(1, c));
            s.pop_back();
        } else if (c == '"') {
            trail.emplace_back("''");
            s.pop_back();
        } else if (s.size() >= 2 && s[s.size() - 1] == '\'' && s[s.size() - 2] == '\'') {
            trail.emplace_back("''");
            s.erase(s.size() - 2);
        } else if (c == ',' || c == ';' || c == ':' || c == '!' || c == '?' || c == '%') {
            trail.push_back(std::string(1, c));
            s.pop_back();
        } else if (s.size() >= 3 && s.compare(s.size() - 3, 3, "...") == 0) {
            trail.emplace_back("...");
            s.erase(s.size() - 3);
        } else if (c == '.') {
            // Final period splits unless the core looks like an abbreviation
            // with internal periods (e.g. "U.S.").
            if (s.find('.') == s.size() - 1) {
                trail.emplace_back(".");
                s.pop_back();
            } else {
                break;
            }
        } else if (c == '\'') {
            // Possessive trailing apostrophe or closing single quote, but keep
            // contraction suffixes like 's intact for emit_core.
            const std::string lower = to_lower(s);
            bool is_suffix = false;
            for (const char* suf : kSuffixes) {
                const size_t n = std::char_traits<char>::length(suf);
                if (lower.size() >= n && lower.compare(lower.size() - n, n, suf) == 0)
                    is_suffix = true;
            }
            if (is_suffix) break;
            trail.emplace_back("'");
            s.pop_back();
        } else {
            break;
        }
    }

    emit_core(s, out);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) out.push_back(std::move(*it));
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
    const std::string norm = normalize_unicode_punct(text);
    std::vector<std::string> out;
    size_t i = 0;
    while (i < norm.size()) {
        while (i < norm.size() && is_ws(norm[i])) ++i;
        size_t j = i;
        while (j < norm.size() && !is_ws(norm[j])) ++j;
        if (j > i) process_chunk(norm.substr(i, j - i), out);
        i = j;
    }
    return out;
}

}  // namespace textfuse
