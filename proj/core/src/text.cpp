#include "triage/text.hpp"

#include <cctype>

namespace triage {

namespace {

bool is_word_char(unsigned char c) {
    // Bytes >= 0x80 (UTF-8 continuations and lead bytes) are kept verbatim.
    return std::isalnum(c) || c >= 0x80;
}

}  // namespace

std::string normalize_text(const std::string& raw) {
    // Pass 1: lowercase, map punctuation to space, keep intra-word hyphens.
    std::string mid;
    mid.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(raw[i]);
        if (is_word_char(c)) {
            mid.push_back(static_cast<char>(std::tolower(c)));
        } else if (c == '-') {
            bool prev_word = !mid.empty() && is_word_char(static_cast<unsigned char>(mid.back()));
            bool next_word = i + 1 < raw.size() && is_word_char(static_cast<unsigned char>(raw[i + 1]));
            mid.push_back(prev_word && next_word ? '-' : ' ');
        } else {
            mid.push_back(' ');
        }
    }
    // Pass 2: collapse whitespace, trim.
    std::string out;
    out.reserve(mid.size());
    bool in_space = true;  // leading spaces dropped
    for (char c : mid) {
        if (c == ' ') {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out.push_back(' ');
            out.push_back(c);
            in_space = false;
        }
    }
    return out;
}

std::vector<std::string> split_tokens(const std::string& normalized) {
    std::vector<std::string> tokens;
    size_t start = 0;
    while (start < normalized.size()) {
        size_t end = normalized.find(' ', start);
        if (end == std::string::npos) end = normalized.size();
        if (end > start) tokens.push_back(normalized.substr(start, end - start));
        start = end + 1;
    }
    return tokens;
}

}  // namespace triage
