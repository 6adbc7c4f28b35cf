#include "triage/rake.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "triage/errors.hpp"
#include "triage/stopwords_data.hpp"

namespace triage {

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words(kDefaultStopwords.begin(), kDefaultStopwords.end());
    return words;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open stopword file: " + path);
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        words.insert(line);
    }
    return words;
}

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

// Token runs: whitespace separates tokens within a run; any other
// non-word character (sentence punctuation included) breaks the run.
std::vector<std::vector<std::string>> candidate_runs(const std::string& text,
                                                     const std::set<std::string>& stopwords) {
    std::vector<std::vector<std::string>> runs;
    std::vector<std::string> run;
    std::string token;

    auto end_token = [&] {
        if (token.empty()) return;
        if (stopwords.count(token)) {
            if (!run.empty()) runs.push_back(std::move(run));
            run.clear();
        } else {
            run.push_back(token);
        }
        token.clear();
    };
    auto break_run = [&] {
        end_token();
        if (!run.empty()) runs.push_back(std::move(run));
        run.clear();
    };

    for (size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_char(c)) {
            token.push_back(static_cast<char>(std::tolower(c)));
        } else if (c == '-' && !token.empty() && i + 1 < text.size() &&
                   is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            token.push_back('-');
        } else if (std::isspace(c)) {
            end_token();
        } else {
            break_run();
        }
    }
    break_run();
    return runs;
}

}  // namespace

std::vector<RakePhrase> rake_keywords(const std::string& text,
                                      const std::set<std::string>& stopwords, int top_n) {
    if (top_n < 1) throw data_error("rake_keywords: top_n must be >= 1");
    if (stopwords.empty()) throw data_error("rake_keywords: stopword list must be nonempty");

    const auto runs = candidate_runs(text, stopwords);
    if (runs.empty()) return {};

    // deg(w): summed length of phrases containing w, per occurrence; freq(w): occurrences.
    std::map<std::string, long long> freq, deg;
    for (const auto& run : runs) {
        for (const auto& word : run) {
            freq[word] += 1;
            deg[word] += static_cast<long long>(run.size());
        }
    }

    struct Entry {
        double score;
        size_t first_seen;
    };
    std::map<std::string, Entry> phrases;
    std::vector<std::string> order;
    for (size_t i = 0; i < runs.size(); ++i) {
        std::string joined;
        double score = 0.0;
        for (const auto& word : runs[i]) {
            if (!joined.empty()) joined.push_back(' ');
            joined += word;
            score += static_cast<double>(deg[word]) / static_cast<double>(freq[word]);
        }
        if (phrases.emplace(joined, Entry{score, i}).second) order.push_back(joined);
    }

    std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
        const Entry& ea = phrases.at(a);
        const Entry& eb = phrases.at(b);
        if (ea.score != eb.score) return ea.score > eb.score;
        return ea.first_seen < eb.first_seen;
    });

    std::vector<RakePhrase> out;
    const size_t limit = std::min<size_t>(order.size(), static_cast<size_t>(top_n));
    out.reserve(limit);
    for (size_t i = 0; i < limit; ++i) out.push_back({order[i], phrases.at(order[i]).score});
    return out;
}

}  // namespace triage
