#pragma once

#include <set>
#include <string>
#include <vector>

namespace triage {

struct RakePhrase {
    std::string text;  // normalized, space-joined tokens
    double score = 0.0;
};

// The stopword list shipped with the library (data/stopwords_en.txt).
const std::set<std::string>& default_stopwords();

// Reads one stopword per line; '#' lines are comments. Throws io_error.
std::set<std::string> load_stopwords(const std::string& path);

// Candidate phrases are maximal token runs between stopwords, punctuation and
// sentence boundaries. Word score deg(w)/freq(w) over the candidate set;
// phrase score sums member word scores per occurrence. Distinct phrases are
// ranked by score, ties by first occurrence; at most top_n returned.
std::vector<RakePhrase> rake_keywords(const std::string& text,
                                      const std::set<std::string>& stopwords, int top_n);

}  // namespace triage
