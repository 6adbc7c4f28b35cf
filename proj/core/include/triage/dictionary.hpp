#pragma once

#include <map>
#include <string>

#include "triage/corpus.hpp"

namespace triage {

// Per-journal scope dictionary built from the accepted (FWD) corpus.
// Value maps are Citation-Effect weighted: each reference contributes its
// in-text citation count to the entry for its title / venue.
struct JournalDictionary {
    std::string journal_id;
    std::map<std::string, long long> keyword_freq;     // f(K): papers listing the keyword
    std::map<std::string, double> title_value;         // V(T): sum of CE over citing papers
    std::map<std::string, double> conference_value;    // V(C)
    std::map<std::string, double> journal_value;       // V(J)
    std::map<std::string, long long> author_pub_freq;  // papers with the author
    long long source_size = 0;                         // accepted articles folded in

    bool operator==(const JournalDictionary&) const = default;
};

// Folds every record of `accepted` into a fresh dictionary.
// Throws data_error on an empty corpus.
JournalDictionary build_dictionary(const Corpus& accepted);

void save_dictionary(const JournalDictionary& dict, const std::string& path);
JournalDictionary load_dictionary(const std::string& path);

}  // namespace triage
