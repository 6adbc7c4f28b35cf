#pragma once

#include "triage/corpus.hpp"
#include "triage/dictionary.hpp"

namespace triage {

struct ScopeFeatures {
    double keyword_match = 0.0;
    double title_scope = 0.0;
    double conference_scope = 0.0;
    double journal_scope = 0.0;
    long long adpf = 0;
};

// (|KW_Y ∩ KW_D| / |KW_Y|) * sum of dictionary frequencies over the
// intersection; 0 when the paper lists no keywords. Set semantics on
// normalized keywords.
double keyword_match(const PaperRecord& paper, const JournalDictionary& dict);

// Sum of V(T) over the paper's references whose titles hit the dictionary;
// every reference entry contributes, duplicates included.
double title_scope(const PaperRecord& paper, const JournalDictionary& dict);

// Same shape over conference / journal venue references.
double conference_scope(const PaperRecord& paper, const JournalDictionary& dict);
double journal_scope(const PaperRecord& paper, const JournalDictionary& dict);

// Sum over authors of their publication count in the journal; unknown
// authors contribute 0. Throws data_error on an empty author list.
long long adpf(const PaperRecord& paper, const JournalDictionary& dict);

ScopeFeatures scope_features(const PaperRecord& paper, const JournalDictionary& dict);

}  // namespace triage
