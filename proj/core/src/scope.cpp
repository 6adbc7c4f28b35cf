#include "triage/scope.hpp"

#include <set>

#include "triage/errors.hpp"

namespace triage {

double keyword_match(const PaperRecord& paper, const JournalDictionary& dict) {
    std::set<std::string> kws(paper.keywords.begin(), paper.keywords.end());
    kws.erase("");
    if (kws.empty()) return 0.0;

    long long hits = 0;
    long long freq_sum = 0;
    for (const auto& kw : kws) {
        auto it = dict.keyword_freq.find(kw);
        if (it != dict.keyword_freq.end()) {
            ++hits;
            freq_sum += it->second;
        }
    }
    return (static_cast<double>(hits) / static_cast<double>(kws.size())) *
           static_cast<double>(freq_sum);
}

double title_scope(const PaperRecord& paper, const JournalDictionary& dict) {
    double total = 0.0;
    for (const auto& ref : paper.references) {
        auto it = dict.title_value.find(ref.title);
        if (it != dict.title_value.end()) total += it->second;
    }
    return total;
}

namespace {

double venue_scope(const PaperRecord& paper, const std::map<std::string, double>& values,
                   VenueKind kind) {
    double total = 0.0;
    for (const auto& ref : paper.references) {
        if (ref.venue.kind != kind) continue;
        auto it = values.find(ref.venue.name);
        if (it != values.end()) total += it->second;
    }
    return total;
}

}  // namespace

double conference_scope(const PaperRecord& paper, const JournalDictionary& dict) {
    return venue_scope(paper, dict.conference_value, VenueKind::CONFERENCE);
}

double journal_scope(const PaperRecord& paper, const JournalDictionary& dict) {
    return venue_scope(paper, dict.journal_value, VenueKind::JOURNAL);
}

long long adpf(const PaperRecord& paper, const JournalDictionary& dict) {
    if (paper.authors.empty()) throw data_error("record '" + paper.id + "': ADPF needs authors");
    long long total = 0;
    for (const auto& author : paper.authors) {
        auto it = dict.author_pub_freq.find(author.name);
        if (it != dict.author_pub_freq.end()) total += it->second;
    }
    return total;
}

ScopeFeatures scope_features(const PaperRecord& paper, const JournalDictionary& dict) {
    return {keyword_match(paper, dict), title_scope(paper, dict), conference_scope(paper, dict),
            journal_scope(paper, dict), adpf(paper, dict)};
}

}  // namespace triage
