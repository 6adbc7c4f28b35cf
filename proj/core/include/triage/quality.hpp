#pragma once

#include <optional>
#include <vector>

#include "triage/corpus.hpp"

namespace triage {

struct AuthorFeatures {
    double p_h = 0, avg_h = 0, max_h = 0;
    double p_cit = 0, avg_cit = 0, max_cit = 0;
};

struct AffiliationFeatures {
    double p_rs = 0, avg_rs = 0, max_rs = 0;
    double p_doc = 0, avg_doc = 0, max_doc = 0;
};

struct VenueFeatures {
    double havg_j = 0;    // mean h-index over journal references
    double sjravg_j = 0;  // mean SJR over journal references
    double avg_m = 0;     // mean CORE grade value over ranked conference references
};

struct CitationFeatures {
    double w_imp_cit_avg = 0;  // mean of citation_count * CE over impact references
    double cit_avg = 0;        // mean citation_count over references with known counts
    long long uncited_ref = 0;
};

struct TemporalFeatures {
    double temp_avg = 0;
    double temp_min = 0;
    long long temp_5 = 0;  // impact references with TD <= 5
};

// Outcome of the MAD outlier filter over references with known citation
// counts: `members` is the impact set C ∪ S, `discarded` the MAD-distant
// references removed for being both stale (TD > 5) and barely cited (CE < 2).
struct ImpactSet {
    std::vector<Reference> members;
    std::vector<Reference> discarded;
    bool empty_flagged = false;  // no reference had a known citation count
};

struct QualityFeatures {
    AuthorFeatures author;
    AffiliationFeatures affiliation;
    VenueFeatures venue;
    CitationFeatures citation;
    TemporalFeatures temporal;
    long long math_eq = 0, table_c = 0, fig_c = 0;
};

AuthorFeatures author_features(const PaperRecord& paper);
AffiliationFeatures affiliation_features(const PaperRecord& paper);

// A* -> 6, A -> 4, B -> 3, D -> 2; UNRANKED excluded from averages.
std::optional<double> core_grade_value(CoreGrade grade);

VenueFeatures venue_features(const PaperRecord& paper);

// mad_tau scales the outlier cut: |count - median| > mad_tau * MAD.
ImpactSet impact_references(const PaperRecord& paper, double mad_tau = 2.5);

CitationFeatures citation_features(const PaperRecord& paper, const ImpactSet& impact);
TemporalFeatures temporal_features(const PaperRecord& paper, const ImpactSet& impact);

inline void content_features(const PaperRecord& paper, long long& math_eq, long long& table_c,
                             long long& fig_c) {
    math_eq = paper.counts.math_eq;
    table_c = paper.counts.tables;
    fig_c = paper.counts.figures;
}

QualityFeatures quality_features(const PaperRecord& paper, double mad_tau = 2.5);

}  // namespace triage
