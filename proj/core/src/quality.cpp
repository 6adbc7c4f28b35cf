#include "triage/quality.hpp"

#include <algorithm>
#include <cmath>

#include "triage/errors.hpp"

namespace triage {

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    if (n == 0) return 0.0;
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

AuthorFeatures author_features(const PaperRecord& paper) {
    if (paper.authors.empty())
        throw data_error("record '" + paper.id + "': author features need authors");

    AuthorFeatures f;
    f.p_h = static_cast<double>(paper.authors.front().h_index);
    f.p_cit = static_cast<double>(paper.authors.front().total_citations);
    double sum_h = 0, sum_cit = 0;
    for (const auto& a : paper.authors) {
        sum_h += static_cast<double>(a.h_index);
        sum_cit += static_cast<double>(a.total_citations);
        f.max_h = std::max(f.max_h, static_cast<double>(a.h_index));
        f.max_cit = std::max(f.max_cit, static_cast<double>(a.total_citations));
    }
    f.avg_h = sum_h / static_cast<double>(paper.authors.size());
    f.avg_cit = sum_cit / static_cast<double>(paper.authors.size());
    return f;
}

AffiliationFeatures affiliation_features(const PaperRecord& paper) {
    AffiliationFeatures f;
    if (paper.authors.empty()) return f;

    f.p_rs = paper.authors.front().affiliation.research_score;
    f.p_doc = static_cast<double>(paper.authors.front().affiliation.doc_count);
    double sum_rs = 0, sum_doc = 0;
    for (const auto& a : paper.authors) {
        sum_rs += a.affiliation.research_score;
        sum_doc += static_cast<double>(a.affiliation.doc_count);
        f.max_rs = std::max(f.max_rs, a.affiliation.research_score);
        f.max_doc = std::max(f.max_doc, static_cast<double>(a.affiliation.doc_count));
    }
    f.avg_rs = sum_rs / static_cast<double>(paper.authors.size());
    f.avg_doc = sum_doc / static_cast<double>(paper.authors.size());
    return f;
}

std::optional<double> core_grade_value(CoreGrade grade) {
    switch (grade) {
        case CoreGrade::A_STAR: return 6.0;
        case CoreGrade::A: return 4.0;
        case CoreGrade::B: return 3.0;
        case CoreGrade::D: return 2.0;
        case CoreGrade::UNRANKED: return std::nullopt;
    }
    return std::nullopt;
}

VenueFeatures venue_features(const PaperRecord& paper) {
    double h_sum = 0, sjr_sum = 0, core_sum = 0;
    long long h_n = 0, sjr_n = 0, core_n = 0;
    for (const auto& ref : paper.references) {
        if (ref.venue.kind == VenueKind::JOURNAL) {
            if (ref.venue.h_index) {
                h_sum += static_cast<double>(*ref.venue.h_index);
                ++h_n;
            }
            if (ref.venue.sjr) {
                sjr_sum += *ref.venue.sjr;
                ++sjr_n;
            }
        } else if (ref.venue.kind == VenueKind::CONFERENCE) {
            if (auto v = core_grade_value(ref.venue.core_grade)) {
                core_sum += *v;
                ++core_n;
            }
        }
    }
    VenueFeatures f;
    f.havg_j = h_n ? h_sum / static_cast<double>(h_n) : 0.0;
    f.sjravg_j = sjr_n ? sjr_sum / static_cast<double>(sjr_n) : 0.0;
    f.avg_m = core_n ? core_sum / static_cast<double>(core_n) : 0.0;
    return f;
}

ImpactSet impact_references(const PaperRecord& paper, double mad_tau) {
    std::vector<Reference> counted;
    for (const auto& ref : paper.references)
        if (ref.citation_count) counted.push_back(ref);

    ImpactSet impact;
    if (counted.empty()) {
        impact.empty_flagged = true;
        return impact;
    }

    std::vector<double> counts;
    counts.reserve(counted.size());
    for (const auto& ref : counted) counts.push_back(static_cast<double>(*ref.citation_count));
    const double med = median_of(counts);

    std::vector<double> deviations;
    deviations.reserve(counts.size());
    for (double c : counts) deviations.push_back(std::abs(c - med));
    const double mad = median_of(deviations);

    for (const auto& ref : counted) {
        const double dev = std::abs(static_cast<double>(*ref.citation_count) - med);
        if (dev > mad_tau * mad) {
            // MAD-distant: kept only if recent or repeatedly cited. A reference
            // without a year cannot be shown stale, so it stays.
            const long long td = ref.year ? paper.year - *ref.year : 0;
            if (td > 5 && ref.in_text_count < 2) {
                impact.discarded.push_back(ref);
                continue;
            }
        }
        impact.members.push_back(ref);
    }
    return impact;
}

CitationFeatures citation_features(const PaperRecord& paper, const ImpactSet& impact) {
    CitationFeatures f;
    if (!impact.members.empty()) {
        double sum = 0;
        for (const auto& ref : impact.members)
            sum += static_cast<double>(*ref.citation_count) * static_cast<double>(ref.in_text_count);
        f.w_imp_cit_avg = sum / static_cast<double>(impact.members.size());
    }

    double cit_sum = 0;
    long long cit_n = 0;
    for (const auto& ref : paper.references) {
        if (ref.citation_count) {
            cit_sum += static_cast<double>(*ref.citation_count);
            ++cit_n;
        }
        if (ref.in_text_count == 0) ++f.uncited_ref;
    }
    f.cit_avg = cit_n ? cit_sum / static_cast<double>(cit_n) : 0.0;
    return f;
}

TemporalFeatures temporal_features(const PaperRecord& paper, const ImpactSet& impact) {
    std::vector<double> tds;
    for (const auto& ref : impact.members)
        if (ref.year) tds.push_back(static_cast<double>(paper.year - *ref.year));

    TemporalFeatures f;
    if (tds.empty()) return f;
    double sum = 0;
    double min = tds.front();
    for (double td : tds) {
        sum += td;
        min = std::min(min, td);
        if (td <= 5.0) ++f.temp_5;
    }
    f.temp_avg = sum / static_cast<double>(tds.size());
    f.temp_min = min;
    return f;
}

QualityFeatures quality_features(const PaperRecord& paper, double mad_tau) {
    QualityFeatures q;
    q.author = author_features(paper);
    q.affiliation = affiliation_features(paper);
    q.venue = venue_features(paper);
    ImpactSet impact = impact_references(paper, mad_tau);
    q.citation = citation_features(paper, impact);
    q.temporal = temporal_features(paper, impact);
    content_features(paper, q.math_eq, q.table_c, q.fig_c);
    return q;
}

}  // namespace triage
