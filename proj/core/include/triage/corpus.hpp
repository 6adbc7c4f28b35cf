#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triage {

enum class Label { FWD, NFWD, UNLABELED };

enum class SectionKind { INTRO, BODY, CONCLUSION, OTHER };

enum class VenueKind { JOURNAL, CONFERENCE, OTHER };

// CORE conference tiers of the 2017 list; grades outside {A*, A, B, D} are UNRANKED.
enum class CoreGrade { A_STAR, A, B, D, UNRANKED };

const char* to_string(Label label);
const char* to_string(SectionKind kind);
const char* to_string(VenueKind kind);
const char* to_string(CoreGrade grade);

Label label_from_string(const std::string& s);
SectionKind section_kind_from_string(const std::string& s);
VenueKind venue_kind_from_string(const std::string& s);
CoreGrade core_grade_from_string(const std::string& s);

struct AffiliationInfo {
    std::string name;
    double research_score = 0.0;  // THE research score, 0-100
    long long doc_count = 0;      // Scopus-indexed document count

    bool operator==(const AffiliationInfo&) const = default;
};

struct AuthorInfo {
    std::string name;  // normalized
    long long h_index = 0;
    long long total_citations = 0;
    AffiliationInfo affiliation;

    bool operator==(const AuthorInfo&) const = default;
};

struct VenueInfo {
    std::string name;  // normalized
    VenueKind kind = VenueKind::OTHER;
    std::optional<long long> h_index;  // journals only
    std::optional<double> sjr;         // journals only
    CoreGrade core_grade = CoreGrade::UNRANKED;  // conferences only

    bool operator==(const VenueInfo&) const = default;
};

struct Reference {
    std::string title;  // normalized, nonempty
    std::optional<int> year;
    VenueInfo venue;
    std::optional<long long> citation_count;
    long long in_text_count = 1;  // Citation Effect; 0 = uncited reference

    bool operator==(const Reference&) const = default;
};

struct Section {
    SectionKind name = SectionKind::OTHER;
    std::string text;

    bool operator==(const Section&) const = default;
};

struct ContentCounts {
    long long math_eq = 0;
    long long tables = 0;
    long long figures = 0;

    bool operator==(const ContentCounts&) const = default;
};

struct PaperRecord {
    std::string id;
    std::string journal_id;
    Label label = Label::UNLABELED;
    std::string title;     // normalized
    std::string abstract;  // raw text (feeds RAKE, not dictionary keys)
    std::vector<Section> sections;
    int year = 0;
    std::vector<std::string> keywords;  // normalized, author-given
    std::vector<AuthorInfo> authors;    // first entry = primary author
    ContentCounts counts;
    std::vector<Reference> references;

    bool operator==(const PaperRecord&) const = default;
};

struct Corpus {
    std::string journal_id;
    std::vector<PaperRecord> records;

    bool operator==(const Corpus&) const = default;
};

struct Violation {
    std::string record_id;
    std::string field;
    std::string rule;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;  // suspicious but legal, e.g. post-dated references

    bool ok() const { return violations.empty(); }
};

// Normalizes every string field that participates in cross-paper matching.
void normalize_record(PaperRecord& record);

ValidationReport validate_record(const PaperRecord& record);

// Reads, normalizes and validates a corpus file (schema_version 1).
// Throws io_error / schema_error; any validation violation is a schema_error
// naming the record id and field.
Corpus load_corpus(const std::string& path);

void save_corpus(const Corpus& corpus, const std::string& path);

// Order-preserving split into (FWD, NFWD); throws data_error on UNLABELED.
std::pair<std::vector<PaperRecord>, std::vector<PaperRecord>>
partition_by_label(const Corpus& corpus);

}  // namespace triage
