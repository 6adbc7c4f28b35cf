#include "triage/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/text.hpp"

namespace triage {

using nlohmann::json;

const char* to_string(Label label) {
    switch (label) {
        case Label::FWD: return "FWD";
        case Label::NFWD: return "NFWD";
        case Label::UNLABELED: return "UNLABELED";
    }
    return "UNLABELED";
}

const char* to_string(SectionKind kind) {
    switch (kind) {
        case SectionKind::INTRO: return "INTRO";
        case SectionKind::BODY: return "BODY";
        case SectionKind::CONCLUSION: return "CONCLUSION";
        case SectionKind::OTHER: return "OTHER";
    }
    return "OTHER";
}

const char* to_string(VenueKind kind) {
    switch (kind) {
        case VenueKind::JOURNAL: return "JOURNAL";
        case VenueKind::CONFERENCE: return "CONFERENCE";
        case VenueKind::OTHER: return "OTHER";
    }
    return "OTHER";
}

const char* to_string(CoreGrade grade) {
    switch (grade) {
        case CoreGrade::A_STAR: return "A*";
        case CoreGrade::A: return "A";
        case CoreGrade::B: return "B";
        case CoreGrade::D: return "D";
        case CoreGrade::UNRANKED: return "UNRANKED";
    }
    return "UNRANKED";
}

Label label_from_string(const std::string& s) {
    if (s == "FWD") return Label::FWD;
    if (s == "NFWD") return Label::NFWD;
    if (s == "UNLABELED") return Label::UNLABELED;
    throw schema_error("unknown label: " + s);
}

SectionKind section_kind_from_string(const std::string& s) {
    if (s == "INTRO") return SectionKind::INTRO;
    if (s == "BODY") return SectionKind::BODY;
    if (s == "CONCLUSION") return SectionKind::CONCLUSION;
    if (s == "OTHER") return SectionKind::OTHER;
    throw schema_error("unknown section kind: " + s);
}

VenueKind venue_kind_from_string(const std::string& s) {
    if (s == "JOURNAL") return VenueKind::JOURNAL;
    if (s == "CONFERENCE") return VenueKind::CONFERENCE;
    if (s == "OTHER") return VenueKind::OTHER;
    throw schema_error("unknown venue kind: " + s);
}

CoreGrade core_grade_from_string(const std::string& s) {
    if (s == "A*") return CoreGrade::A_STAR;
    if (s == "A") return CoreGrade::A;
    if (s == "B") return CoreGrade::B;
    if (s == "D") return CoreGrade::D;
    if (s == "UNRANKED") return CoreGrade::UNRANKED;
    throw schema_error("unknown CORE grade: " + s);
}

void normalize_record(PaperRecord& record) {
    record.title = normalize_text(record.title);
    for (auto& kw : record.keywords) kw = normalize_text(kw);
    for (auto& author : record.authors) author.name = normalize_text(author.name);
    for (auto& ref : record.references) {
        ref.title = normalize_text(ref.title);
        ref.venue.name = normalize_text(ref.venue.name);
    }
}

ValidationReport validate_record(const PaperRecord& record) {
    ValidationReport report;
    auto violate = [&](const std::string& field, const std::string& rule) {
        report.violations.push_back({record.id, field, rule});
    };
    auto warn = [&](const std::string& field, const std::string& rule) {
        report.warnings.push_back({record.id, field, rule});
    };

    if (record.id.empty()) violate("id", "must be nonempty");
    if (record.year < 1900 || record.year > 2100) violate("year", "must lie in [1900, 2100]");
    if (record.authors.empty()) violate("authors", "must be nonempty");

    for (const auto& kw : record.keywords) {
        if (kw != normalize_text(kw)) violate("keywords", "keyword not normalized: '" + kw + "'");
    }
    if (record.title != normalize_text(record.title)) violate("title", "title not normalized");

    for (const auto& author : record.authors) {
        if (author.h_index < 0) violate("h_index", "must be non-negative");
        if (author.total_citations < 0) violate("total_citations", "must be non-negative");
        const auto& aff = author.affiliation;
        if (aff.research_score < 0.0 || aff.research_score > 100.0)
            violate("research_score", "must lie in [0, 100]");
        if (aff.doc_count < 0) violate("doc_count", "must be non-negative");
    }

    if (record.counts.math_eq < 0) violate("math_eq", "must be non-negative");
    if (record.counts.tables < 0) violate("tables", "must be non-negative");
    if (record.counts.figures < 0) violate("figures", "must be non-negative");

    for (size_t i = 0; i < record.references.size(); ++i) {
        const auto& ref = record.references[i];
        const std::string where = "references[" + std::to_string(i) + "]";
        if (ref.title.empty()) violate(where + ".title", "normalized title must be nonempty");
        if (ref.in_text_count < 0) violate(where + ".in_text_count", "must be non-negative");
        if (ref.citation_count && *ref.citation_count < 0)
            violate(where + ".citation_count", "must be non-negative");
        switch (ref.venue.kind) {
            case VenueKind::JOURNAL:
                if (ref.venue.core_grade != CoreGrade::UNRANKED)
                    violate(where + ".venue", "journal venue cannot carry a CORE grade");
                break;
            case VenueKind::CONFERENCE:
                if (ref.venue.h_index || ref.venue.sjr)
                    violate(where + ".venue", "conference venue cannot carry h-index or SJR");
                break;
            case VenueKind::OTHER:
                if (ref.venue.h_index || ref.venue.sjr || ref.venue.core_grade != CoreGrade::UNRANKED)
                    violate(where + ".venue", "venue of kind OTHER cannot carry scores");
                break;
        }
        if (ref.year && *ref.year > record.year)
            warn(where + ".year", "reference post-dates the paper (in-press citation?)");
    }

    return report;
}

namespace {

json require_field(const json& obj, const std::string& key, const std::string& context) {
    auto it = obj.find(key);
    if (it == obj.end()) throw schema_error(context + ": missing field '" + key + "'");
    return *it;
}

template <typename T>
std::optional<T> optional_field(const json& obj, const std::string& key, const std::string& context) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw schema_error(context + ": field '" + key + "' has wrong type");
    }
}

template <typename T>
T typed_field(const json& obj, const std::string& key, const std::string& context) {
    json v = require_field(obj, key, context);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw schema_error(context + ": field '" + key + "' has wrong type");
    }
}

PaperRecord record_from_json(const json& j) {
    std::string id = typed_field<std::string>(j, "id", "record");
    const std::string ctx = "record '" + id + "'";

    PaperRecord rec;
    rec.id = id;
    rec.journal_id = typed_field<std::string>(j, "journal_id", ctx);
    rec.label = label_from_string(typed_field<std::string>(j, "label", ctx));
    rec.title = typed_field<std::string>(j, "title", ctx);
    rec.abstract = typed_field<std::string>(j, "abstract", ctx);
    rec.year = typed_field<int>(j, "year", ctx);

    for (const auto& s : require_field(j, "sections", ctx)) {
        Section sec;
        sec.name = section_kind_from_string(typed_field<std::string>(s, "name", ctx + " section"));
        sec.text = typed_field<std::string>(s, "text", ctx + " section");
        rec.sections.push_back(std::move(sec));
    }

    rec.keywords = typed_field<std::vector<std::string>>(j, "keywords", ctx);

    for (const auto& a : require_field(j, "authors", ctx)) {
        AuthorInfo author;
        author.name = typed_field<std::string>(a, "name", ctx + " author");
        author.h_index = typed_field<long long>(a, "h_index", ctx + " author");
        author.total_citations = typed_field<long long>(a, "total_citations", ctx + " author");
        auto aff = a.find("affiliation");
        if (aff != a.end() && !aff->is_null()) {
            author.affiliation.name = typed_field<std::string>(*aff, "name", ctx + " affiliation");
            author.affiliation.research_score =
                typed_field<double>(*aff, "research_score", ctx + " affiliation");
            author.affiliation.doc_count =
                typed_field<long long>(*aff, "doc_count", ctx + " affiliation");
        }
        rec.authors.push_back(std::move(author));
    }

    json counts = require_field(j, "counts", ctx);
    rec.counts.math_eq = typed_field<long long>(counts, "math_eq", ctx + " counts");
    rec.counts.tables = typed_field<long long>(counts, "tables", ctx + " counts");
    rec.counts.figures = typed_field<long long>(counts, "figures", ctx + " counts");

    for (const auto& r : require_field(j, "references", ctx)) {
        Reference ref;
        ref.title = typed_field<std::string>(r, "title", ctx + " reference");
        ref.year = optional_field<int>(r, "year", ctx + " reference");
        ref.citation_count = optional_field<long long>(r, "citation_count", ctx + " reference");
        // A bibliography entry is cited at least once unless stated otherwise.
        ref.in_text_count = optional_field<long long>(r, "in_text_count", ctx + " reference").value_or(1);

        json v = require_field(r, "venue", ctx + " reference");
        ref.venue.name = typed_field<std::string>(v, "name", ctx + " venue");
        ref.venue.kind = venue_kind_from_string(typed_field<std::string>(v, "kind", ctx + " venue"));
        ref.venue.h_index = optional_field<long long>(v, "h_index", ctx + " venue");
        ref.venue.sjr = optional_field<double>(v, "sjr", ctx + " venue");
        auto grade = optional_field<std::string>(v, "core_grade", ctx + " venue");
        ref.venue.core_grade = grade ? core_grade_from_string(*grade) : CoreGrade::UNRANKED;

        rec.references.push_back(std::move(ref));
    }
    return rec;
}

json record_to_json(const PaperRecord& rec) {
    json j;
    j["id"] = rec.id;
    j["journal_id"] = rec.journal_id;
    j["label"] = to_string(rec.label);
    j["title"] = rec.title;
    j["abstract"] = rec.abstract;
    j["year"] = rec.year;

    j["sections"] = json::array();
    for (const auto& s : rec.sections)
        j["sections"].push_back({{"name", to_string(s.name)}, {"text", s.text}});

    j["keywords"] = rec.keywords;

    j["authors"] = json::array();
    for (const auto& a : rec.authors) {
        json aj;
        aj["name"] = a.name;
        aj["h_index"] = a.h_index;
        aj["total_citations"] = a.total_citations;
        aj["affiliation"] = {{"name", a.affiliation.name},
                             {"research_score", a.affiliation.research_score},
                             {"doc_count", a.affiliation.doc_count}};
        j["authors"].push_back(std::move(aj));
    }

    j["counts"] = {{"math_eq", rec.counts.math_eq},
                   {"tables", rec.counts.tables},
                   {"figures", rec.counts.figures}};

    j["references"] = json::array();
    for (const auto& r : rec.references) {
        json rj;
        rj["title"] = r.title;
        rj["year"] = r.year ? json(*r.year) : json(nullptr);
        rj["citation_count"] = r.citation_count ? json(*r.citation_count) : json(nullptr);
        rj["in_text_count"] = r.in_text_count;
        json vj;
        vj["name"] = r.venue.name;
        vj["kind"] = to_string(r.venue.kind);
        vj["h_index"] = r.venue.h_index ? json(*r.venue.h_index) : json(nullptr);
        vj["sjr"] = r.venue.sjr ? json(*r.venue.sjr) : json(nullptr);
        vj["core_grade"] = to_string(r.venue.core_grade);
        rj["venue"] = std::move(vj);
        j["references"].push_back(std::move(rj));
    }
    return j;
}

}  // namespace

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open corpus file: " + path);

    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw schema_error("corpus file " + path + ": " + e.what());
    }

    if (!j.contains("schema_version") || j["schema_version"] != 1)
        throw schema_error("corpus file " + path + ": schema_version 1 required");

    Corpus corpus;
    corpus.journal_id = typed_field<std::string>(j, "journal_id", "corpus");

    std::unordered_set<std::string> seen_ids;
    for (const auto& rj : require_field(j, "records", "corpus")) {
        PaperRecord rec = record_from_json(rj);
        if (!seen_ids.insert(rec.id).second)
            throw schema_error("corpus file " + path + ": duplicate record id '" + rec.id + "'");
        if (rec.journal_id != corpus.journal_id)
            throw schema_error("record '" + rec.id + "': journal_id '" + rec.journal_id +
                               "' does not match corpus journal_id '" + corpus.journal_id + "'");
        normalize_record(rec);
        ValidationReport report = validate_record(rec);
        if (!report.ok()) {
            const auto& v = report.violations.front();
            throw schema_error("record '" + v.record_id + "', field " + v.field + ": " + v.rule);
        }
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    json j;
    j["schema_version"] = 1;
    j["journal_id"] = corpus.journal_id;
    j["records"] = json::array();
    for (const auto& rec : corpus.records) j["records"].push_back(record_to_json(rec));

    std::ofstream out(path);
    if (!out) throw io_error("cannot write corpus file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("short write on corpus file: " + path);
}

std::pair<std::vector<PaperRecord>, std::vector<PaperRecord>>
partition_by_label(const Corpus& corpus) {
    std::vector<PaperRecord> fwd, nfwd;
    for (const auto& rec : corpus.records) {
        switch (rec.label) {
            case Label::FWD: fwd.push_back(rec); break;
            case Label::NFWD: nfwd.push_back(rec); break;
            case Label::UNLABELED:
                throw data_error("record '" + rec.id + "' is UNLABELED; cannot partition");
        }
    }
    return {std::move(fwd), std::move(nfwd)};
}

}  // namespace triage
