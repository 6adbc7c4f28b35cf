#include "triage/features.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "triage/errors.hpp"
#include "triage/quality.hpp"
#include "triage/scope.hpp"

namespace triage {

const std::array<std::string, kFeatureCount>& feature_names() {
    static const std::array<std::string, kFeatureCount> names = {
        "Keyword Match", "Cluster Distance", "Title Scope",   "Conference Scope",
        "Journal Scope", "ADPF",             "Auth-P-h",      "Auth-avg-h",
        "Auth-max-h",    "Auth-P-cit",       "Auth-avg-cit",  "Auth-max-cit",
        "Affl-P-rs",     "Affl-avg-rs",      "Affl-P-doc",    "Affl-avg-doc",
        "Affl-max-doc",  "Affl-max-rs",      "W-Imp-cit-avg", "Cit-avg",
        "Temp-avg",      "Temp-min",         "Temp-5",        "Venue-havg-j",
        "Venue-sjravg-j","Venue-avg-m",      "Uncited-ref",   "Math-eq",
        "Table-c",       "Fig-c"};
    return names;
}

int feature_index(const std::string& name) {
    const auto& names = feature_names();
    for (int i = 0; i < kFeatureCount; ++i)
        if (names[i] == name) return i;
    throw data_error("unknown feature name: '" + name + "'");
}

const std::vector<std::string>& category_names() {
    static const std::vector<std::string> names = {"SC", "AU", "AF", "CT", "VN", "CN", "TM"};
    return names;
}

const std::array<std::string, kFeatureCount>& feature_categories() {
    static const std::array<std::string, kFeatureCount> cats = {
        "SC", "SC", "SC", "SC", "SC", "SC",  // scope
        "AU", "AU", "AU", "AU", "AU", "AU",  // author
        "AF", "AF", "AF", "AF", "AF", "AF",  // affiliation
        "CT", "CT",                          // weighted/plain citation averages
        "TM", "TM", "TM",                    // temporal
        "VN", "VN", "VN",                    // venue
        "CT",                                // uncited references
        "CN", "CN", "CN"};                   // content counts
    return cats;
}

FeatureVector featurize(const PaperRecord& paper, const JournalDictionary& dict,
                        const ClusterModel& cmodel, const EmbeddingTable& emb,
                        const std::set<std::string>& stopwords, const FeaturizeOptions& options,
                        std::vector<std::string>* warnings) {
    if (paper.journal_id != dict.journal_id)
        throw data_error("record '" + paper.id + "': journal '" + paper.journal_id +
                         "' does not match dictionary journal '" + dict.journal_id + "'");

    FeatureVector fv;
    fv.paper_id = paper.id;
    fv.label = paper.label;

    ScopeFeatures sc;
    QualityFeatures q;
    double cluster_d;
    try {
        sc = scope_features(paper, dict);
        q = quality_features(paper, options.mad_tau);
        try {
            cluster_d = cluster_distance(paper, cmodel, emb, stopwords, options.rake_top_n);
        } catch (const oov_document_error&) {
            cluster_d = cmodel.max_train_distance;
            if (warnings)
                warnings->push_back("record '" + paper.id +
                                    "': out of vocabulary, cluster distance set to training max");
        }
    } catch (const oov_document_error&) {
        throw;
    } catch (const error& e) {
        throw data_error("record '" + paper.id + "': " + e.what());
    }

    fv.values = {sc.keyword_match,
                 cluster_d,
                 sc.title_scope,
                 sc.conference_scope,
                 sc.journal_scope,
                 static_cast<double>(sc.adpf),
                 q.author.p_h,
                 q.author.avg_h,
                 q.author.max_h,
                 q.author.p_cit,
                 q.author.avg_cit,
                 q.author.max_cit,
                 q.affiliation.p_rs,
                 q.affiliation.avg_rs,
                 q.affiliation.p_doc,
                 q.affiliation.avg_doc,
                 q.affiliation.max_doc,
                 q.affiliation.max_rs,
                 q.citation.w_imp_cit_avg,
                 q.citation.cit_avg,
                 q.temporal.temp_avg,
                 q.temporal.temp_min,
                 static_cast<double>(q.temporal.temp_5),
                 q.venue.havg_j,
                 q.venue.sjravg_j,
                 q.venue.avg_m,
                 static_cast<double>(q.citation.uncited_ref),
                 static_cast<double>(q.math_eq),
                 static_cast<double>(q.table_c),
                 static_cast<double>(q.fig_c)};
    return fv;
}

Dataset to_dataset(const std::vector<FeatureVector>& vectors) {
    Dataset data;
    data.names.assign(feature_names().begin(), feature_names().end());
    for (const auto& fv : vectors) {
        if (fv.label == Label::UNLABELED)
            throw data_error("record '" + fv.paper_id + "' is UNLABELED; matrix rows need labels");
        data.rows.emplace_back(fv.values.begin(), fv.values.end());
        data.labels.push_back(fv.label == Label::FWD ? 1 : 0);
    }
    return data;
}

namespace {

std::string format_double(double v) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

void save_matrix_csv(const std::vector<FeatureVector>& vectors, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write matrix file: " + path);

    const auto& names = feature_names();
    for (const auto& n : names) out << n << ',';
    out << "label\n";
    for (const auto& fv : vectors) {
        for (double v : fv.values) out << format_double(v) << ',';
        out << to_string(fv.label) << '\n';
    }
    if (!out) throw io_error("short write on matrix file: " + path);
}

Dataset load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open matrix file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw schema_error("matrix file " + path + ": empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto split = [](const std::string& s) {
        std::vector<std::string> fields;
        std::stringstream ss(s);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        return fields;
    };

    const auto header = split(line);
    const auto& names = feature_names();
    if (header.size() != kFeatureCount + 1 || header.back() != "label")
        throw schema_error("matrix file " + path + ": header must be the 30 canonical features + label");
    for (int i = 0; i < kFeatureCount; ++i)
        if (header[i] != names[i])
            throw schema_error("matrix file " + path + ": column " + std::to_string(i) +
                               " is '" + header[i] + "', expected '" + names[i] + "'");

    Dataset data;
    data.names.assign(names.begin(), names.end());
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != kFeatureCount + 1)
            throw schema_error("matrix file " + path + " line " + std::to_string(line_no) +
                               ": expected " + std::to_string(kFeatureCount + 1) + " fields");
        std::vector<double> row(kFeatureCount);
        for (int i = 0; i < kFeatureCount; ++i) {
            const std::string& f = fields[i];
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), row[i]);
            if (ec != std::errc() || ptr != f.data() + f.size())
                throw schema_error("matrix file " + path + " line " + std::to_string(line_no) +
                                   ": bad number '" + f + "'");
        }
        data.rows.push_back(std::move(row));
        const Label label = label_from_string(fields.back());
        if (label == Label::UNLABELED)
            throw schema_error("matrix file " + path + " line " + std::to_string(line_no) +
                               ": rows must be labeled FWD or NFWD");
        data.labels.push_back(label == Label::FWD ? 1 : 0);
    }
    return data;
}

}  // namespace triage
