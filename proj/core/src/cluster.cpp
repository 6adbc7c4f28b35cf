#include "triage/cluster.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "triage/errors.hpp"
#include "triage/kmedoids.hpp"
#include "triage/rake.hpp"
#include "triage/text.hpp"

namespace triage {

using nlohmann::json;

DocBag doc_bag(const PaperRecord& paper, const EmbeddingTable& emb,
               const std::set<std::string>& stopwords, int top_n) {
    // " . " keeps phrases from spanning the joined parts.
    std::string text = paper.title;
    text += " . ";
    text += paper.abstract;
    for (const auto& sec : paper.sections) {
        if (sec.name == SectionKind::INTRO || sec.name == SectionKind::CONCLUSION) {
            text += " . ";
            text += sec.text;
        }
    }

    DocBag bag;
    bag.paper_id = paper.id;
    for (const auto& phrase : rake_keywords(text, stopwords, top_n)) {
        std::vector<double> sum(static_cast<size_t>(emb.dimension), 0.0);
        int found = 0;
        for (const auto& token : split_tokens(phrase.text)) {
            auto it = emb.vectors.find(token);
            if (it == emb.vectors.end()) continue;
            for (size_t d = 0; d < sum.size(); ++d) sum[d] += it->second[d];
            ++found;
        }
        if (found == 0) continue;  // fully out-of-vocabulary phrase
        for (double& v : sum) v /= static_cast<double>(found);
        bag.items.push_back({std::move(sum), 0.0});
    }

    if (bag.items.empty())
        throw oov_document_error("record '" + paper.id +
                                 "': no phrase has an in-vocabulary token");
    const double w = 1.0 / static_cast<double>(bag.items.size());
    for (auto& item : bag.items) item.weight = w;
    return bag;
}

double cluster_distance(const DocBag& bag, const ClusterModel& model) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < model.k; ++i)
        best = std::min(best, wmd(model.medoids[i], bag) - model.radii[i]);
    return best;
}

double cluster_distance(const PaperRecord& paper, const ClusterModel& model,
                        const EmbeddingTable& emb, const std::set<std::string>& stopwords,
                        int top_n) {
    return cluster_distance(doc_bag(paper, emb, stopwords, top_n), model);
}

ClusterModel fit_cluster_model(const Corpus& accepted, const EmbeddingTable& emb,
                               const std::set<std::string>& stopwords, int k_min, int k_max,
                               uint64_t seed, int top_n, FitReport* report) {
    if (k_min < 2 || k_max < k_min)
        throw data_error("fit_cluster_model: bad k range [" + std::to_string(k_min) + ", " +
                         std::to_string(k_max) + "]");

    std::vector<DocBag> bags;
    bags.reserve(accepted.records.size());
    for (const auto& rec : accepted.records) {
        try {
            bags.push_back(doc_bag(rec, emb, stopwords, top_n));
        } catch (const oov_document_error&) {
            if (report) report->skipped_oov.push_back(rec.id);
        }
    }
    if (static_cast<int>(bags.size()) < k_max + 1)
        throw data_error("fit_cluster_model: only " + std::to_string(bags.size()) +
                         " usable documents, need at least " + std::to_string(k_max + 1));

    const auto matrix = distance_matrix(bags);

    int best_k = 0;
    double best_sil = -2.0;
    KMedoidsResult best_result;
    for (int k = k_min; k <= k_max; ++k) {
        KMedoidsResult result = kmedoids(matrix, k, seed);
        const double sil = silhouette(matrix, result.assignment);
        if (report) report->silhouette_by_k[k] = sil;
        if (sil > best_sil) {  // ties keep the smaller k
            best_sil = sil;
            best_k = k;
            best_result = std::move(result);
        }
    }

    ClusterModel model;
    model.k = best_k;
    for (int m : best_result.medoids) model.medoids.push_back(bags[m]);
    for (size_t p = 0; p < bags.size(); ++p)
        model.assignment[bags[p].paper_id] = best_result.assignment[p];

    model.radii.assign(best_k, 0.0);
    for (int c = 0; c < best_k; ++c) {
        std::vector<double> dists;
        for (size_t p = 0; p < bags.size(); ++p)
            if (best_result.assignment[p] == c) dists.push_back(matrix[p][best_result.medoids[c]]);
        std::sort(dists.begin(), dists.end());
        const size_t n = dists.size();
        model.radii[c] = n % 2 == 1 ? dists[n / 2] : 0.5 * (dists[n / 2 - 1] + dists[n / 2]);
    }

    for (size_t p = 0; p < bags.size(); ++p) {
        double d = std::numeric_limits<double>::infinity();
        for (int c = 0; c < best_k; ++c)
            d = std::min(d, matrix[p][best_result.medoids[c]] - model.radii[c]);
        model.max_train_distance = std::max(model.max_train_distance, d);
    }
    return model;
}

void save_cluster_model(const ClusterModel& model, const std::string& path) {
    json j;
    j["schema_version"] = 1;
    j["k"] = model.k;
    j["distance_fn"] = model.distance_fn;
    j["radii"] = model.radii;
    j["max_train_distance"] = model.max_train_distance;
    j["assignment"] = model.assignment;
    j["medoids"] = json::array();
    for (const auto& bag : model.medoids) {
        json bj;
        bj["paper_id"] = bag.paper_id;
        bj["items"] = json::array();
        for (const auto& item : bag.items)
            bj["items"].push_back({{"vector", item.vector}, {"weight", item.weight}});
        j["medoids"].push_back(std::move(bj));
    }

    std::ofstream out(path);
    if (!out) throw io_error("cannot write cluster model: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("short write on cluster model: " + path);
}

ClusterModel load_cluster_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open cluster model: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw schema_error("cluster model " + path + ": " + e.what());
    }
    if (!j.contains("schema_version") || j["schema_version"] != 1)
        throw schema_error("cluster model " + path + ": schema_version 1 required");

    ClusterModel model;
    try {
        model.k = j.at("k").get<int>();
        model.distance_fn = j.at("distance_fn").get<std::string>();
        model.radii = j.at("radii").get<std::vector<double>>();
        model.max_train_distance = j.at("max_train_distance").get<double>();
        model.assignment = j.at("assignment").get<std::map<std::string, int>>();
        for (const auto& bj : j.at("medoids")) {
            DocBag bag;
            bag.paper_id = bj.at("paper_id").get<std::string>();
            for (const auto& ij : bj.at("items"))
                bag.items.push_back(
                    {ij.at("vector").get<std::vector<double>>(), ij.at("weight").get<double>()});
            model.medoids.push_back(std::move(bag));
        }
    } catch (const json::exception& e) {
        throw schema_error("cluster model " + path + ": " + e.what());
    }
    if (static_cast<int>(model.medoids.size()) != model.k ||
        static_cast<int>(model.radii.size()) != model.k)
        throw schema_error("cluster model " + path + ": k does not match medoids/radii");
    return model;
}

}  // namespace triage
