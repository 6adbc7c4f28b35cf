#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "triage/corpus.hpp"
#include "triage/embedding.hpp"
#include "triage/wmd.hpp"

namespace triage {

// Fitted sub-domain clusters over the accepted corpus. Scoring a candidate
// takes its WMD to each medoid minus that cluster's radius and keeps the
// minimum; negative means inside a cluster.
struct ClusterModel {
    int k = 0;
    std::vector<DocBag> medoids;
    std::map<std::string, int> assignment;  // training paper id -> cluster
    std::vector<double> radii;              // median member-to-medoid distance
    std::string distance_fn = "wmd";
    // Largest boundary distance seen among the training bags; featurize uses
    // it as the fallback for out-of-vocabulary candidates.
    double max_train_distance = 0.0;
};

// Top-N RAKE phrases of title + abstract + INTRO + CONCLUSION, each embedded
// as the mean of its in-vocabulary token vectors, uniform weights over the
// surviving phrases. Throws oov_document_error when nothing survives.
DocBag doc_bag(const PaperRecord& paper, const EmbeddingTable& emb,
               const std::set<std::string>& stopwords, int top_n = 30);

struct FitReport {
    std::vector<std::string> skipped_oov;  // paper ids dropped for having no in-vocab phrase
    std::map<int, double> silhouette_by_k;
};

// Bags for all accepted papers, K chosen by silhouette over [k_min, k_max]
// (ties to the smallest K), per-cluster median radii.
ClusterModel fit_cluster_model(const Corpus& accepted, const EmbeddingTable& emb,
                               const std::set<std::string>& stopwords, int k_min, int k_max,
                               uint64_t seed, int top_n = 30, FitReport* report = nullptr);

// min over clusters of wmd(medoid, candidate) - radius.
double cluster_distance(const PaperRecord& paper, const ClusterModel& model,
                        const EmbeddingTable& emb, const std::set<std::string>& stopwords,
                        int top_n = 30);

double cluster_distance(const DocBag& bag, const ClusterModel& model);

void save_cluster_model(const ClusterModel& model, const std::string& path);
ClusterModel load_cluster_model(const std::string& path);

}  // namespace triage
