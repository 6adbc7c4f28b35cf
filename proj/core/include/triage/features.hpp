#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "triage/cluster.hpp"
#include "triage/corpus.hpp"
#include "triage/dictionary.hpp"
#include "triage/embedding.hpp"

namespace triage {

inline constexpr int kFeatureCount = 30;

// Canonical feature order; CSV headers and every matrix column follow it.
const std::array<std::string, kFeatureCount>& feature_names();

// Index of a canonical feature name; throws data_error on unknown names.
int feature_index(const std::string& name);

// Ablation categories: SC scope, AU author, AF affiliation, CT citation,
// VN venue, CN content, TM temporal.
const std::vector<std::string>& category_names();
const std::array<std::string, kFeatureCount>& feature_categories();

struct FeatureVector {
    std::string paper_id;
    std::array<double, kFeatureCount> values{};
    Label label = Label::UNLABELED;
};

struct FeaturizeOptions {
    double mad_tau = 2.5;
    int rake_top_n = 30;
};

// Full 30-feature extraction for one paper against fitted per-journal
// artifacts. An out-of-vocabulary paper cannot be placed by the cluster
// model; its cluster distance falls back to the model's worst training
// distance and the fallback is reported through `warnings`.
FeatureVector featurize(const PaperRecord& paper, const JournalDictionary& dict,
                        const ClusterModel& cmodel, const EmbeddingTable& emb,
                        const std::set<std::string>& stopwords,
                        const FeaturizeOptions& options = {},
                        std::vector<std::string>* warnings = nullptr);

// Labeled feature matrix with named columns; the learning routines accept
// column subsets of the canonical 30 (ablation drops columns).
struct Dataset {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;  // 1 = FWD, 0 = NFWD

    size_t width() const { return names.size(); }
    size_t size() const { return rows.size(); }
};

Dataset to_dataset(const std::vector<FeatureVector>& vectors);

void save_matrix_csv(const std::vector<FeatureVector>& vectors, const std::string& path);
Dataset load_matrix_csv(const std::string& path);

}  // namespace triage
