#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "triage/features.hpp"
#include "triage/forest.hpp"
#include "triage/logistic.hpp"

namespace triage {

struct Metrics {
    // confusion[actual][predicted], index 1 = FWD, 0 = NFWD
    std::array<std::array<long long, 2>, 2> confusion{{{0, 0}, {0, 0}}};
    double precision_fwd = 0, recall_fwd = 0;
    double precision_nfwd = 0, recall_nfwd = 0;
    double f1_fwd = 0, f1_nfwd = 0;
    double accuracy = 0, macro_f1 = 0;

    long long total() const {
        return confusion[0][0] + confusion[0][1] + confusion[1][0] + confusion[1][1];
    }
};

Metrics metrics_from_confusion(const std::array<std::array<long long, 2>, 2>& confusion);

enum class ModelKind { RandomForest, Logistic };

ModelKind model_kind_from_string(const std::string& s);

struct ModelSpec {
    ModelKind kind = ModelKind::RandomForest;
    ForestParams forest;
    LogisticParams logistic;
};

// Stratified k-fold cross-validation with the normalizer refit inside each
// training fold. Fold ids are dealt round-robin over a seed-shuffled order,
// class by class, so per-class fold sizes differ by at most one and
// folds == n degenerates to leave-one-out.
Metrics cross_validate(const Dataset& data, int folds, const ModelSpec& spec, uint64_t seed);

struct AblationResult {
    double full_macro_f1 = 0.0;
    std::map<std::string, double> without_category;  // category tag -> macro F1
};

// Reruns cross-validation with each feature category removed in turn.
// `categories` maps every feature name to its tag; throws data_error if a
// dataset column is missing from the map.
AblationResult ablate(const Dataset& data, const std::map<std::string, std::string>& categories,
                      int folds, const ModelSpec& spec, uint64_t seed);

// The canonical 30-feature category map (SC/AU/AF/CT/VN/CN/TM).
std::map<std::string, std::string> canonical_categories();

// Columns of `data` not in `drop`, preserving order.
Dataset drop_features(const Dataset& data, const std::vector<int>& drop);

}  // namespace triage
