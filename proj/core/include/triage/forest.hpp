#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triage/features.hpp"
#include "triage/normalizer.hpp"

namespace triage {

struct ForestParams {
    int trees = 100;
    int subset = 0;  // features sampled per node; 0 = ceil(sqrt(width))
    int min_leaf = 1;
    int max_depth = 0;  // 0 = unlimited
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    long long count_fwd = 0;
    long long count_nfwd = 0;
};

struct Tree {
    std::vector<TreeNode> nodes;  // node 0 is the root

    int predict(const std::vector<double>& row) const;  // 1 = FWD, 0 = NFWD
};

// Bagged Gini trees over per-node uniform feature subsets. Thresholds are
// training order statistics (x <= t goes left), so predictions are invariant
// under strictly monotone per-feature transforms. Each tree draws from its
// own RNG stream derived from (seed, tree index); training is reproducible
// for any thread count. Ties vote FWD.
struct ForestModel {
    ForestParams params;
    uint64_t seed = 0;
    std::vector<Tree> trees;
    Normalizer normalizer;              // filled by the training CLI, not the learner
    std::vector<std::string> features;  // column names at fit time

    int predict(const std::vector<double>& row) const;
    double score(const std::vector<double>& row) const;  // fraction of FWD votes
};

ForestModel train_random_forest(const std::vector<std::vector<double>>& rows,
                                const std::vector<int>& labels, const ForestParams& params,
                                uint64_t seed);

}  // namespace triage
