#include "triage/forest.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "triage/errors.hpp"

namespace triage {

int Tree::predict(const std::vector<double>& row) const {
    int node = 0;
    while (nodes[node].feature >= 0)
        node = row[nodes[node].feature] <= nodes[node].threshold ? nodes[node].left
                                                                 : nodes[node].right;
    const auto& leaf = nodes[node];
    return leaf.count_fwd >= leaf.count_nfwd ? 1 : 0;
}

int ForestModel::predict(const std::vector<double>& row) const {
    long long fwd = 0;
    for (const auto& tree : trees) fwd += tree.predict(row);
    return 2 * fwd >= static_cast<long long>(trees.size()) ? 1 : 0;
}

double ForestModel::score(const std::vector<double>& row) const {
    long long fwd = 0;
    for (const auto& tree : trees) fwd += tree.predict(row);
    return static_cast<double>(fwd) / static_cast<double>(trees.size());
}

namespace {

struct TreeBuilder {
    const std::vector<std::vector<double>>& rows;
    const std::vector<int>& labels;
    const ForestParams& params;
    int width;
    std::mt19937_64 rng;
    Tree tree;
    std::vector<int> feature_pool;

    TreeBuilder(const std::vector<std::vector<double>>& rows_, const std::vector<int>& labels_,
                const ForestParams& params_, std::mt19937_64 rng_)
        : rows(rows_), labels(labels_), params(params_),
          width(static_cast<int>(rows_.front().size())), rng(rng_) {
        feature_pool.resize(width);
        std::iota(feature_pool.begin(), feature_pool.end(), 0);
    }

    static double gini(long long pos, long long total) {
        if (total == 0) return 0.0;
        const double p = static_cast<double>(pos) / static_cast<double>(total);
        return 2.0 * p * (1.0 - p);
    }

    int build(std::vector<int>& samples, int depth) {
        long long pos = 0;
        for (int s : samples) pos += labels[s];
        const long long n = static_cast<long long>(samples.size());

        const int node_id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        tree.nodes[node_id].count_fwd = pos;
        tree.nodes[node_id].count_nfwd = n - pos;

        const bool pure = pos == 0 || pos == n;
        const bool depth_capped = params.max_depth > 0 && depth >= params.max_depth;
        if (pure || depth_capped || n < 2 * params.min_leaf) return node_id;

        // Uniform feature subset for this node (partial Fisher-Yates).
        const int subset = std::min(params.subset, width);
        for (int i = 0; i < subset; ++i) {
            std::uniform_int_distribution<int> pick(i, width - 1);
            std::swap(feature_pool[i], feature_pool[pick(rng)]);
        }

        int best_feature = -1;
        double best_threshold = 0.0;
        double best_impurity = std::numeric_limits<double>::infinity();

        std::vector<std::pair<double, int>> ordered(samples.size());
        for (int f = 0; f < subset; ++f) {
            const int feature = feature_pool[f];
            for (size_t i = 0; i < samples.size(); ++i)
                ordered[i] = {rows[samples[i]][feature], labels[samples[i]]};
            std::sort(ordered.begin(), ordered.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            long long left_pos = 0;
            for (long long i = 1; i < n; ++i) {
                left_pos += ordered[i - 1].second;
                if (ordered[i].first <= ordered[i - 1].first) continue;  // tie, no cut here
                if (i < params.min_leaf || n - i < params.min_leaf) continue;
                const double impurity =
                    (static_cast<double>(i) * gini(left_pos, i) +
                     static_cast<double>(n - i) * gini(pos - left_pos, n - i)) /
                    static_cast<double>(n);
                if (impurity < best_impurity) {
                    best_impurity = impurity;
                    best_feature = feature;
                    best_threshold = ordered[i - 1].first;  // order statistic, x <= t goes left
                }
            }
        }
        if (best_feature < 0) return node_id;  // every sampled feature constant

        std::vector<int> left, right;
        for (int s : samples) {
            if (rows[s][best_feature] <= best_threshold)
                left.push_back(s);
            else
                right.push_back(s);
        }
        samples.clear();
        samples.shrink_to_fit();

        tree.nodes[node_id].feature = best_feature;
        tree.nodes[node_id].threshold = best_threshold;
        const int left_id = build(left, depth + 1);
        tree.nodes[node_id].left = left_id;
        const int right_id = build(right, depth + 1);
        tree.nodes[node_id].right = right_id;
        return node_id;
    }
};

Tree train_tree(const std::vector<std::vector<double>>& rows, const std::vector<int>& labels,
                const ForestParams& params, uint64_t seed, int tree_index) {
    std::seed_seq seq{static_cast<uint64_t>(seed), static_cast<uint64_t>(tree_index)};
    std::mt19937_64 rng(seq);

    const int n = static_cast<int>(rows.size());
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> bootstrap(n);
    for (int i = 0; i < n; ++i) bootstrap[i] = pick(rng);

    TreeBuilder builder(rows, labels, params, rng);
    builder.build(bootstrap, 0);
    return std::move(builder.tree);
}

}  // namespace

ForestModel train_random_forest(const std::vector<std::vector<double>>& rows,
                                const std::vector<int>& labels, const ForestParams& params,
                                uint64_t seed) {
    if (rows.size() < 2 || rows.size() != labels.size())
        throw data_error("train_random_forest: degenerate training set");
    long long pos = 0;
    for (int y : labels) pos += y;
    if (pos < 2 || static_cast<long long>(labels.size()) - pos < 2)
        throw data_error("train_random_forest: need at least 2 samples per class");

    ForestParams effective = params;
    if (effective.subset <= 0)
        effective.subset =
            static_cast<int>(std::ceil(std::sqrt(static_cast<double>(rows.front().size()))));

    ForestModel model;
    model.params = effective;
    model.seed = seed;
    model.trees.resize(effective.trees);

    const size_t workers = std::max<size_t>(
        1, std::min<size_t>(std::thread::hardware_concurrency(), model.trees.size()));
    std::vector<std::future<void>> futures;
    for (size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (size_t t = w; t < model.trees.size(); t += workers)
                model.trees[t] = train_tree(rows, labels, effective, seed, static_cast<int>(t));
        }));
    }
    for (auto& f : futures) f.get();
    return model;
}

}  // namespace triage
