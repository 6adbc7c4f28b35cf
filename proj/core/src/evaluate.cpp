#include "triage/evaluate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "triage/errors.hpp"

namespace triage {

Metrics metrics_from_confusion(const std::array<std::array<long long, 2>, 2>& confusion) {
    Metrics m;
    m.confusion = confusion;
    const double tp = static_cast<double>(confusion[1][1]);
    const double fn = static_cast<double>(confusion[1][0]);
    const double fp = static_cast<double>(confusion[0][1]);
    const double tn = static_cast<double>(confusion[0][0]);

    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
    m.precision_fwd = ratio(tp, tp + fp);
    m.recall_fwd = ratio(tp, tp + fn);
    m.precision_nfwd = ratio(tn, tn + fn);
    m.recall_nfwd = ratio(tn, tn + fp);
    m.f1_fwd = ratio(2.0 * m.precision_fwd * m.recall_fwd, m.precision_fwd + m.recall_fwd);
    m.f1_nfwd = ratio(2.0 * m.precision_nfwd * m.recall_nfwd, m.precision_nfwd + m.recall_nfwd);
    m.accuracy = ratio(tp + tn, tp + tn + fp + fn);
    m.macro_f1 = 0.5 * (m.f1_fwd + m.f1_nfwd);
    return m;
}

ModelKind model_kind_from_string(const std::string& s) {
    if (s == "rf") return ModelKind::RandomForest;
    if (s == "lr") return ModelKind::Logistic;
    throw data_error("unknown model kind '" + s + "' (expected rf or lr)");
}

Metrics cross_validate(const Dataset& data, int folds, const ModelSpec& spec, uint64_t seed) {
    const int n = static_cast<int>(data.size());
    if (folds < 2) throw data_error("cross_validate: folds must be >= 2");
    if (folds > n)
        throw data_error("cross_validate: " + std::to_string(folds) + " folds exceed " +
                         std::to_string(n) + " samples");

    // Fold assignment: per class, shuffle then deal round-robin with a fold
    // counter shared across classes.
    std::vector<int> fold_of(n, -1);
    std::mt19937_64 rng(seed);
    int counter = 0;
    for (int cls : {1, 0}) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (data.labels[i] == cls) members.push_back(i);
        std::shuffle(members.begin(), members.end(), rng);
        for (int i : members) fold_of[i] = counter++ % folds;
    }

    std::array<std::array<long long, 2>, 2> confusion{{{0, 0}, {0, 0}}};
    for (int fold = 0; fold < folds; ++fold) {
        std::vector<std::vector<double>> train_rows, test_rows;
        std::vector<int> train_labels, test_labels;
        for (int i = 0; i < n; ++i) {
            if (fold_of[i] == fold) {
                test_rows.push_back(data.rows[i]);
                test_labels.push_back(data.labels[i]);
            } else {
                train_rows.push_back(data.rows[i]);
                train_labels.push_back(data.labels[i]);
            }
        }
        if (test_rows.empty()) continue;

        const Normalizer norm = fit_normalizer(train_rows);
        norm.apply_in_place(train_rows);
        norm.apply_in_place(test_rows);

        std::seed_seq seq{seed, static_cast<uint64_t>(fold)};
        std::mt19937_64 fold_rng(seq);
        const uint64_t fold_seed = fold_rng();

        if (spec.kind == ModelKind::RandomForest) {
            const ForestModel model =
                train_random_forest(train_rows, train_labels, spec.forest, fold_seed);
            for (size_t i = 0; i < test_rows.size(); ++i)
                confusion[test_labels[i]][model.predict(test_rows[i])] += 1;
        } else {
            const LogisticModel model = train_logistic(train_rows, train_labels, spec.logistic);
            for (size_t i = 0; i < test_rows.size(); ++i)
                confusion[test_labels[i]][model.predict(test_rows[i])] += 1;
        }
    }
    return metrics_from_confusion(confusion);
}

std::map<std::string, std::string> canonical_categories() {
    std::map<std::string, std::string> map;
    const auto& names = feature_names();
    const auto& cats = feature_categories();
    for (int i = 0; i < kFeatureCount; ++i) map[names[i]] = cats[i];
    return map;
}

Dataset drop_features(const Dataset& data, const std::vector<int>& drop) {
    std::set<int> dropped(drop.begin(), drop.end());
    if (dropped.size() >= data.width())
        throw data_error("drop_features: removal would leave zero features");

    Dataset out;
    out.labels = data.labels;
    for (size_t f = 0; f < data.width(); ++f)
        if (!dropped.count(static_cast<int>(f))) out.names.push_back(data.names[f]);
    out.rows.reserve(data.size());
    for (const auto& row : data.rows) {
        std::vector<double> kept;
        kept.reserve(out.names.size());
        for (size_t f = 0; f < row.size(); ++f)
            if (!dropped.count(static_cast<int>(f))) kept.push_back(row[f]);
        out.rows.push_back(std::move(kept));
    }
    return out;
}

AblationResult ablate(const Dataset& data, const std::map<std::string, std::string>& categories,
                      int folds, const ModelSpec& spec, uint64_t seed) {
    std::set<std::string> tags;
    for (const auto& name : data.names) {
        auto it = categories.find(name);
        if (it == categories.end())
            throw data_error("ablate: feature '" + name + "' missing from the category map");
        tags.insert(it->second);
    }

    AblationResult result;
    result.full_macro_f1 = cross_validate(data, folds, spec, seed).macro_f1;
    for (const auto& tag : tags) {
        std::vector<int> drop;
        for (size_t f = 0; f < data.width(); ++f)
            if (categories.at(data.names[f]) == tag) drop.push_back(static_cast<int>(f));
        const Dataset reduced = drop_features(data, drop);
        result.without_category[tag] = cross_validate(reduced, folds, spec, seed).macro_f1;
    }
    return result;
}

}  // namespace triage
