#pragma once

#include <map>
#include <string>

namespace triage {

// Flat key=value config with optional [section] headers; a sectioned key is
// addressed as "section.key". '#' starts a comment. Recognized keys:
//   mad.tau, rake.top_n, cluster.k_min, cluster.k_max,
//   rf.trees, rf.subset, rf.min_leaf, rf.max_depth,
//   lr.rate, lr.epochs, lr.l2, cv.folds, ig.bins
struct Config {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
};

Config load_config(const std::string& path);

}  // namespace triage
