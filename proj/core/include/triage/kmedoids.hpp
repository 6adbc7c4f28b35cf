#pragma once

#include <cstdint>
#include <vector>

namespace triage {

struct KMedoidsResult {
    std::vector<int> medoids;     // point indices, in medoid-slot order
    std::vector<int> assignment;  // point -> medoid slot
    double cost = 0.0;            // sum of distances to nearest medoid
};

// PAM on a precomputed distance matrix: greedy BUILD, then best-improvement
// SWAP until no single exchange lowers the cost. The seed only shuffles the
// candidate scan order, which settles ties; the result is deterministic.
// Requires 2 <= k <= n-1.
KMedoidsResult kmedoids(const std::vector<std::vector<double>>& matrix, int k, uint64_t seed);

// Mean silhouette of the given assignment; points in singleton clusters
// score 0. Requires at least two nonempty clusters.
double silhouette(const std::vector<std::vector<double>>& matrix,
                  const std::vector<int>& assignment);

}  // namespace triage
