#pragma once

// Brute-force reference implementations the real code is checked against.
// Everything here favours obviousness over speed and must stay independent
// of the library's implementation paths.

#include <optional>
#include <vector>

#include "triage/corpus.hpp"
#include "triage/wmd.hpp"

namespace oracle {

// Min over all perfect matchings of the mean pair distance; valid for two
// equal-size uniform-weight bags (n <= 8 or so).
double matching_wmd(const triage::DocBag& a, const triage::DocBag& b);

// Best medoid set by trying every k-subset; returns the minimal total cost.
double exhaustive_kmedoids_cost(const std::vector<std::vector<double>>& matrix, int k);

// True iff no single medoid/non-medoid exchange lowers the cost.
bool swap_local_optimal(const std::vector<std::vector<double>>& matrix,
                        const std::vector<int>& medoids);

// Plain-loop silhouette.
double naive_silhouette(const std::vector<std::vector<double>>& matrix,
                        const std::vector<int>& assignment);

// Naive re-run of the MAD impact filter; returns indices into `paper.references`.
std::vector<size_t> naive_impact_indices(const triage::PaperRecord& paper, double tau);

// Entropy-over-explicit-bins information gain (bits), recomputing the
// equal-frequency cuts from their definition.
double naive_info_gain(const std::vector<double>& values, const std::vector<int>& labels,
                       int bins);

}  // namespace oracle
