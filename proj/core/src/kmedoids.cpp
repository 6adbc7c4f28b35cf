#include "triage/kmedoids.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "triage/errors.hpp"

namespace triage {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> nearest_assignment(const std::vector<std::vector<double>>& matrix,
                                    const std::vector<int>& medoids) {
    const int n = static_cast<int>(matrix.size());
    std::vector<int> assignment(n, 0);
    for (int p = 0; p < n; ++p) {
        double best = kInf;
        for (int slot = 0; slot < static_cast<int>(medoids.size()); ++slot) {
            const double d = matrix[p][medoids[slot]];
            if (d < best) {
                best = d;
                assignment[p] = slot;
            }
        }
    }
    return assignment;
}

double total_cost(const std::vector<std::vector<double>>& matrix, const std::vector<int>& medoids) {
    double cost = 0.0;
    for (size_t p = 0; p < matrix.size(); ++p) {
        double best = kInf;
        for (int m : medoids) best = std::min(best, matrix[p][m]);
        cost += best;
    }
    return cost;
}

}  // namespace

KMedoidsResult kmedoids(const std::vector<std::vector<double>>& matrix, int k, uint64_t seed) {
    const int n = static_cast<int>(matrix.size());
    if (k < 2 || k > n - 1)
        throw data_error("kmedoids: k=" + std::to_string(k) + " out of range [2, " +
                         std::to_string(n - 1) + "]");

    // Scan order decides ties; first strictly-best candidate wins.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    // BUILD: start from the point with minimal distance sum, then greedily
    // add the point that most reduces the cost.
    std::vector<int> medoids;
    std::vector<bool> is_medoid(n, false);
    std::vector<double> dnearest(n, kInf);

    {
        double best_sum = kInf;
        int best = -1;
        for (int cand : order) {
            double sum = 0.0;
            for (int p = 0; p < n; ++p) sum += matrix[cand][p];
            if (sum < best_sum) {
                best_sum = sum;
                best = cand;
            }
        }
        medoids.push_back(best);
        is_medoid[best] = true;
        for (int p = 0; p < n; ++p) dnearest[p] = matrix[p][best];
    }

    while (static_cast<int>(medoids.size()) < k) {
        double best_gain = 0.0;
        int best = -1;
        for (int cand : order) {
            if (is_medoid[cand]) continue;
            double gain = 0.0;
            for (int p = 0; p < n; ++p)
                if (matrix[p][cand] < dnearest[p]) gain += dnearest[p] - matrix[p][cand];
            if (best == -1 || gain > best_gain) {
                best_gain = gain;
                best = cand;
            }
        }
        medoids.push_back(best);
        is_medoid[best] = true;
        for (int p = 0; p < n; ++p) dnearest[p] = std::min(dnearest[p], matrix[p][best]);
    }

    // SWAP: apply the single medoid/non-medoid exchange with the largest cost
    // reduction until none improves.
    double current = total_cost(matrix, medoids);
    while (true) {
        double best_cost = current;
        int best_slot = -1, best_cand = -1;
        for (int slot = 0; slot < k; ++slot) {
            std::vector<int> trial = medoids;
            for (int cand : order) {
                if (is_medoid[cand]) continue;
                trial[slot] = cand;
                const double cost = total_cost(matrix, trial);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_slot = slot;
                    best_cand = cand;
                }
            }
        }
        if (best_slot == -1) break;
        is_medoid[medoids[best_slot]] = false;
        medoids[best_slot] = best_cand;
        is_medoid[best_cand] = true;
        current = best_cost;
    }

    KMedoidsResult result;
    result.medoids = medoids;
    result.assignment = nearest_assignment(matrix, medoids);
    result.cost = current;
    return result;
}

double silhouette(const std::vector<std::vector<double>>& matrix,
                  const std::vector<int>& assignment) {
    const int n = static_cast<int>(assignment.size());
    std::set<int> labels(assignment.begin(), assignment.end());
    if (labels.size() < 2) throw data_error("silhouette: need at least 2 clusters");

    std::vector<std::vector<int>> clusters;
    std::vector<int> label_index(*labels.rbegin() + 1, -1);
    for (int label : labels) {
        label_index[label] = static_cast<int>(clusters.size());
        clusters.emplace_back();
    }
    for (int p = 0; p < n; ++p) clusters[label_index[assignment[p]]].push_back(p);

    double total = 0.0;
    for (int p = 0; p < n; ++p) {
        const auto& own = clusters[label_index[assignment[p]]];
        if (own.size() == 1) continue;  // singleton convention: s = 0

        double a = 0.0;
        for (int q : own)
            if (q != p) a += matrix[p][q];
        a /= static_cast<double>(own.size() - 1);

        double b = kInf;
        for (const auto& other : clusters) {
            if (&other == &own) continue;
            double mean = 0.0;
            for (int q : other) mean += matrix[p][q];
            mean /= static_cast<double>(other.size());
            b = std::min(b, mean);
        }

        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(n);
}

}  // namespace triage
