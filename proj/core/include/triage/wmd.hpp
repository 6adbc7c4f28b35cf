#pragma once

#include <string>
#include <vector>

namespace triage {

struct BagItem {
    std::vector<double> vector;
    double weight = 0.0;  // > 0; weights of a bag sum to 1
};

// A document as a weighted point set in embedding space.
struct DocBag {
    std::string paper_id;
    std::vector<BagItem> items;

    int dimension() const { return items.empty() ? 0 : static_cast<int>(items.front().vector.size()); }
};

double euclidean(const std::vector<double>& a, const std::vector<double>& b);

// Word Mover's Distance: minimum-cost transport between the two bags under
// Euclidean ground distance, solved to optimality. Throws data_error on a
// dimension mismatch or an empty bag.
double wmd(const DocBag& a, const DocBag& b);

// M[i][j] = wmd(bags[i], bags[j]); symmetric, zero diagonal. Entries are
// computed in parallel. Needs at least 2 bags.
std::vector<std::vector<double>> distance_matrix(const std::vector<DocBag>& bags);

// Exact solver for the balanced transportation problem: supplies and demands
// sum to the same total, cost[i][j] >= 0. Returns the optimal total cost.
double solve_transport(const std::vector<double>& supply, const std::vector<double>& demand,
                       const std::vector<std::vector<double>>& cost);

}  // namespace triage
