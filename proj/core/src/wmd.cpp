#include "triage/wmd.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <queue>
#include <thread>

#include "triage/errors.hpp"

namespace triage {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double sq = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Min-cost flow on the bipartite transportation graph, successive shortest
// paths with Johnson potentials. Costs are non-negative, so zero initial
// potentials are valid; every augmentation saturates a supply or demand
// edge, so the loop runs at most n+m times.
struct TransportSolver {
    struct Edge {
        int to;
        double cap;
        double cost;
        int rev;
    };

    std::vector<std::vector<Edge>> graph;

    void add_edge(int from, int to, double cap, double cost) {
        graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
        graph[to].push_back({from, 0.0, -cost, static_cast<int>(graph[from].size()) - 1});
    }

    double solve(const std::vector<double>& supply, const std::vector<double>& demand,
                 const std::vector<std::vector<double>>& cost) {
        const int n = static_cast<int>(supply.size());
        const int m = static_cast<int>(demand.size());
        const int source = n + m;
        const int sink = n + m + 1;
        const int nodes = n + m + 2;
        graph.assign(nodes, {});

        for (int i = 0; i < n; ++i) add_edge(source, i, supply[i], 0.0);
        for (int j = 0; j < m; ++j) add_edge(n + j, sink, demand[j], 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) add_edge(i, n + j, kInf, cost[i][j]);

        std::vector<double> potential(nodes, 0.0);
        std::vector<double> dist(nodes);
        std::vector<int> prev_node(nodes), prev_edge(nodes);
        double total_cost = 0.0;

        while (true) {
            std::fill(dist.begin(), dist.end(), kInf);
            dist[source] = 0.0;
            using Item = std::pair<double, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
            queue.push({0.0, source});
            while (!queue.empty()) {
                auto [d, u] = queue.top();
                queue.pop();
                if (d > dist[u]) continue;
                for (int e = 0; e < static_cast<int>(graph[u].size()); ++e) {
                    const Edge& edge = graph[u][e];
                    if (edge.cap <= 0.0) continue;
                    // Rounding can push a reduced cost a few ulps below zero.
                    const double reduced =
                        std::max(0.0, edge.cost + potential[u] - potential[edge.to]);
                    if (dist[u] + reduced < dist[edge.to]) {
                        dist[edge.to] = dist[u] + reduced;
                        prev_node[edge.to] = u;
                        prev_edge[edge.to] = e;
                        queue.push({dist[edge.to], edge.to});
                    }
                }
            }
            if (dist[sink] == kInf) break;

            for (int v = 0; v < nodes; ++v)
                if (dist[v] < kInf) potential[v] += dist[v];

            double bottleneck = kInf;
            for (int v = sink; v != source; v = prev_node[v])
                bottleneck = std::min(bottleneck, graph[prev_node[v]][prev_edge[v]].cap);
            for (int v = sink; v != source; v = prev_node[v]) {
                Edge& edge = graph[prev_node[v]][prev_edge[v]];
                edge.cap -= bottleneck;
                graph[v][edge.rev].cap += bottleneck;
                total_cost += bottleneck * edge.cost;
            }
        }
        return total_cost;
    }
};

}  // namespace

double solve_transport(const std::vector<double>& supply, const std::vector<double>& demand,
                       const std::vector<std::vector<double>>& cost) {
    TransportSolver solver;
    return solver.solve(supply, demand, cost);
}

double wmd(const DocBag& a, const DocBag& b) {
    if (a.items.empty() || b.items.empty())
        throw data_error("wmd: empty document bag ('" + a.paper_id + "' vs '" + b.paper_id + "')");
    if (a.dimension() != b.dimension())
        throw data_error("wmd: dimension mismatch " + std::to_string(a.dimension()) + " vs " +
                         std::to_string(b.dimension()));

    std::vector<double> supply, demand;
    supply.reserve(a.items.size());
    demand.reserve(b.items.size());
    for (const auto& item : a.items) supply.push_back(item.weight);
    for (const auto& item : b.items) demand.push_back(item.weight);

    std::vector<std::vector<double>> cost(a.items.size(), std::vector<double>(b.items.size()));
    for (size_t i = 0; i < a.items.size(); ++i)
        for (size_t j = 0; j < b.items.size(); ++j)
            cost[i][j] = euclidean(a.items[i].vector, b.items[j].vector);

    return solve_transport(supply, demand, cost);
}

std::vector<std::vector<double>> distance_matrix(const std::vector<DocBag>& bags) {
    const size_t n = bags.size();
    if (n < 2) throw data_error("distance_matrix: need at least 2 bags");

    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));

    // Upper-triangle entries are independent; split them across workers.
    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    const size_t workers =
        std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), pairs.size()));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (size_t p = w; p < pairs.size(); p += workers) {
                const auto [i, j] = pairs[p];
                const double d = wmd(bags[i], bags[j]);
                matrix[i][j] = d;
                matrix[j][i] = d;
            }
        }));
    }
    for (auto& f : futures) f.get();
    return matrix;
}

}  // namespace triage
