#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace triage {

struct EmbeddingTable {
    int dimension = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;

    bool contains(const std::string& token) const { return vectors.count(token) != 0; }
};

// word2vec-style text format: one line per token, values whitespace-separated.
// An optional leading "<count> <dimension>" header is detected by shape.
// Throws io_error / schema_error (dimension mismatches, bad numbers).
EmbeddingTable load_embeddings(const std::string& path);

void save_embeddings(const EmbeddingTable& table, const std::string& path);

}  // namespace triage
