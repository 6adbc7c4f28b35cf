#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "triage/corpus.hpp"
#include "triage/embedding.hpp"
#include "triage/features.hpp"

namespace triage {

struct FeatureDist {
    enum class Family { PointMass, Normal, LogNormal };
    Family family = Family::PointMass;
    double p1 = 0.0;  // value | mean | log-space mean
    double p2 = 0.0;  // unused | stddev | log-space stddev

    bool operator==(const FeatureDist&) const = default;
};

// Class-conditional target distributions per feature. Features absent from
// the map fall back to a built-in noise distribution shared by both classes.
// "Cluster Distance" is special: its targets cannot be inverted numerically,
// so differing class distributions plant topical separation in the generated
// texts instead.
struct SynthSpec {
    std::string journal_id = "synthetic";
    int n_per_class = 100;
    uint64_t seed = 0;
    int embedding_dim = 8;
    int paper_year = 2017;
    std::map<std::string, std::pair<FeatureDist, FeatureDist>> features;  // name -> (fwd, nfwd)
};

// The spec used when `triage synth` gets no --spec file: the whole scope
// category (Keyword Match, Cluster Distance, Title Scope, Conference Scope,
// Journal Scope, ADPF) separates the classes, everything else is noise.
SynthSpec default_synth_spec();

SynthSpec load_synth_spec(const std::string& path);
void save_synth_spec(const SynthSpec& spec, const std::string& path);

struct SynthResult {
    Corpus corpus;                     // FWD block then NFWD block
    std::vector<FeatureVector> truth;  // intended features, same order as records
    EmbeddingTable embeddings;         // synthetic vocabulary used by the texts
};

// Deterministic given spec.seed. Records are constructed so that the feature
// pipeline, run with the same seed and the default clustering parameters,
// reproduces `truth`: papers carry unit-frequency dictionary entries whose
// induced values the generator accounts for exactly, and NFWD papers borrow
// FWD entries to hit their targets. Integer-grained features land on the
// nearest achievable value; `truth` always reports the achieved value.
SynthResult synth_corpus(const SynthSpec& spec);

// Clustering parameters shared by synth_corpus and the CLI defaults; the
// ground-truth cluster distances only reproduce under these.
inline constexpr int kDefaultKMin = 2;
inline constexpr int kDefaultKMax = 8;

}  // namespace triage
