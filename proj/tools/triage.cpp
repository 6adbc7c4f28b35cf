#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "triage/cdf.hpp"
#include "triage/cluster.hpp"
#include "triage/config.hpp"
#include "triage/corpus.hpp"
#include "triage/dictionary.hpp"
#include "triage/embedding.hpp"
#include "triage/errors.hpp"
#include "triage/evaluate.hpp"
#include "triage/features.hpp"
#include "triage/info_gain.hpp"
#include "triage/model_io.hpp"
#include "triage/rake.hpp"
#include "triage/synth.hpp"

namespace {

using nlohmann::json;
using namespace triage;

std::string fmt(double v) {
    std::array<char, 64> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

// Flags every subcommand carries. The config file fills in whatever the
// command line leaves at its default; an explicit flag always wins.
struct CommonFlags {
    uint64_t seed = 0;
    std::string config_path;
    std::string out;

    Config config;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed; every command is deterministic given it");
        cmd->add_option("--config", config_path, "key=value config file");
        cmd->add_option("--out", out, "output path (or prefix for synth)");
    }
    void load() {
        if (!config_path.empty()) config = load_config(config_path);
    }
};

std::set<std::string> stopwords_for(const std::string& flag_value, const Config& config) {
    std::string path = flag_value.empty() ? config.get("stopwords", "") : flag_value;
    return path.empty() ? default_stopwords() : load_stopwords(path);
}

Corpus accepted_slice(const Corpus& corpus) {
    Corpus accepted;
    accepted.journal_id = corpus.journal_id;
    for (const auto& rec : corpus.records)
        if (rec.label == Label::FWD) accepted.records.push_back(rec);
    if (accepted.records.empty())
        throw data_error("corpus has no FWD records to learn from");
    return accepted;
}

ModelSpec model_spec_from(const std::string& model, const Config& config) {
    ModelSpec spec;
    spec.kind = model_kind_from_string(model);
    spec.forest.trees = static_cast<int>(config.get_int("rf.trees", 100));
    spec.forest.subset = static_cast<int>(config.get_int("rf.subset", 0));
    spec.forest.min_leaf = static_cast<int>(config.get_int("rf.min_leaf", 1));
    spec.forest.max_depth = static_cast<int>(config.get_int("rf.max_depth", 0));
    spec.logistic.learning_rate = config.get_double("lr.rate", 0.1);
    spec.logistic.epochs = static_cast<int>(config.get_int("lr.epochs", 500));
    spec.logistic.l2 = config.get_double("lr.l2", 1e-4);
    return spec;
}

json metrics_to_json(const Metrics& m) {
    json j;
    j["accuracy"] = m.accuracy;
    j["macro_f1"] = m.macro_f1;
    j["precision_fwd"] = m.precision_fwd;
    j["recall_fwd"] = m.recall_fwd;
    j["precision_nfwd"] = m.precision_nfwd;
    j["recall_nfwd"] = m.recall_nfwd;
    j["f1_fwd"] = m.f1_fwd;
    j["f1_nfwd"] = m.f1_nfwd;
    j["confusion"] = {{"fwd_as_fwd", m.confusion[1][1]},
                      {"fwd_as_nfwd", m.confusion[1][0]},
                      {"nfwd_as_fwd", m.confusion[0][1]},
                      {"nfwd_as_nfwd", m.confusion[0][0]}};
    return j;
}

void print_metrics(const Metrics& m) {
    std::printf("class  precision  recall  f1\n");
    std::printf("FWD    %.4f     %.4f  %.4f\n", m.precision_fwd, m.recall_fwd, m.f1_fwd);
    std::printf("NFWD   %.4f     %.4f  %.4f\n", m.precision_nfwd, m.recall_nfwd, m.f1_nfwd);
    std::printf("accuracy %.4f  macro-F1 %.4f\n", m.accuracy, m.macro_f1);
    std::printf("confusion fwd_as_fwd=%lld fwd_as_nfwd=%lld nfwd_as_fwd=%lld nfwd_as_nfwd=%lld\n",
                m.confusion[1][1], m.confusion[1][0], m.confusion[0][1], m.confusion[0][0]);
}

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("short write on " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"manuscript triage toolkit"};
    app.require_subcommand(1);

    // build-dict
    auto* cmd_dict = app.add_subcommand("build-dict", "build a journal dictionary from FWD papers");
    CommonFlags f_dict;
    f_dict.attach(cmd_dict);
    std::string dict_corpus;
    cmd_dict->add_option("--corpus", dict_corpus, "corpus JSON")->required();

    // fit-clusters
    auto* cmd_fit = app.add_subcommand("fit-clusters", "fit the sub-domain cluster model");
    CommonFlags f_fit;
    f_fit.attach(cmd_fit);
    std::string fit_corpus, fit_emb, fit_stop;
    int fit_kmin = -1, fit_kmax = -1, fit_topn = -1;
    cmd_fit->add_option("--corpus", fit_corpus, "corpus JSON")->required();
    cmd_fit->add_option("--emb", fit_emb, "embedding file")->required();
    cmd_fit->add_option("--stopwords", fit_stop, "stopword file");
    cmd_fit->add_option("--k-min", fit_kmin, "smallest K to try");
    cmd_fit->add_option("--k-max", fit_kmax, "largest K to try");
    cmd_fit->add_option("--top-n", fit_topn, "RAKE phrases per document");

    // featurize
    auto* cmd_feat = app.add_subcommand("featurize", "write the 30-feature matrix CSV");
    CommonFlags f_feat;
    f_feat.attach(cmd_feat);
    std::string feat_corpus, feat_dict, feat_clusters, feat_emb, feat_stop;
    double feat_tau = -1.0;
    int feat_topn = -1;
    cmd_feat->add_option("--corpus", feat_corpus, "corpus JSON")->required();
    cmd_feat->add_option("--dict", feat_dict, "dictionary JSON")->required();
    cmd_feat->add_option("--clusters", feat_clusters, "cluster model JSON")->required();
    cmd_feat->add_option("--emb", feat_emb, "embedding file")->required();
    cmd_feat->add_option("--stopwords", feat_stop, "stopword file");
    cmd_feat->add_option("--tau", feat_tau, "MAD outlier threshold");
    cmd_feat->add_option("--top-n", feat_topn, "RAKE phrases per document");

    // train
    auto* cmd_train = app.add_subcommand("train", "train a classifier on a feature matrix");
    CommonFlags f_train;
    f_train.attach(cmd_train);
    std::string train_matrix, train_model = "rf";
    cmd_train->add_option("--matrix", train_matrix, "feature matrix CSV")->required();
    cmd_train->add_option("--model", train_model, "rf or lr");

    // cv
    auto* cmd_cv = app.add_subcommand("cv", "stratified cross-validation metrics");
    CommonFlags f_cv;
    f_cv.attach(cmd_cv);
    std::string cv_matrix, cv_model = "rf";
    int cv_folds = -1;
    cmd_cv->add_option("--matrix", cv_matrix, "feature matrix CSV")->required();
    cmd_cv->add_option("--model", cv_model, "rf or lr");
    cmd_cv->add_option("--folds", cv_folds, "fold count");

    // infogain
    auto* cmd_ig = app.add_subcommand("infogain", "rank features by information gain");
    CommonFlags f_ig;
    f_ig.attach(cmd_ig);
    std::string ig_matrix;
    int ig_bins = -1;
    cmd_ig->add_option("--matrix", ig_matrix, "feature matrix CSV")->required();
    cmd_ig->add_option("--bins", ig_bins, "equal-frequency bins");

    // ablate
    auto* cmd_ab = app.add_subcommand("ablate", "drop each feature category and re-validate");
    CommonFlags f_ab;
    f_ab.attach(cmd_ab);
    std::string ab_matrix, ab_model = "rf";
    int ab_folds = -1;
    cmd_ab->add_option("--matrix", ab_matrix, "feature matrix CSV")->required();
    cmd_ab->add_option("--model", ab_model, "rf or lr");
    cmd_ab->add_option("--folds", ab_folds, "fold count");

    // score
    auto* cmd_score = app.add_subcommand("score", "score one candidate paper");
    CommonFlags f_score;
    f_score.attach(cmd_score);
    std::string sc_paper, sc_dict, sc_clusters, sc_emb, sc_model, sc_stop;
    cmd_score->add_option("--paper", sc_paper, "corpus JSON holding exactly one record")->required();
    cmd_score->add_option("--dict", sc_dict, "dictionary JSON")->required();
    cmd_score->add_option("--clusters", sc_clusters, "cluster model JSON")->required();
    cmd_score->add_option("--emb", sc_emb, "embedding file")->required();
    cmd_score->add_option("--model", sc_model, "trained model JSON")->required();
    cmd_score->add_option("--stopwords", sc_stop, "stopword file");

    // synth
    auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic corpus + ground truth");
    CommonFlags f_synth;
    f_synth.attach(cmd_synth);
    std::string synth_spec_path;
    int synth_n = -1;
    cmd_synth->add_option("--spec", synth_spec_path, "synth spec JSON (defaults to the planted-scope spec)");
    cmd_synth->add_option("--n", synth_n, "papers per class");

    // cdf
    auto* cmd_cdf = app.add_subcommand("cdf", "empirical CDF of one feature per class");
    CommonFlags f_cdf;
    f_cdf.attach(cmd_cdf);
    std::string cdf_matrix, cdf_feature;
    cmd_cdf->add_option("--matrix", cdf_matrix, "feature matrix CSV")->required();
    cmd_cdf->add_option("--feature", cdf_feature, "canonical feature name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (*cmd_dict) {
            f_dict.load();
            if (f_dict.out.empty()) throw data_error("build-dict: --out is required");
            const Corpus corpus = load_corpus(dict_corpus);
            save_dictionary(build_dictionary(accepted_slice(corpus)), f_dict.out);
            std::printf("dictionary written to %s\n", f_dict.out.c_str());
        } else if (*cmd_fit) {
            f_fit.load();
            if (f_fit.out.empty()) throw data_error("fit-clusters: --out is required");
            const int k_min = fit_kmin > 0 ? fit_kmin
                                           : static_cast<int>(f_fit.config.get_int("cluster.k_min", kDefaultKMin));
            const int k_max = fit_kmax > 0 ? fit_kmax
                                           : static_cast<int>(f_fit.config.get_int("cluster.k_max", kDefaultKMax));
            const int top_n = fit_topn > 0 ? fit_topn
                                           : static_cast<int>(f_fit.config.get_int("rake.top_n", 30));
            const Corpus corpus = load_corpus(fit_corpus);
            const EmbeddingTable emb = load_embeddings(fit_emb);
            const auto stopwords = stopwords_for(fit_stop, f_fit.config);
            FitReport report;
            const ClusterModel model = fit_cluster_model(accepted_slice(corpus), emb, stopwords,
                                                         k_min, k_max, f_fit.seed, top_n, &report);
            for (const auto& id : report.skipped_oov)
                std::fprintf(stderr, "warning: skipped out-of-vocabulary record '%s'\n", id.c_str());
            save_cluster_model(model, f_fit.out);
            std::printf("cluster model (k=%d) written to %s\n", model.k, f_fit.out.c_str());
        } else if (*cmd_feat) {
            f_feat.load();
            if (f_feat.out.empty()) throw data_error("featurize: --out is required");
            FeaturizeOptions options;
            options.mad_tau = feat_tau >= 0 ? feat_tau : f_feat.config.get_double("mad.tau", 2.5);
            options.rake_top_n = feat_topn > 0 ? feat_topn
                                               : static_cast<int>(f_feat.config.get_int("rake.top_n", 30));
            const Corpus corpus = load_corpus(feat_corpus);
            const JournalDictionary dict = load_dictionary(feat_dict);
            const ClusterModel cmodel = load_cluster_model(feat_clusters);
            const EmbeddingTable emb = load_embeddings(feat_emb);
            const auto stopwords = stopwords_for(feat_stop, f_feat.config);
            std::vector<FeatureVector> vectors;
            std::vector<std::string> warnings;
            for (const auto& rec : corpus.records)
                vectors.push_back(featurize(rec, dict, cmodel, emb, stopwords, options, &warnings));
            for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
            save_matrix_csv(vectors, f_feat.out);
            std::printf("%zu rows written to %s\n", vectors.size(), f_feat.out.c_str());
        } else if (*cmd_train) {
            f_train.load();
            if (f_train.out.empty()) throw data_error("train: --out is required");
            const Dataset data = load_matrix_csv(train_matrix);
            const ModelSpec spec = model_spec_from(train_model, f_train.config);
            const Normalizer norm = fit_normalizer(data);
            std::vector<std::vector<double>> rows = data.rows;
            norm.apply_in_place(rows);
            TrainedModel model = [&]() -> TrainedModel {
                if (spec.kind == ModelKind::RandomForest) {
                    ForestModel m = train_random_forest(rows, data.labels, spec.forest, f_train.seed);
                    m.normalizer = norm;
                    m.features = data.names;
                    return m;
                }
                LogisticModel m = train_logistic(rows, data.labels, spec.logistic);
                m.normalizer = norm;
                m.features = data.names;
                return m;
            }();
            save_model(model, f_train.out);
            std::printf("%s model written to %s\n", train_model.c_str(), f_train.out.c_str());
        } else if (*cmd_cv) {
            f_cv.load();
            const Dataset data = load_matrix_csv(cv_matrix);
            const int folds =
                cv_folds > 0 ? cv_folds : static_cast<int>(f_cv.config.get_int("cv.folds", 10));
            const Metrics m =
                cross_validate(data, folds, model_spec_from(cv_model, f_cv.config), f_cv.seed);
            print_metrics(m);
            if (!f_cv.out.empty()) write_json(metrics_to_json(m), f_cv.out);
        } else if (*cmd_ig) {
            f_ig.load();
            const Dataset data = load_matrix_csv(ig_matrix);
            const int bins = ig_bins > 0 ? ig_bins : static_cast<int>(f_ig.config.get_int("ig.bins", 10));
            const auto ranked = info_gain(data, bins);
            std::printf("rank,feature,information_gain\n");
            for (size_t i = 0; i < ranked.size(); ++i)
                std::printf("%zu,%s,%s\n", i + 1, ranked[i].name.c_str(), fmt(ranked[i].gain).c_str());
            if (!f_ig.out.empty()) {
                std::ofstream out(f_ig.out);
                if (!out) throw io_error("cannot write " + f_ig.out);
                out << "rank,feature,information_gain\n";
                for (size_t i = 0; i < ranked.size(); ++i)
                    out << i + 1 << ',' << ranked[i].name << ',' << fmt(ranked[i].gain) << '\n';
            }
        } else if (*cmd_ab) {
            f_ab.load();
            const Dataset data = load_matrix_csv(ab_matrix);
            const int folds =
                ab_folds > 0 ? ab_folds : static_cast<int>(f_ab.config.get_int("cv.folds", 10));
            const AblationResult result = ablate(data, canonical_categories(), folds,
                                                 model_spec_from(ab_model, f_ab.config), f_ab.seed);
            std::printf("full,%s\n", fmt(result.full_macro_f1).c_str());
            for (const auto& [tag, f1] : result.without_category)
                std::printf("-%s,%s\n", tag.c_str(), fmt(f1).c_str());
            if (!f_ab.out.empty()) {
                json j;
                j["full_macro_f1"] = result.full_macro_f1;
                j["without_category"] = result.without_category;
                write_json(j, f_ab.out);
            }
        } else if (*cmd_score) {
            f_score.load();
            const Corpus corpus = load_corpus(sc_paper);
            if (corpus.records.size() != 1)
                throw data_error("score: --paper must hold exactly one record, got " +
                                 std::to_string(corpus.records.size()));
            const JournalDictionary dict = load_dictionary(sc_dict);
            const ClusterModel cmodel = load_cluster_model(sc_clusters);
            const EmbeddingTable emb = load_embeddings(sc_emb);
            const TrainedModel model = load_model(sc_model);
            const auto stopwords = stopwords_for(sc_stop, f_score.config);
            FeaturizeOptions options;
            options.mad_tau = f_score.config.get_double("mad.tau", 2.5);
            options.rake_top_n = static_cast<int>(f_score.config.get_int("rake.top_n", 30));
            const FeatureVector fv =
                featurize(corpus.records.front(), dict, cmodel, emb, stopwords, options);
            const std::vector<double> raw(fv.values.begin(), fv.values.end());
            const std::vector<double> normalized = model_normalizer(model).apply(raw);
            const int verdict = model_predict(model, normalized);
            std::printf("verdict: %s\n", verdict == 1 ? "FWD" : "NFWD");
            std::printf("score: %s\n", fmt(model_score(model, normalized)).c_str());
            const auto& names = feature_names();
            for (int i = 0; i < kFeatureCount; ++i)
                std::printf("%s=%s (normalized=%s)\n", names[i].c_str(), fmt(raw[i]).c_str(),
                            fmt(normalized[i]).c_str());
        } else if (*cmd_synth) {
            f_synth.load();
            SynthSpec spec =
                synth_spec_path.empty() ? default_synth_spec() : load_synth_spec(synth_spec_path);
            if (cmd_synth->count("--seed")) spec.seed = f_synth.seed;
            if (synth_n > 0) spec.n_per_class = synth_n;
            const std::string prefix = f_synth.out.empty() ? "synth" : f_synth.out;
            const SynthResult result = synth_corpus(spec);
            save_corpus(result.corpus, prefix + "_corpus.json");
            save_matrix_csv(result.truth, prefix + "_matrix.csv");
            save_embeddings(result.embeddings, prefix + "_embeddings.vec");
            save_synth_spec(spec, prefix + "_spec.json");
            std::printf("wrote %s_corpus.json, %s_matrix.csv, %s_embeddings.vec, %s_spec.json\n",
                        prefix.c_str(), prefix.c_str(), prefix.c_str(), prefix.c_str());
        } else if (*cmd_cdf) {
            f_cdf.load();
            if (f_cdf.out.empty()) throw data_error("cdf: --out is required");
            const Dataset data = load_matrix_csv(cdf_matrix);
            const auto [fwd, nfwd] = cdf_export(data, cdf_feature);
            save_cdf_csv(fwd, nfwd, f_cdf.out);
            std::printf("CDF for '%s' written to %s\n", cdf_feature.c_str(), f_cdf.out.c_str());
        }
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
