#include "triage/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "triage/errors.hpp"

namespace triage {

using nlohmann::json;

namespace {

json forest_to_json(const ForestModel& model) {
    json j;
    j["type"] = "rf";
    j["params"] = {{"trees", model.params.trees},
                   {"subset", model.params.subset},
                   {"min_leaf", model.params.min_leaf},
                   {"max_depth", model.params.max_depth}};
    j["seed"] = model.seed;
    j["features"] = model.features;
    j["normalizer"] = model.normalizer.maxima;
    j["trees"] = json::array();
    for (const auto& tree : model.trees) {
        json tj = json::array();
        for (const auto& node : tree.nodes)
            tj.push_back({{"f", node.feature},
                          {"t", node.threshold},
                          {"l", node.left},
                          {"r", node.right},
                          {"fwd", node.count_fwd},
                          {"nfwd", node.count_nfwd}});
        j["trees"].push_back(std::move(tj));
    }
    return j;
}

ForestModel forest_from_json(const json& j) {
    ForestModel model;
    model.params.trees = j.at("params").at("trees").get<int>();
    model.params.subset = j.at("params").at("subset").get<int>();
    model.params.min_leaf = j.at("params").at("min_leaf").get<int>();
    model.params.max_depth = j.at("params").at("max_depth").get<int>();
    model.seed = j.at("seed").get<uint64_t>();
    model.features = j.at("features").get<std::vector<std::string>>();
    model.normalizer.maxima = j.at("normalizer").get<std::vector<double>>();
    for (const auto& tj : j.at("trees")) {
        Tree tree;
        for (const auto& nj : tj)
            tree.nodes.push_back({nj.at("f").get<int>(), nj.at("t").get<double>(),
                                  nj.at("l").get<int>(), nj.at("r").get<int>(),
                                  nj.at("fwd").get<long long>(), nj.at("nfwd").get<long long>()});
        model.trees.push_back(std::move(tree));
    }
    return model;
}

json logistic_to_json(const LogisticModel& model) {
    json j;
    j["type"] = "lr";
    j["params"] = {{"learning_rate", model.params.learning_rate},
                   {"epochs", model.params.epochs},
                   {"l2", model.params.l2}};
    j["features"] = model.features;
    j["normalizer"] = model.normalizer.maxima;
    j["weights"] = model.weights;
    j["bias"] = model.bias;
    return j;
}

LogisticModel logistic_from_json(const json& j) {
    LogisticModel model;
    model.params.learning_rate = j.at("params").at("learning_rate").get<double>();
    model.params.epochs = j.at("params").at("epochs").get<int>();
    model.params.l2 = j.at("params").at("l2").get<double>();
    model.features = j.at("features").get<std::vector<std::string>>();
    model.normalizer.maxima = j.at("normalizer").get<std::vector<double>>();
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    return model;
}

}  // namespace

void save_model(const TrainedModel& model, const std::string& path) {
    json j = std::holds_alternative<ForestModel>(model)
                 ? forest_to_json(std::get<ForestModel>(model))
                 : logistic_to_json(std::get<LogisticModel>(model));
    j["schema_version"] = 1;

    std::ofstream out(path);
    if (!out) throw io_error("cannot write model file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("short write on model file: " + path);
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open model file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw schema_error("model file " + path + ": " + e.what());
    }
    if (!j.contains("schema_version") || j["schema_version"] != 1)
        throw schema_error("model file " + path + ": schema_version 1 required");

    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "rf") return forest_from_json(j);
        if (type == "lr") return logistic_from_json(j);
        throw schema_error("model file " + path + ": unknown type '" + type + "'");
    } catch (const json::exception& e) {
        throw schema_error("model file " + path + ": " + e.what());
    }
}

int model_predict(const TrainedModel& model, const std::vector<double>& normalized_row) {
    return std::visit([&](const auto& m) { return m.predict(normalized_row); }, model);
}

double model_score(const TrainedModel& model, const std::vector<double>& normalized_row) {
    return std::visit([&](const auto& m) { return m.score(normalized_row); }, model);
}

const Normalizer& model_normalizer(const TrainedModel& model) {
    return std::visit([](const auto& m) -> const Normalizer& { return m.normalizer; }, model);
}

}  // namespace triage
