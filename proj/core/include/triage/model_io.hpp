#pragma once

#include <string>
#include <variant>

#include "triage/forest.hpp"
#include "triage/logistic.hpp"

namespace triage {

using TrainedModel = std::variant<ForestModel, LogisticModel>;

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

int model_predict(const TrainedModel& model, const std::vector<double>& normalized_row);
double model_score(const TrainedModel& model, const std::vector<double>& normalized_row);
const Normalizer& model_normalizer(const TrainedModel& model);

}  // namespace triage
