#pragma once

#include <string>
#include <vector>

#include "triage/normalizer.hpp"

namespace triage {

struct LogisticParams {
    double learning_rate = 0.1;
    int epochs = 500;
    double l2 = 1e-4;
};

// Batch gradient descent on L2-regularized log-loss (bias unpenalized).
// Inputs are expected normalized. Throws data_error if the loss leaves the
// finite range (learning-rate divergence).
struct LogisticModel {
    LogisticParams params;
    std::vector<double> weights;
    double bias = 0.0;
    Normalizer normalizer;
    std::vector<std::string> features;

    double score(const std::vector<double>& row) const;  // sigmoid of the linear form
    int predict(const std::vector<double>& row) const;   // 1 = FWD at score >= 0.5
};

LogisticModel train_logistic(const std::vector<std::vector<double>>& rows,
                             const std::vector<int>& labels, const LogisticParams& params = {});

}  // namespace triage
