#include "triage/logistic.hpp"

#include <cmath>

#include "triage/errors.hpp"

namespace triage {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

double LogisticModel::score(const std::vector<double>& row) const {
    double z = bias;
    for (size_t i = 0; i < weights.size(); ++i) z += weights[i] * row[i];
    return sigmoid(z);
}

int LogisticModel::predict(const std::vector<double>& row) const {
    return score(row) >= 0.5 ? 1 : 0;
}

LogisticModel train_logistic(const std::vector<std::vector<double>>& rows,
                             const std::vector<int>& labels, const LogisticParams& params) {
    if (rows.empty() || rows.size() != labels.size())
        throw data_error("train_logistic: degenerate training set");

    const size_t n = rows.size();
    const size_t width = rows.front().size();

    LogisticModel model;
    model.params = params;
    model.weights.assign(width, 0.0);

    std::vector<double> grad(width);
    for (int epoch = 0; epoch < params.epochs; ++epoch) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_bias = 0.0;
        double loss = 0.0;
        for (size_t r = 0; r < n; ++r) {
            const double p = model.score(rows[r]);
            const double err = p - static_cast<double>(labels[r]);
            for (size_t i = 0; i < width; ++i) grad[i] += err * rows[r][i];
            grad_bias += err;
            loss -= labels[r] ? std::log(std::max(p, 1e-300))
                              : std::log(std::max(1.0 - p, 1e-300));
        }
        for (size_t i = 0; i < width; ++i) loss += 0.5 * params.l2 * model.weights[i] * model.weights[i] * n;
        if (!std::isfinite(loss))
            throw data_error("train_logistic: loss diverged at epoch " + std::to_string(epoch));

        const double scale = params.learning_rate / static_cast<double>(n);
        for (size_t i = 0; i < width; ++i)
            model.weights[i] -= scale * (grad[i] + params.l2 * n * model.weights[i]);
        model.bias -= scale * grad_bias;
    }
    return model;
}

}  // namespace triage
