#include "triage/normalizer.hpp"

#include <cmath>

#include "triage/errors.hpp"
#include "triage/features.hpp"

namespace triage {

Normalizer fit_normalizer(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw data_error("fit_normalizer: empty training matrix");
    Normalizer norm;
    norm.maxima.assign(rows.front().size(), 0.0);
    for (const auto& row : rows)
        for (size_t i = 0; i < norm.maxima.size(); ++i)
            norm.maxima[i] = std::max(norm.maxima[i], std::abs(row[i]));
    return norm;
}

Normalizer fit_normalizer(const Dataset& data) { return fit_normalizer(data.rows); }

std::vector<double> Normalizer::apply(const std::vector<double>& row) const {
    std::vector<double> out(row.size());
    for (size_t i = 0; i < row.size(); ++i)
        out[i] = maxima[i] > 0.0 ? row[i] / maxima[i] : 0.0;
    return out;
}

void Normalizer::apply_in_place(std::vector<std::vector<double>>& rows) const {
    for (auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            row[i] = maxima[i] > 0.0 ? row[i] / maxima[i] : 0.0;
}

}  // namespace triage
