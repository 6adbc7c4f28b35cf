#pragma once

#include <vector>

namespace triage {

struct Dataset;

// Per-feature scaling by the training maximum (of absolute values, so
// negative-valued features keep their sign and ordering). Columns that are
// identically zero map to zero; test-time values may exceed 1.
struct Normalizer {
    std::vector<double> maxima;

    std::vector<double> apply(const std::vector<double>& row) const;
    void apply_in_place(std::vector<std::vector<double>>& rows) const;
};

Normalizer fit_normalizer(const std::vector<std::vector<double>>& rows);
Normalizer fit_normalizer(const Dataset& data);

}  // namespace triage
