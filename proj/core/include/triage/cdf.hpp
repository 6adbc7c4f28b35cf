#pragma once

#include <string>
#include <vector>

#include "triage/features.hpp"

namespace triage {

struct CdfSeries {
    std::string feature;
    std::string class_tag;  // "FWD" or "NFWD"
    std::vector<std::pair<double, double>> points;  // (value, cumulative probability)

    // Smallest value whose cumulative probability reaches p.
    double quantile(double p) const;
};

// Empirical CDF of one feature split by class; duplicate values collapse to
// a single step at their highest cumulative probability. Throws data_error
// when either class is empty.
std::pair<CdfSeries, CdfSeries> cdf_export(const Dataset& data, const std::string& feature);

CdfSeries empirical_cdf(std::vector<double> values, const std::string& feature,
                        const std::string& class_tag);

void save_cdf_csv(const CdfSeries& fwd, const CdfSeries& nfwd, const std::string& path);

}  // namespace triage
