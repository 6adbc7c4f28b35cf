#pragma once

#include <string>
#include <vector>

#include "triage/features.hpp"

namespace triage {

struct RankedGain {
    int feature = 0;  // column index in the source dataset
    std::string name;
    double gain = 0.0;  // bits
};

// Assigns each value to an equal-frequency bin. Cut values are the column's
// order statistics at index floor(b*n/bins); duplicate cuts merge, so tied
// values always share a bin. Exposed for the oracle tests.
std::vector<int> equal_frequency_bins(const std::vector<double>& values, int bins);

// IG = H(label) - sum_b p(b) H(label | b), base-2, over equal-frequency bins.
double info_gain_column(const std::vector<double>& values, const std::vector<int>& labels,
                        int bins);

// Every feature ranked by gain, descending; ties keep dataset column order.
// Throws data_error unless both classes are present.
std::vector<RankedGain> info_gain(const Dataset& data, int bins = 10);

}  // namespace triage
