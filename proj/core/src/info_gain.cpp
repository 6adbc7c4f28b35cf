#include "triage/info_gain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "triage/errors.hpp"

namespace triage {

namespace {

double entropy(long long positives, long long total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    for (long long c : {positives, total - positives}) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

std::vector<int> equal_frequency_bins(const std::vector<double>& values, int bins) {
    if (bins < 1) throw data_error("equal_frequency_bins: bins must be >= 1");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();

    std::set<double> cuts;
    for (int b = 1; b < bins; ++b) {
        const size_t idx = b * n / bins;
        if (idx < n) cuts.insert(sorted[idx]);
    }

    std::vector<double> thresholds(cuts.begin(), cuts.end());
    std::vector<int> out(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        // bin = number of cut values <= x
        out[i] = static_cast<int>(
            std::upper_bound(thresholds.begin(), thresholds.end(), values[i]) - thresholds.begin());
    }
    return out;
}

double info_gain_column(const std::vector<double>& values, const std::vector<int>& labels,
                        int bins) {
    const auto bin_of = equal_frequency_bins(values, bins);
    const long long n = static_cast<long long>(values.size());

    long long total_pos = 0;
    for (int y : labels) total_pos += y;
    const double h_label = entropy(total_pos, n);

    const int max_bin = *std::max_element(bin_of.begin(), bin_of.end());
    std::vector<long long> bin_total(max_bin + 1, 0), bin_pos(max_bin + 1, 0);
    for (size_t i = 0; i < values.size(); ++i) {
        bin_total[bin_of[i]] += 1;
        bin_pos[bin_of[i]] += labels[i];
    }

    double conditional = 0.0;
    for (int b = 0; b <= max_bin; ++b) {
        if (bin_total[b] == 0) continue;
        const double p = static_cast<double>(bin_total[b]) / static_cast<double>(n);
        conditional += p * entropy(bin_pos[b], bin_total[b]);
    }
    return h_label - conditional;
}

std::vector<RankedGain> info_gain(const Dataset& data, int bins) {
    if (data.rows.empty()) throw data_error("info_gain: empty dataset");
    const bool has_pos = std::find(data.labels.begin(), data.labels.end(), 1) != data.labels.end();
    const bool has_neg = std::find(data.labels.begin(), data.labels.end(), 0) != data.labels.end();
    if (!has_pos || !has_neg) throw data_error("info_gain: both classes must be present");

    std::vector<RankedGain> out;
    for (size_t f = 0; f < data.width(); ++f) {
        std::vector<double> column(data.size());
        for (size_t r = 0; r < data.size(); ++r) column[r] = data.rows[r][f];
        out.push_back({static_cast<int>(f), data.names[f], info_gain_column(column, data.labels, bins)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RankedGain& a, const RankedGain& b) { return a.gain > b.gain; });
    return out;
}

}  // namespace triage
