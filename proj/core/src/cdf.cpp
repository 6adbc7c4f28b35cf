#include "triage/cdf.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "triage/errors.hpp"

namespace triage {

double CdfSeries::quantile(double p) const {
    for (const auto& [value, prob] : points)
        if (prob >= p) return value;
    return points.empty() ? 0.0 : points.back().first;
}

CdfSeries empirical_cdf(std::vector<double> values, const std::string& feature,
                        const std::string& class_tag) {
    if (values.empty()) throw data_error("empirical_cdf: empty class '" + class_tag + "'");
    std::sort(values.begin(), values.end());

    CdfSeries series;
    series.feature = feature;
    series.class_tag = class_tag;
    const double n = static_cast<double>(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        const double prob = static_cast<double>(i + 1) / n;
        if (!series.points.empty() && series.points.back().first == values[i])
            series.points.back().second = prob;  // collapse duplicates to the last step
        else
            series.points.push_back({values[i], prob});
    }
    return series;
}

std::pair<CdfSeries, CdfSeries> cdf_export(const Dataset& data, const std::string& feature) {
    int column = -1;
    for (size_t f = 0; f < data.width(); ++f)
        if (data.names[f] == feature) column = static_cast<int>(f);
    if (column < 0) throw data_error("cdf_export: unknown feature '" + feature + "'");

    std::vector<double> fwd, nfwd;
    for (size_t r = 0; r < data.size(); ++r)
        (data.labels[r] == 1 ? fwd : nfwd).push_back(data.rows[r][column]);

    return {empirical_cdf(std::move(fwd), feature, "FWD"),
            empirical_cdf(std::move(nfwd), feature, "NFWD")};
}

void save_cdf_csv(const CdfSeries& fwd, const CdfSeries& nfwd, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write CDF file: " + path);

    auto fmt = [](double v) {
        std::array<char, 64> buf;
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), ptr);
    };
    out << "feature,class,value,cumulative_probability\n";
    for (const auto* series : {&fwd, &nfwd})
        for (const auto& [value, prob] : series->points)
            out << series->feature << ',' << series->class_tag << ',' << fmt(value) << ','
                << fmt(prob) << '\n';
    if (!out) throw io_error("short write on CDF file: " + path);
}

}  // namespace triage
