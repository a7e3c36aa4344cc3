#pragma once

#include <map>
#include <string>
#include <vector>

#include "mwd/experiments.hpp"

namespace mwd {

struct HistogramSeries {
    std::string label;
    std::map<int, long long> counts; // value -> occurrences
};

// Scatter of d(V) against the number of minsets; circle area is
// (count / max count) * a fixed maximum, so the largest group sets the scale.
std::string scatter_svg(const std::vector<GroupedCount>& groups,
                        const std::string& x_label = "internal distance d(V)",
                        const std::string& y_label = "number of minsets");

// Grouped bar chart, one bar color per series.
std::string histogram_svg(const std::vector<HistogramSeries>& series,
                          const std::string& x_label = "number of minsets",
                          const std::string& y_label = "trials");

// Bins one statistic of a trial list, labeled by scheme.
HistogramSeries minsets_histogram(const std::vector<TrialRecord>& records);

} // namespace mwd
