#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tpsim {

struct Histogram {
    std::vector<double> edges;      // bin edges, size counts.size() + 1
    std::vector<long long> counts;  // counts sum to the sample size
};

// Population-moment summary (divide by n, not n-1). Kurtosis is the Pearson
// fourth standardized moment, so a normal sample reads ~3, not ~0. For
// constant data the shape statistics are pinned: cv = 0, skewness = 0,
// kurtosis = 3, gini = 0.
struct SummaryStats {
    double mean = 0.0;
    double cv = 0.0;        // std / |mean|
    double skewness = 0.0;
    double kurtosis = 3.0;
    std::optional<double> gini;  // absent unless all values are >= 0
    std::size_t n = 0;
    Histogram histogram;
};

// Throws std::invalid_argument for n < 2, std::domain_error when cv is
// undefined (zero mean with nonzero spread).
SummaryStats summary(std::span<const double> values);

// Gini index: sum |x_i - x_j| / (2 n^2 mean), computed in O(n log n) via the
// sorted form. Requires nonnegative values, not all zero.
double gini(std::span<const double> values);

// Freedman-Diaconis binning over [min, max], clamped to at least 30 bins
// (and at most 1000). Requires max > min.
Histogram make_histogram(std::span<const double> values);

}  // namespace tpsim
