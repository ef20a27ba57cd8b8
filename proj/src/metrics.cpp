#include "tpsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tpsim {

namespace {

// Linear-interpolation quantile on sorted data (the common "type 7" rule).
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double gini_sorted(const std::vector<double>& sorted, double sum) {
    // G = 2*sum(i*x_(i))/(n*sum(x)) - (n+1)/n with 1-based ranks.
    const double n = static_cast<double>(sorted.size());
    double weighted = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        weighted += static_cast<double>(i + 1) * sorted[i];
    return 2.0 * weighted / (n * sum) - (n + 1.0) / n;
}

}  // namespace

double gini(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("gini: empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0.0)
        throw std::domain_error("gini: negative value in sample");
    if (sorted.front() == sorted.back()) {
        if (sorted.back() == 0.0)
            throw std::domain_error("gini: all values are zero");
        return 0.0;  // equal values, exactly
    }
    double sum = 0.0;
    for (double x : sorted) sum += x;
    return gini_sorted(sorted, sum);
}

Histogram make_histogram(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front(), hi = sorted.back();
    if (!(hi > lo)) throw std::invalid_argument("make_histogram: zero range");

    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    const double fd_width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
    long long bins = 30;
    if (fd_width > 0.0)
        bins = std::llround(std::ceil((hi - lo) / fd_width));
    bins = std::clamp(bins, 30LL, 1000LL);

    Histogram h;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        h.edges[i] = lo + width * static_cast<double>(i);
    h.edges.back() = hi;  // close the last bin exactly

    for (double x : sorted) {
        auto idx = static_cast<long long>((x - lo) / width);
        idx = std::clamp(idx, 0LL, bins - 1);
        ++h.counts[static_cast<std::size_t>(idx)];
    }
    return h;
}

SummaryStats summary(std::span<const double> values) {
    if (values.size() < 2)
        throw std::invalid_argument("summary: need at least 2 values");

    SummaryStats s;
    s.n = values.size();
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());

    if (*min_it == *max_it) {
        // Constant sample: every dispersion measure is exactly zero by
        // construction, not merely up to rounding in the moment sums.
        s.mean = *min_it;
        s.cv = 0.0;
        s.skewness = 0.0;
        s.kurtosis = 3.0;
        if (*min_it > 0.0) s.gini = 0.0;
        s.histogram.edges = {*min_it, *max_it};
        s.histogram.counts = {static_cast<long long>(s.n)};
        return s;
    }

    const double n = static_cast<double>(s.n);
    double sum = 0.0;
    for (double x : values) sum += x;
    s.mean = sum / n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : values) {
        const double d = x - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    const double sd = std::sqrt(m2);
    if (s.mean == 0.0)
        throw std::domain_error("summary: cv undefined for zero mean");
    s.cv = sd / std::abs(s.mean);
    s.skewness = m3 / (sd * sd * sd);
    s.kurtosis = m4 / (m2 * m2);

    if (*min_it >= 0.0) s.gini = gini(values);
    s.histogram = make_histogram(values);
    return s;
}

}  // namespace tpsim
