#pragma once

#include <array>
#include <span>
#include <string_view>

namespace minifab::analytics {

/// Moment coefficient of skewness g1 = m3 / m2^(3/2) with population
/// central moments. Requires length >= 3 and positive variance.
double skewness(std::span<const double> x);

/// Excess kurtosis g2 = m4 / m2^2 - 3 with population central moments.
/// Requires length >= 4 and positive variance.
double excess_kurtosis(std::span<const double> x);

/// Pearson correlation between the sample index 0..n-1 and the values.
/// Requires length >= 2 and positive variance.
double linear_trend_r(std::span<const double> x);

/// Normalized permutation entropy: Shannon entropy (natural log) of the
/// ordinal-pattern distribution over sliding windows, divided by
/// log(order!). Ties rank by position (the earlier index ranks lower).
/// Result lies in [0, 1]; 0 for a monotone series.
double permutation_entropy(std::span<const double> x, int order = 3, int delay = 1);

/// Normalized Lempel-Ziv complexity: the series is binarized by
/// "value > median", parsed into phrases by the LZ76 exhaustive-history
/// rule, and the phrase count is divided by the length.
double lempel_ziv_complexity(std::span<const double> x);

inline constexpr std::array<std::string_view, 5> kFeatureNames{
    "skewness", "excess_kurtosis", "linear_trend_r", "permutation_entropy",
    "lempel_ziv_complexity"};

/// The five features above in kFeatureNames order.
std::array<double, 5> feature_vector(std::span<const double> x);

} // namespace minifab::analytics
