#pragma once

#include "minifab/devs/trace.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace minifab {

struct SeriesPoint {
    double time = 0.0;
    double value = 0.0;
};

/// Time-sorted event observations of one variable.
using SparseSeries = std::vector<SeriesPoint>;

/// Pulls the numeric records of (component, variable) out of a trace in
/// time order. Records at identical times collapse to the last one in
/// trace order. LookupError when nothing matches.
SparseSeries extract_variable(const devs::EventTrace& trace, std::string_view component_path,
                              std::string_view variable);

/// Piecewise-constant resampling: output[k] is the value of the latest
/// event with time <= k * step_minutes, or `initial` before the first
/// event. Output length is horizon_minutes / step_minutes + 1.
std::vector<double> front_fill(const SparseSeries& sparse, double step_minutes,
                               std::int64_t horizon_minutes, double initial = 0.0);

} // namespace minifab
