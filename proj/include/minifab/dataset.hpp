#pragma once

#include "minifab/devs/trace.hpp"
#include "minifab/factory.hpp"
#include "minifab/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minifab {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Front-filled 1-minute columns of one `<component>_series.csv` file.
/// Throughput follows its definition cumulative_completed(t) / t (zero
/// at t = 0) rather than the front-filled event samples, so the value
/// at each minute is the exact completion rate up to that minute.
struct ComponentSeries {
    std::vector<double> throughput;
    std::vector<double> turnaround;
    std::vector<double> cumulative_completed;
    std::vector<double> wip;

    std::size_t length() const { return cumulative_completed.size(); }
};

/// Builds the series columns for one observer. Missing records (an
/// empty workload) yield all-zero columns.
ComponentSeries build_component_series(const devs::EventTrace& trace,
                                       const std::string& observer_path,
                                       std::int64_t horizon_minutes);

/// Writes, per stage and for the cascade aggregate,
/// `<component>_events.csv` (time_min, variable, value) and
/// `<component>_series.csv` (time_min, throughput, turnaround,
/// cumulative_completed, wip), plus `scenario.meta`. Bytes are
/// deterministic for a given (config, trace). Returns the written file
/// names relative to out_dir, in write order.
std::vector<std::string> export_scenario(const devs::EventTrace& trace,
                                         const ScenarioConfig& config, const std::string& out_dir);

/// Reads one column of a `<component>_series.csv` file.
std::vector<double> read_series_column(const std::string& path, const std::string& column);

} // namespace minifab
