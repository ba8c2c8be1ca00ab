#include "minifab/series.hpp"

#include "minifab/errors.hpp"

#include <cmath>

namespace minifab {

SparseSeries extract_variable(const devs::EventTrace& trace, std::string_view component_path,
                              std::string_view variable) {
    SparseSeries out;
    bool component_seen = false;
    for (const devs::TraceRecord& r : trace.records()) {
        if (r.component != component_path) continue;
        component_seen = true;
        if (r.variable != variable) continue;
        if (!devs::trace_value_is_numeric(r.value)) {
            throw LookupError("variable '" + std::string(variable) + "' of '" +
                              std::string(component_path) + "' is not numeric");
        }
        const double value = devs::trace_value_number(r.value);
        if (!out.empty() && out.back().time == r.time) {
            out.back().value = value; // last record at a tied time wins
        } else {
            out.push_back({r.time, value});
        }
    }
    if (out.empty()) {
        throw LookupError(component_seen
                              ? "component '" + std::string(component_path) +
                                    "' never recorded variable '" + std::string(variable) + "'"
                              : "unknown component '" + std::string(component_path) + "'");
    }
    return out;
}

std::vector<double> front_fill(const SparseSeries& sparse, double step_minutes,
                               std::int64_t horizon_minutes, double initial) {
    if (step_minutes <= 0.0) throw ContractError("front_fill: step must be positive");
    if (horizon_minutes < 0) throw ContractError("front_fill: horizon must be non-negative");
    const double horizon = static_cast<double>(horizon_minutes);
    for (std::size_t i = 0; i < sparse.size(); ++i) {
        if (i > 0 && sparse[i].time < sparse[i - 1].time) {
            throw ContractError("front_fill: sparse series must be time-sorted");
        }
        if (sparse[i].time > horizon) {
            throw ContractError("front_fill: event beyond the horizon");
        }
    }

    const auto length = static_cast<std::size_t>(std::floor(horizon / step_minutes)) + 1;
    std::vector<double> out;
    out.reserve(length);
    std::size_t next_event = 0;
    double current = initial;
    for (std::size_t k = 0; k < length; ++k) {
        const double t = static_cast<double>(k) * step_minutes;
        while (next_event < sparse.size() && sparse[next_event].time <= t) {
            current = sparse[next_event].value;
            ++next_event;
        }
        out.push_back(current);
    }
    return out;
}

} // namespace minifab
