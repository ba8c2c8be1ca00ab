#include "minifab/dataset.hpp"

#include "minifab/errors.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace minifab {

namespace {

std::string format_number(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

SparseSeries try_extract(const devs::EventTrace& trace, const std::string& component,
                         std::string_view variable) {
    try {
        return extract_variable(trace, component, variable);
    } catch (const LookupError&) {
        return {};
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string events_csv(const devs::EventTrace& trace, const std::string& component_prefix) {
    std::string csv = "time_min,variable,value\n";
    const std::string exact = component_prefix;
    const std::string nested = component_prefix + ".";
    for (const devs::TraceRecord& r : trace.records()) {
        const bool inside =
            r.component == exact ||
            (r.component.size() > nested.size() && r.component.compare(0, nested.size(), nested) == 0);
        if (!inside) continue;
        const std::string relative = r.component == exact ? exact.substr(exact.rfind('.') + 1)
                                                          : r.component.substr(nested.size());
        csv += format_number(r.time);
        csv += ',';
        csv += relative.empty() ? r.variable : relative + "." + r.variable;
        csv += ',';
        const std::string text = devs::trace_value_text(r.value);
        // quote free-text values that could contain the separator
        if (text.find(',') != std::string::npos) {
            csv += '"';
            csv += text;
            csv += '"';
        } else {
            csv += text;
        }
        csv += '\n';
    }
    return csv;
}

std::string series_csv(const ComponentSeries& series) {
    std::string csv = "time_min,throughput,turnaround,cumulative_completed,wip\n";
    for (std::size_t k = 0; k < series.length(); ++k) {
        csv += std::to_string(k);
        csv += ',';
        csv += format_number(series.throughput[k]);
        csv += ',';
        csv += format_number(series.turnaround[k]);
        csv += ',';
        csv += format_number(series.cumulative_completed[k]);
        csv += ',';
        csv += format_number(series.wip[k]);
        csv += '\n';
    }
    return csv;
}

} // namespace

ComponentSeries build_component_series(const devs::EventTrace& trace,
                                       const std::string& observer_path,
                                       std::int64_t horizon_minutes) {
    ComponentSeries out;
    out.cumulative_completed =
        front_fill(try_extract(trace, observer_path, "cumulative_completed"), 1.0, horizon_minutes);
    out.turnaround = front_fill(try_extract(trace, observer_path, "turnaround"), 1.0, horizon_minutes);
    out.wip = front_fill(try_extract(trace, observer_path, "wip"), 1.0, horizon_minutes);
    out.throughput.reserve(out.cumulative_completed.size());
    out.throughput.push_back(0.0);
    for (std::size_t k = 1; k < out.cumulative_completed.size(); ++k) {
        out.throughput.push_back(out.cumulative_completed[k] / static_cast<double>(k));
    }
    return out;
}

std::vector<std::string> export_scenario(const devs::EventTrace& trace,
                                         const ScenarioConfig& config, const std::string& out_dir) {
    validate_scenario(config);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    std::vector<std::string> written;
    auto emit = [&](const std::string& file_name, const std::string& content) {
        write_file(out_dir + "/" + file_name, content);
        written.push_back(file_name);
    };

    for (int i = 1; i <= config.stages; ++i) {
        const std::string stage = "stage" + std::to_string(i);
        emit(stage + "_events.csv", events_csv(trace, stage));
        emit(stage + "_series.csv",
             series_csv(build_component_series(trace, stage + ".observer", config.horizon_minutes)));
    }
    emit("cascade_events.csv", events_csv(trace, "observer"));
    emit("cascade_series.csv",
         series_csv(build_component_series(trace, "observer", config.horizon_minutes)));

    std::string meta;
    meta += "name=" + config.name + "\n";
    meta += "pa=" + std::to_string(config.pa) + "\n";
    meta += "pb=" + std::to_string(config.pb) + "\n";
    meta += "tw=" + std::to_string(config.tw) + "\n";
    meta += "repair=" + std::string(repair_mode_name(config.repair)) + "\n";
    meta += "pattern=" + std::string(pattern_name(config.pattern)) + "\n";
    meta += "stages=" + std::to_string(config.stages) + "\n";
    meta += "horizon_minutes=" + std::to_string(config.horizon_minutes) + "\n";
    meta += "seed=" + std::to_string(config.seed) + "\n";
    meta += "tool_version=" + std::string(kToolVersion) + "\n";
    emit("scenario.meta", meta);

    return written;
}

std::vector<double> read_series_column(const std::string& path, const std::string& column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open series file '" + path + "'");

    std::string header;
    if (!std::getline(in, header)) throw IoError("empty series file '" + path + "'");

    std::size_t target = std::string::npos;
    std::size_t index = 0;
    std::istringstream headers(header);
    std::string name;
    while (std::getline(headers, name, ',')) {
        if (name == column) target = index;
        ++index;
    }
    if (target == std::string::npos) {
        throw LookupError("series file '" + path + "' has no column '" + column + "'");
    }

    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t start = 0;
        for (std::size_t col = 0; col < target; ++col) {
            start = line.find(',', start);
            if (start == std::string::npos) {
                throw IoError("malformed row in series file '" + path + "'");
            }
            ++start;
        }
        const std::size_t end = line.find(',', start);
        const std::string field =
            line.substr(start, end == std::string::npos ? std::string::npos : end - start);
        double value = 0.0;
        auto [ptr, ec2] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec2 != std::errc() || ptr != field.data() + field.size()) {
            throw IoError("non-numeric value '" + field + "' in series file '" + path + "'");
        }
        values.push_back(value);
    }
    return values;
}

} // namespace minifab
