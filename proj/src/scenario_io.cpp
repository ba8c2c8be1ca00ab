#include "minifab/scenario_io.hpp"

#include "minifab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace minifab {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_integer(const std::string& text, const std::string& context) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConstructionError(context + ": expected an integer, got '" + text + "'");
    }
    return value;
}

} // namespace

std::string scenario_file_text(const std::vector<ScenarioConfig>& scenarios) {
    std::string text = "# minifab scenario file\n";
    text += "# ";
    text += std::to_string(scenarios.size());
    text += " scenarios\n";
    for (const ScenarioConfig& s : scenarios) {
        text += "\n[" + s.name + "]\n";
        text += "pa=" + std::to_string(s.pa) + "\n";
        text += "pb=" + std::to_string(s.pb) + "\n";
        text += "tw=" + std::to_string(s.tw) + "\n";
        text += "repair=" + std::string(repair_mode_name(s.repair)) + "\n";
        text += "pattern=" + std::string(pattern_name(s.pattern)) + "\n";
        text += "stages=" + std::to_string(s.stages) + "\n";
        text += "horizon_minutes=" + std::to_string(s.horizon_minutes) + "\n";
        text += "seed=" + std::to_string(s.seed) + "\n";
    }
    return text;
}

void write_scenario_file(const std::string& path, const std::vector<ScenarioConfig>& scenarios) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open scenario file '" + path + "' for writing");
    out << scenario_file_text(scenarios);
    if (!out) throw IoError("write failed for scenario file '" + path + "'");
}

std::vector<ScenarioConfig> read_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");

    std::vector<ScenarioConfig> scenarios;
    ScenarioConfig current;
    bool in_block = false;
    std::string line;
    int line_number = 0;

    auto flush = [&] {
        if (!in_block) return;
        validate_scenario(current);
        scenarios.push_back(current);
        in_block = false;
    };

    while (std::getline(in, line)) {
        ++line_number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const std::string where = path + ":" + std::to_string(line_number);

        if (text.front() == '[') {
            if (text.back() != ']' || text.size() < 3) {
                throw ConstructionError(where + ": malformed scenario header");
            }
            flush();
            current = ScenarioConfig{};
            current.name = text.substr(1, text.size() - 2);
            in_block = true;
            continue;
        }

        if (!in_block) throw ConstructionError(where + ": key outside a scenario block");
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ConstructionError(where + ": expected key=value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (key == "pa") current.pa = parse_integer<std::int64_t>(value, where);
        else if (key == "pb") current.pb = parse_integer<std::int64_t>(value, where);
        else if (key == "tw") current.tw = parse_integer<std::int64_t>(value, where);
        else if (key == "repair") current.repair = repair_mode_from_name(value);
        else if (key == "pattern") current.pattern = pattern_from_name(value);
        else if (key == "stages") current.stages = parse_integer<int>(value, where);
        else if (key == "horizon_minutes") current.horizon_minutes = parse_integer<std::int64_t>(value, where);
        else if (key == "seed") current.seed = parse_integer<std::uint64_t>(value, where);
        else throw ConstructionError(where + ": unknown key '" + key + "'");
    }
    flush();
    return scenarios;
}

std::vector<ScenarioConfig> apply_filters(std::vector<ScenarioConfig> scenarios,
                                          const std::vector<std::string>& filters) {
    for (const std::string& filter : filters) {
        const auto eq = filter.find('=');
        if (eq == std::string::npos) {
            throw ContractError("filter '" + filter + "' is not of the form key=value");
        }
        const std::string key = trim(filter.substr(0, eq));
        const std::string value = trim(filter.substr(eq + 1));

        auto keep = [&](const ScenarioConfig& s) -> bool {
            if (key == "repair") return repair_mode_name(s.repair) == value;
            if (key == "pattern") return pattern_name(s.pattern) == value;
            if (key == "pa") return std::to_string(s.pa) == value;
            if (key == "pb") return std::to_string(s.pb) == value;
            if (key == "tw") return std::to_string(s.tw) == value;
            if (key == "stages") return std::to_string(s.stages) == value;
            if (key == "name") return s.name == value;
            throw ContractError("unknown filter key '" + key + "'");
        };
        scenarios.erase(std::remove_if(scenarios.begin(), scenarios.end(),
                                       [&](const ScenarioConfig& s) { return !keep(s); }),
                        scenarios.end());
    }
    return scenarios;
}

} // namespace minifab
