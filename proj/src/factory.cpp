#include "minifab/factory.hpp"

#include "minifab/errors.hpp"
#include "minifab/models/batcher.hpp"
#include "minifab/models/dispatcher.hpp"
#include "minifab/models/transducer.hpp"
#include "minifab/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#ifndef MINIFAB_DATA_DIR
#define MINIFAB_DATA_DIR "data"
#endif

namespace minifab {

using models::Batcher;
using models::Dispatcher;
using models::GeneratorConfig;
using models::GeneratorPattern;
using models::LotGenerator;
using models::Machine;
using models::MachineConfig;
using models::RepairPolicy;
using models::Transducer;

std::string_view repair_mode_name(RepairMode mode) {
    switch (mode) {
    case RepairMode::ProcessingSteps: return "ProcessingSteps";
    case RepairMode::Mtbf: return "MTBF";
    default: return "NoRepair";
    }
}

RepairMode repair_mode_from_name(std::string_view name) {
    if (name == "ProcessingSteps") return RepairMode::ProcessingSteps;
    if (name == "MTBF") return RepairMode::Mtbf;
    if (name == "NoRepair") return RepairMode::NoRepair;
    throw ConstructionError("unknown repair mode '" + std::string(name) + "'");
}

std::string_view pattern_name(GeneratorPattern pattern) {
    return pattern == GeneratorPattern::Uniform ? "Uniform" : "Sinusoidal";
}

GeneratorPattern pattern_from_name(std::string_view name) {
    if (name == "Uniform") return GeneratorPattern::Uniform;
    if (name == "Sinusoidal") return GeneratorPattern::Sinusoidal;
    throw ConstructionError("unknown generation pattern '" + std::string(name) + "'");
}

const std::vector<std::int64_t>& permitted_pa_pb_counts() {
    static const std::vector<std::int64_t> counts{0,  2,  3,  6,  9,  12, 18, 24, 27,
                                                  30, 36, 45, 48, 54, 60, 72, 81, 90};
    return counts;
}

const std::vector<std::int64_t>& permitted_tw_counts() {
    static const std::vector<std::int64_t> counts{0, 1, 3, 6, 9, 12, 15, 18, 27};
    return counts;
}

namespace {

bool in_set(const std::vector<std::int64_t>& set, std::int64_t v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

} // namespace

void validate_scenario(const ScenarioConfig& config) {
    if (!in_set(permitted_pa_pb_counts(), config.pa)) {
        throw ConstructionError("scenario '" + config.name + "': Pa count " +
                                std::to_string(config.pa) + " is not permitted");
    }
    if (!in_set(permitted_pa_pb_counts(), config.pb)) {
        throw ConstructionError("scenario '" + config.name + "': Pb count " +
                                std::to_string(config.pb) + " is not permitted");
    }
    if (!in_set(permitted_tw_counts(), config.tw)) {
        throw ConstructionError("scenario '" + config.name + "': Tw count " +
                                std::to_string(config.tw) + " is not permitted");
    }
    if (config.stages < 1) {
        throw ConstructionError("scenario '" + config.name + "': stage count must be >= 1");
    }
    if (config.horizon_minutes < 1) {
        throw ConstructionError("scenario '" + config.name + "': horizon must be >= 1 minute");
    }
}

models::MachineConfig default_machine_config(char machine_id, RepairMode repair) {
    MachineConfig config;
    config.machine_id = machine_id;
    switch (machine_id) {
    case 'a':
    case 'b':
        config.step_durations[1] = {10.0, 60.0, 10.0, 5.0};
        config.step_durations[5] = {10.0, 60.0, 10.0, 5.0};
        break;
    case 'c':
    case 'd':
        config.step_durations[2] = {10.0, 50.0, 10.0, 5.0};
        config.step_durations[4] = {10.0, 50.0, 10.0, 5.0};
        break;
    case 'e':
        config.step_durations[3] = {10.0, 40.0, 10.0, 5.0};
        config.step_durations[6] = {10.0, 40.0, 10.0, 5.0};
        break;
    default: throw ConstructionError("machine id must be one of a..e");
    }
    switch (repair) {
    case RepairMode::ProcessingSteps: config.repair = RepairPolicy::after_lots(5, 60.0); break;
    case RepairMode::Mtbf: config.repair = RepairPolicy::mtbf(2880.0, 120.0); break;
    case RepairMode::NoRepair: config.repair = RepairPolicy::none(); break;
    }
    return config;
}

namespace {

devs::AtomicFactory make_generator(LotType type, double period, std::int64_t total,
                                   GeneratorPattern pattern, std::int64_t id_base) {
    GeneratorConfig config{type, period, total, pattern, id_base};
    return [config] { return std::make_unique<LotGenerator>(config); };
}

devs::AtomicFactory make_machine(char id, RepairMode repair) {
    MachineConfig config = default_machine_config(id, repair);
    return [config] { return std::make_unique<Machine>(config); };
}

} // namespace

devs::CoupledSpec build_single_stage(const ScenarioConfig& config, int stage_index,
                                     bool with_observer) {
    validate_scenario(config);
    devs::CoupledSpec stage("stage" + std::to_string(stage_index));

    const bool has_generators = stage_index == 1;
    if (has_generators) {
        stage.add_atomic("gen_pa", make_generator(LotType::Pa, kPaPeriodMinutes, config.pa,
                                                  config.pattern, 1000000));
        stage.add_atomic("gen_pb", make_generator(LotType::Pb, kPbPeriodMinutes, config.pb,
                                                  config.pattern, 2000000));
        stage.add_atomic("gen_tw", make_generator(LotType::Tw, kTwPeriodMinutes, config.tw,
                                                  config.pattern, 3000000));
        stage.add_output_port("generated");
    } else {
        stage.add_input_port("in");
    }
    stage.add_output_port("out");

    stage.add_atomic("batcher", [] { return std::make_unique<Batcher>(); });
    stage.add_atomic("dispatch_diffusion", [] { return std::make_unique<Dispatcher>(); });
    stage.add_atomic("dispatch_implant", [] { return std::make_unique<Dispatcher>(); });
    stage.add_atomic("machine_a", make_machine('a', config.repair));
    stage.add_atomic("machine_b", make_machine('b', config.repair));
    stage.add_atomic("machine_c", make_machine('c', config.repair));
    stage.add_atomic("machine_d", make_machine('d', config.repair));
    stage.add_atomic("machine_e", make_machine('e', config.repair));
    if (with_observer) {
        stage.add_atomic("observer", [] { return std::make_unique<Transducer>(); });
    }

    if (has_generators) {
        for (const char* generator : {"gen_pa", "gen_pb", "gen_tw"}) {
            stage.couple(generator, "out", "batcher", "in");
            if (with_observer) stage.couple(generator, "out", "observer", "entered");
            stage.couple_output(generator, "out", "generated");
        }
    } else {
        stage.couple_input("in", "batcher", "in");
        if (with_observer) stage.couple_input("in", "observer", "entered");
    }

    // step 1: diffusion pair
    stage.couple("batcher", "out", "dispatch_diffusion", "in");
    stage.couple("dispatch_diffusion", "out_a", "machine_a", "in");
    stage.couple("dispatch_diffusion", "out_b", "machine_b", "in");
    stage.couple("machine_a", "status", "dispatch_diffusion", "status_a");
    stage.couple("machine_b", "status", "dispatch_diffusion", "status_b");

    // step 2: implantation pair
    stage.couple("machine_a", "done1", "dispatch_implant", "in");
    stage.couple("machine_b", "done1", "dispatch_implant", "in");
    stage.couple("dispatch_implant", "out_a", "machine_c", "in");
    stage.couple("dispatch_implant", "out_b", "machine_d", "in");
    stage.couple("machine_c", "status", "dispatch_implant", "status_a");
    stage.couple("machine_d", "status", "dispatch_implant", "status_b");

    // step 3: lithography
    stage.couple("machine_c", "done2", "machine_e", "in");
    stage.couple("machine_d", "done2", "machine_e", "in");

    // step 4: feedback to the implantation pair
    stage.couple("machine_e", "done3", "dispatch_implant", "in");

    // step 5: feedback to the diffusion pair
    stage.couple("machine_c", "done4", "dispatch_diffusion", "in");
    stage.couple("machine_d", "done4", "dispatch_diffusion", "in");

    // step 6: lithography, then out
    stage.couple("machine_a", "done5", "machine_e", "in");
    stage.couple("machine_b", "done5", "machine_e", "in");
    if (with_observer) stage.couple("machine_e", "done6", "observer", "completed");
    stage.couple_output("machine_e", "done6", "out");

    return stage;
}

devs::CoupledSpec build_cascade(const ScenarioConfig& config) {
    validate_scenario(config);
    devs::CoupledSpec root("minifab");

    for (int i = 1; i <= config.stages; ++i) {
        root.add_coupled("stage" + std::to_string(i), build_single_stage(config, i));
    }
    root.add_atomic("observer", [] { return std::make_unique<Transducer>(); });

    for (int i = 2; i <= config.stages; ++i) {
        root.couple("stage" + std::to_string(i - 1), "out", "stage" + std::to_string(i), "in");
    }
    root.couple("stage1", "generated", "observer", "entered");
    root.couple("stage" + std::to_string(config.stages), "out", "observer", "completed");

    return root;
}

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("MINIFAB_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return MINIFAB_DATA_DIR;
}

} // namespace

std::string default_lot_tuple_file() { return data_dir() + "/lot_configurations.txt"; }

std::string default_machine_defaults_file() { return data_dir() + "/machine_defaults.txt"; }

std::vector<LotTuple> load_lot_tuples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lot configuration file '" + path + "'");

    std::vector<LotTuple> tuples;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty()) continue;

        LotTuple tuple;
        char comma1 = 0;
        char comma2 = 0;
        std::istringstream fields(trimmed);
        if (!(fields >> tuple.pa >> comma1 >> tuple.pb >> comma2 >> tuple.tw) || comma1 != ',' ||
            comma2 != ',' || fields.rdbuf()->in_avail() != 0) {
            throw ConstructionError(path + ":" + std::to_string(line_number) +
                                    ": expected 'pa,pb,tw'");
        }
        tuples.push_back(tuple);
    }
    return tuples;
}

std::vector<ScenarioConfig> enumerate_scenarios(const std::string& lot_file,
                                                std::uint64_t master_seed) {
    const std::vector<LotTuple> tuples = load_lot_tuples(lot_file);

    struct Row {
        RepairMode repair;
        GeneratorPattern pattern;
    };
    static constexpr Row kRows[] = {
        {RepairMode::ProcessingSteps, GeneratorPattern::Uniform},
        {RepairMode::Mtbf, GeneratorPattern::Uniform},
        {RepairMode::NoRepair, GeneratorPattern::Uniform},
        {RepairMode::NoRepair, GeneratorPattern::Sinusoidal},
    };

    const std::size_t total = tuples.size() * 4;
    std::size_t width = 3;
    for (std::size_t t = total; t >= 1000; t /= 10) ++width;

    std::vector<ScenarioConfig> scenarios;
    scenarios.reserve(total);
    std::size_t index = 0;
    for (const LotTuple& tuple : tuples) {
        for (const Row& row : kRows) {
            ++index;
            ScenarioConfig config;
            std::string digits = std::to_string(index);
            config.name = "s" + std::string(width - std::min(width, digits.size()), '0') + digits;
            config.pa = tuple.pa;
            config.pb = tuple.pb;
            config.tw = tuple.tw;
            config.repair = row.repair;
            config.pattern = row.pattern;
            config.seed = derive_component_seed(master_seed, config.name);
            validate_scenario(config);
            scenarios.push_back(std::move(config));
        }
    }
    return scenarios;
}

} // namespace minifab
