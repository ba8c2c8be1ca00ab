#pragma once

#include "minifab/devs/coupled.hpp"
#include "minifab/models/generator.hpp"
#include "minifab/models/machine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minifab {

enum class RepairMode { ProcessingSteps, Mtbf, NoRepair };

std::string_view repair_mode_name(RepairMode mode);
RepairMode repair_mode_from_name(std::string_view name);
std::string_view pattern_name(models::GeneratorPattern pattern);
models::GeneratorPattern pattern_from_name(std::string_view name);

/// One experiment definition of the benchmark suite.
struct ScenarioConfig {
    std::string name;
    std::int64_t pa = 0;
    std::int64_t pb = 0;
    std::int64_t tw = 0;
    RepairMode repair = RepairMode::NoRepair;
    models::GeneratorPattern pattern = models::GeneratorPattern::Uniform;
    int stages = 8;
    std::int64_t horizon_minutes = 25000;
    std::uint64_t seed = 0;
};

/// Lot counts permitted per product type.
const std::vector<std::int64_t>& permitted_pa_pb_counts();
const std::vector<std::int64_t>& permitted_tw_counts();

/// Raises ConstructionError when lot counts are outside the permitted
/// sets or stage/horizon values are not positive.
void validate_scenario(const ScenarioConfig& config);

/// Generation periods in minutes (8 h, 16 h, 24 h).
inline constexpr double kPaPeriodMinutes = 480.0;
inline constexpr double kPbPeriodMinutes = 960.0;
inline constexpr double kTwPeriodMinutes = 1440.0;

/// Default phase durations and repair parameters for the benchmark
/// suite; the same values ship in data/machine_defaults.txt.
models::MachineConfig default_machine_config(char machine_id, RepairMode repair);

/// Single MiniFab stage: generators (stage 1) or an input port (later
/// stages), batcher, the two dispatchers with machine pairs a/b and
/// c/d, lithography machine e, and a stage observer. Couplings realize
/// the step order 1(diffusion) -> 2(implantation) -> 3(lithography) ->
/// 4(implantation) -> 5(diffusion) -> 6(lithography) -> stage output.
/// `with_observer = false` builds the same network without the observer
/// (used to verify observer passivity).
devs::CoupledSpec build_single_stage(const ScenarioConfig& config, int stage_index,
                                     bool with_observer = true);

/// Linear cascade of `config.stages` single-stage models; completed
/// lots of stage i re-enter batching in stage i+1. A network-level
/// observer tracks overall factory completions.
devs::CoupledSpec build_cascade(const ScenarioConfig& config);

/// One lot-count tuple per line: "pa,pb,tw", '#' comments.
struct LotTuple {
    std::int64_t pa = 0;
    std::int64_t pb = 0;
    std::int64_t tw = 0;
};

std::vector<LotTuple> load_lot_tuples(const std::string& path);

/// Path of the canonical 93-tuple benchmark file shipped with the
/// repository.
std::string default_lot_tuple_file();

/// Path of the machine defaults file shipped with the repository.
std::string default_machine_defaults_file();

inline constexpr std::uint64_t kDefaultMasterSeed = 20240 * 1000 + 372;

/// The benchmark scenario list: every lot tuple crossed with the four
/// (repair, generation) rows, named s001.. in tuple-major order. Seeds
/// derive from the master seed and the scenario name, so subsets keep
/// their results.
std::vector<ScenarioConfig> enumerate_scenarios(const std::string& lot_file = default_lot_tuple_file(),
                                                std::uint64_t master_seed = kDefaultMasterSeed);

} // namespace minifab
