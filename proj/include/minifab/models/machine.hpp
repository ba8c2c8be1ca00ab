#pragma once

#include "minifab/devs/atomic.hpp"
#include "minifab/lots.hpp"
#include "minifab/rng.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minifab::models {

enum class MachinePhase { Idle, Loading, Processing, Unloading, Transporting, Repair };

std::string_view machine_phase_name(MachinePhase phase);

struct PhaseDurations {
    double load = 0.0;
    double process = 0.0;
    double unload = 0.0;
    double transport = 0.0;
};

/// Uniform multiplicative noise: each phase duration is scaled by
/// (1 + u) with u ~ U[-parameter, +parameter], sampled at phase start.
struct JitterSpec {
    double parameter = 0.0;
};

struct RepairPolicy {
    enum class Kind { None, AfterLots, Mtbf };

    Kind kind = Kind::None;
    std::int64_t batch_count = 0;  // AfterLots: repair after every n-th completed batch
    double mean_minutes = 0.0;     // Mtbf: mean operating time between failures
    double duration_minutes = 0.0; // repair duration

    static RepairPolicy none() { return {}; }
    static RepairPolicy after_lots(std::int64_t count, double duration) {
        return {Kind::AfterLots, count, 0.0, duration};
    }
    static RepairPolicy mtbf(double mean, double duration) {
        return {Kind::Mtbf, 0, mean, duration};
    }
};

struct MachineConfig {
    char machine_id = 'a'; // 'a'..'e'
    std::map<int, PhaseDurations> step_durations;
    std::optional<JitterSpec> jitter;
    RepairPolicy repair;
};

/// Processing machine. Batches queue FIFO on port "in"; the head batch
/// runs the non-interruptible Loading, Processing, Unloading,
/// Transporting phases for its step and is then emitted, advanced to
/// the next step, on port "done<step>".
///
/// Repair AfterLots(n, d): after every n-th completed batch the machine
/// repairs for d minutes before loading the next one. Repair Mtbf(m, d):
/// an exponential failure clock with mean m runs whenever the machine is
/// not repairing; once expired, repair starts at the next boundary
/// between batches (immediately when idle) and the clock is resampled
/// when repair ends.
///
/// Pending work (queued + in-service batches) is published on port
/// "status" whenever it changes; changes caused by arrivals are
/// published through a zero-time internal event.
class Machine final : public devs::Atomic {
public:
    explicit Machine(MachineConfig config);

    void initialize(std::uint64_t seed) override;
    devs::VirtualTime time_advance() const override;
    devs::EventBag output() const override;
    void internal_transition() override;
    void external_transition(devs::VirtualTime elapsed, const devs::EventBag& inputs) override;

    std::vector<std::string> input_ports() const override { return {"in"}; }
    std::vector<std::string> output_ports() const override;

    const MachineConfig& config() const { return config_; }

private:
    bool uses_mtbf() const { return config_.repair.kind == RepairPolicy::Kind::Mtbf; }
    std::int64_t pending_work() const {
        return static_cast<std::int64_t>(queue_.size()) + (active_ ? 1 : 0);
    }

    double scaled(double base);
    void advance_clocks(double elapsed);
    void set_phase(MachinePhase phase, double duration);
    void start_next_batch();
    void enter_repair();
    void complete_active_batch();
    Batch advanced_batch() const;

    MachineConfig config_;
    SplitMix64 rng_{0};

    std::deque<Batch> queue_;
    std::optional<Batch> active_;
    MachinePhase phase_ = MachinePhase::Idle;
    double phase_remaining_ = 0.0;
    bool emit_status_ = false;

    std::int64_t completed_batches_ = 0;
    std::int64_t batches_since_repair_ = 0;
    double failure_remaining_ = 0.0; // Mtbf only; frozen during Repair
};

} // namespace minifab::models
