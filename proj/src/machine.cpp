#include "minifab/models/machine.hpp"

#include "minifab/errors.hpp"

#include <cassert>
#include <memory>

namespace minifab::models {

namespace {

bool machine_serves(char id, int step) {
    switch (id) {
    case 'a':
    case 'b': return step == 1 || step == 5;
    case 'c':
    case 'd': return step == 2 || step == 4;
    case 'e': return step == 3 || step == 6;
    default: return false;
    }
}

} // namespace

std::string_view machine_phase_name(MachinePhase phase) {
    switch (phase) {
    case MachinePhase::Idle: return "Idle";
    case MachinePhase::Loading: return "Loading";
    case MachinePhase::Processing: return "Processing";
    case MachinePhase::Unloading: return "Unloading";
    case MachinePhase::Transporting: return "Transporting";
    default: return "Repair";
    }
}

Machine::Machine(MachineConfig config) : config_(std::move(config)) {
    if (config_.machine_id < 'a' || config_.machine_id > 'e') {
        throw ConstructionError("machine id must be one of a..e");
    }
    if (config_.step_durations.empty()) {
        throw ConstructionError("machine has no configured steps");
    }
    for (const auto& [step, durations] : config_.step_durations) {
        if (!machine_serves(config_.machine_id, step)) {
            throw ConstructionError("machine '" + std::string(1, config_.machine_id) +
                                    "' cannot serve step " + std::to_string(step));
        }
        if (durations.load <= 0.0 || durations.process <= 0.0 || durations.unload <= 0.0 ||
            durations.transport <= 0.0) {
            throw ConstructionError("phase durations must be positive");
        }
    }
    if (config_.jitter && (config_.jitter->parameter < 0.0 || config_.jitter->parameter >= 1.0)) {
        throw ConstructionError("jitter parameter must lie in [0, 1)");
    }
    const RepairPolicy& repair = config_.repair;
    switch (repair.kind) {
    case RepairPolicy::Kind::AfterLots:
        if (repair.batch_count < 1) throw ConstructionError("repair batch count must be >= 1");
        if (repair.duration_minutes <= 0.0) throw ConstructionError("repair duration must be positive");
        break;
    case RepairPolicy::Kind::Mtbf:
        if (repair.mean_minutes <= 0.0) throw ConstructionError("mean time between failures must be positive");
        if (repair.duration_minutes <= 0.0) throw ConstructionError("repair duration must be positive");
        break;
    case RepairPolicy::Kind::None: break;
    }
}

std::vector<std::string> Machine::output_ports() const {
    std::vector<std::string> ports{"status"};
    for (const auto& [step, durations] : config_.step_durations) {
        ports.push_back("done" + std::to_string(step));
    }
    return ports;
}

void Machine::initialize(std::uint64_t seed) {
    rng_ = SplitMix64(seed);
    if (uses_mtbf()) {
        failure_remaining_ = rng_.next_exponential(config_.repair.mean_minutes);
    }
    record("phase", std::string(machine_phase_name(phase_)));
}

devs::VirtualTime Machine::time_advance() const {
    if (emit_status_) return 0.0;
    if (phase_ == MachinePhase::Idle) {
        assert(queue_.empty());
        return uses_mtbf() ? failure_remaining_ : devs::kInfiniteTime;
    }
    return phase_remaining_;
}

double Machine::scaled(double base) {
    if (!config_.jitter || config_.jitter->parameter == 0.0) return base;
    const double p = config_.jitter->parameter;
    return base * (1.0 + rng_.next_uniform(-p, p));
}

void Machine::advance_clocks(double elapsed) {
    if (elapsed <= 0.0) return;
    if (uses_mtbf() && phase_ != MachinePhase::Repair) failure_remaining_ -= elapsed;
    if (phase_ != MachinePhase::Idle) phase_remaining_ -= elapsed;
}

void Machine::set_phase(MachinePhase phase, double duration) {
    phase_ = phase;
    phase_remaining_ = duration;
    record("phase", std::string(machine_phase_name(phase)));
}

void Machine::start_next_batch() {
    if (queue_.empty()) return;
    active_ = std::move(queue_.front());
    queue_.pop_front();
    set_phase(MachinePhase::Loading, scaled(config_.step_durations.at(active_->step).load));
}

void Machine::enter_repair() {
    batches_since_repair_ = 0;
    set_phase(MachinePhase::Repair, config_.repair.duration_minutes);
}

Batch Machine::advanced_batch() const {
    Batch out = *active_;
    if (out.step < Batch::kLastStep) {
        out.step += 1;
        for (WaferLot& lot : out.lots) lot.current_step = out.step;
    } else {
        for (WaferLot& lot : out.lots) lot.completed_at = now();
    }
    return out;
}

devs::EventBag Machine::output() const {
    devs::EventBag bag;
    if (emit_status_) {
        bag.add("status", std::make_shared<devs::CountMessage>(pending_work()));
        return bag;
    }
    if (phase_ == MachinePhase::Transporting) {
        bag.add("done" + std::to_string(active_->step),
                std::make_shared<BatchMessage>(advanced_batch()));
    }
    return bag;
}

void Machine::complete_active_batch() {
    ++completed_batches_;
    ++batches_since_repair_;
    record("completed_batches", completed_batches_);

    active_.reset();
    const RepairPolicy& repair = config_.repair;
    const bool due_after_lots =
        repair.kind == RepairPolicy::Kind::AfterLots && batches_since_repair_ >= repair.batch_count;
    const bool due_mtbf = uses_mtbf() && failure_remaining_ <= 0.0;
    if (due_after_lots || due_mtbf) {
        enter_repair();
    } else {
        set_phase(MachinePhase::Idle, 0.0);
        start_next_batch();
    }
    emit_status_ = true;
}

void Machine::internal_transition() {
    if (emit_status_) {
        // zero-time status publication; clocks do not advance
        emit_status_ = false;
        return;
    }
    const double elapsed = phase_ == MachinePhase::Idle ? failure_remaining_ : phase_remaining_;
    advance_clocks(elapsed);

    switch (phase_) {
    case MachinePhase::Idle:
        // failure clock expired while idle
        enter_repair();
        break;
    case MachinePhase::Loading:
        set_phase(MachinePhase::Processing, scaled(config_.step_durations.at(active_->step).process));
        break;
    case MachinePhase::Processing:
        set_phase(MachinePhase::Unloading, scaled(config_.step_durations.at(active_->step).unload));
        break;
    case MachinePhase::Unloading:
        set_phase(MachinePhase::Transporting, scaled(config_.step_durations.at(active_->step).transport));
        break;
    case MachinePhase::Transporting:
        // the advanced batch was emitted by output() in this instant
        complete_active_batch();
        break;
    case MachinePhase::Repair:
        if (uses_mtbf()) {
            failure_remaining_ = rng_.next_exponential(config_.repair.mean_minutes);
        }
        batches_since_repair_ = 0;
        set_phase(MachinePhase::Idle, 0.0);
        start_next_batch();
        break;
    }
}

void Machine::external_transition(devs::VirtualTime elapsed, const devs::EventBag& inputs) {
    advance_clocks(elapsed);
    bool received = false;
    for (const devs::PortEvent& entry : inputs.entries()) {
        const auto* message = dynamic_cast<const BatchMessage*>(entry.payload.get());
        if (message == nullptr) {
            throw ModelError(component_path() + ": non-batch payload on 'in'");
        }
        const Batch& batch = message->batch;
        if (config_.step_durations.count(batch.step) == 0) {
            throw ModelError(component_path() + ": machine '" + std::string(1, config_.machine_id) +
                             "' received batch with unserved step " + std::to_string(batch.step));
        }
        if (batch.lots.size() != Batch::kSize) {
            throw ModelError(component_path() + ": batch size must be exactly 3");
        }
        queue_.push_back(batch);
        received = true;
    }
    if (phase_ == MachinePhase::Idle) start_next_batch();
    if (received) emit_status_ = true;
}

} // namespace minifab::models
