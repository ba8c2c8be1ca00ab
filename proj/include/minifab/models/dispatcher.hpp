#pragma once

#include "minifab/devs/atomic.hpp"
#include "minifab/lots.hpp"

#include <cstdint>
#include <vector>

namespace minifab::models {

/// Zero-time coordinator in front of a machine pair. Every batch
/// arriving on "in" is forwarded in the same virtual instant on "out_a"
/// or "out_b", whichever machine last reported the shorter pending-work
/// queue (ports "status_a"/"status_b"); ties go to the first machine.
/// Several batches in one bag are assigned in order, each assignment
/// bumping the local queue estimate.
class Dispatcher final : public devs::Atomic {
public:
    devs::VirtualTime time_advance() const override;
    devs::EventBag output() const override;
    void internal_transition() override;
    void external_transition(devs::VirtualTime elapsed, const devs::EventBag& inputs) override;

    std::vector<std::string> input_ports() const override { return {"in", "status_a", "status_b"}; }
    std::vector<std::string> output_ports() const override { return {"out_a", "out_b"}; }

private:
    // true = first target
    std::vector<bool> plan_assignments() const;

    std::vector<Batch> pending_;
    std::int64_t queue_a_ = 0;
    std::int64_t queue_b_ = 0;
    std::int64_t dispatched_ = 0;
};

} // namespace minifab::models
