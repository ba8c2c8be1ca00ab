#pragma once

#include "minifab/devs/atomic.hpp"
#include "minifab/lots.hpp"

#include <cstdint>

namespace minifab::models {

/// Pure observer. Receives copies of lot/batch events on "entered" and
/// "completed", maintains counters, and records the derived variables
/// lots_entered, cumulative_completed, wip, throughput (completed lots
/// per elapsed minute) and turnaround (mean creation-to-completion time
/// over completed lots). Produces no output, so removing it cannot
/// influence the factory.
class Transducer final : public devs::Atomic {
public:
    devs::VirtualTime time_advance() const override { return devs::kInfiniteTime; }
    devs::EventBag output() const override { return {}; }
    void internal_transition() override {}
    void external_transition(devs::VirtualTime elapsed, const devs::EventBag& inputs) override;

    std::vector<std::string> input_ports() const override { return {"entered", "completed"}; }
    std::vector<std::string> output_ports() const override { return {}; }

private:
    std::int64_t lots_entered_ = 0;
    std::int64_t lots_completed_ = 0;
    double turnaround_sum_ = 0.0;
};

} // namespace minifab::models
