#pragma once

#include "minifab/devs/atomic.hpp"
#include "minifab/lots.hpp"

#include <vector>

namespace minifab::models {

/// Collects lots FIFO regardless of type on port "in" and releases a
/// batch of exactly three on port "out" in the same instant the third
/// lot becomes available. Incoming batches (cascade hand-off from the
/// previous stage) are dissolved and their lots re-enter the queue with
/// currentStep reset to 0.
class Batcher final : public devs::Atomic {
public:
    devs::VirtualTime time_advance() const override;
    devs::EventBag output() const override;
    void internal_transition() override;
    void external_transition(devs::VirtualTime elapsed, const devs::EventBag& inputs) override;

    std::vector<std::string> input_ports() const override { return {"in"}; }
    std::vector<std::string> output_ports() const override { return {"out"}; }

private:
    void ingest(WaferLot lot);

    std::vector<WaferLot> queue_;
};

} // namespace minifab::models
