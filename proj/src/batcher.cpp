#include "minifab/models/batcher.hpp"

#include "minifab/errors.hpp"

#include <memory>

namespace minifab::models {

devs::VirtualTime Batcher::time_advance() const {
    return queue_.size() >= Batch::kSize ? 0.0 : devs::kInfiniteTime;
}

devs::EventBag Batcher::output() const {
    devs::EventBag bag;
    const std::size_t full = queue_.size() / Batch::kSize;
    for (std::size_t b = 0; b < full; ++b) {
        Batch batch;
        batch.step = 1;
        for (std::size_t i = 0; i < Batch::kSize; ++i) {
            WaferLot lot = queue_[b * Batch::kSize + i];
            lot.current_step = 1;
            batch.lots.push_back(std::move(lot));
        }
        bag.add("out", std::make_shared<BatchMessage>(std::move(batch)));
    }
    return bag;
}

void Batcher::internal_transition() {
    const std::size_t released = (queue_.size() / Batch::kSize) * Batch::kSize;
    queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(released));
    record("queued_lots", static_cast<std::int64_t>(queue_.size()));
}

void Batcher::ingest(WaferLot lot) {
    lot.stage_entered_at = now();
    lot.current_step = 0;
    lot.completed_at.reset();
    queue_.push_back(std::move(lot));
}

void Batcher::external_transition(devs::VirtualTime, const devs::EventBag& inputs) {
    for (const devs::PortEvent& entry : inputs.entries()) {
        if (const auto* lot = dynamic_cast<const LotMessage*>(entry.payload.get())) {
            ingest(lot->lot);
        } else if (const auto* batch = dynamic_cast<const BatchMessage*>(entry.payload.get())) {
            for (const WaferLot& member : batch->batch.lots) ingest(member);
        } else {
            throw ModelError(component_path() + ": unsupported payload on port 'in'");
        }
    }
    record("queued_lots", static_cast<std::int64_t>(queue_.size()));
}

} // namespace minifab::models
