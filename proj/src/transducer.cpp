#include "minifab/models/transducer.hpp"

#include "minifab/errors.hpp"

namespace minifab::models {

void Transducer::external_transition(devs::VirtualTime, const devs::EventBag& inputs) {
    for (const devs::PortEvent& entry : inputs.entries()) {
        const auto* lot = dynamic_cast<const LotMessage*>(entry.payload.get());
        const auto* batch = dynamic_cast<const BatchMessage*>(entry.payload.get());
        if (lot == nullptr && batch == nullptr) {
            throw ModelError(component_path() + ": unsupported payload on '" + entry.port + "'");
        }
        if (entry.port == "entered") {
            lots_entered_ += lot != nullptr ? 1 : static_cast<std::int64_t>(batch->batch.lots.size());
        } else {
            if (batch == nullptr) {
                throw ModelError(component_path() + ": 'completed' expects batches");
            }
            for (const WaferLot& member : batch->batch.lots) {
                ++lots_completed_;
                turnaround_sum_ += now() - member.created_at;
            }
        }
    }

    record("lots_entered", lots_entered_);
    record("cumulative_completed", lots_completed_);
    record("wip", lots_entered_ - lots_completed_);
    record("throughput", now() > 0.0 ? static_cast<double>(lots_completed_) / now() : 0.0);
    record("turnaround",
           lots_completed_ > 0 ? turnaround_sum_ / static_cast<double>(lots_completed_) : 0.0);
}

} // namespace minifab::models
