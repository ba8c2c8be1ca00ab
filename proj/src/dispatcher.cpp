#include "minifab/models/dispatcher.hpp"

#include "minifab/errors.hpp"

#include <memory>

namespace minifab::models {

devs::VirtualTime Dispatcher::time_advance() const {
    return pending_.empty() ? devs::kInfiniteTime : 0.0;
}

std::vector<bool> Dispatcher::plan_assignments() const {
    std::vector<bool> to_a;
    std::int64_t qa = queue_a_;
    std::int64_t qb = queue_b_;
    to_a.reserve(pending_.size());
    for (std::size_t i = 0; i < pending_.size(); ++i) {
        const bool first = qa <= qb;
        to_a.push_back(first);
        (first ? qa : qb) += 1;
    }
    return to_a;
}

devs::EventBag Dispatcher::output() const {
    devs::EventBag bag;
    const std::vector<bool> to_a = plan_assignments();
    for (std::size_t i = 0; i < pending_.size(); ++i) {
        bag.add(to_a[i] ? "out_a" : "out_b", std::make_shared<BatchMessage>(pending_[i]));
    }
    return bag;
}

void Dispatcher::internal_transition() {
    const std::vector<bool> to_a = plan_assignments();
    for (const bool first : to_a) (first ? queue_a_ : queue_b_) += 1;
    dispatched_ += static_cast<std::int64_t>(pending_.size());
    pending_.clear();
    record("dispatched_batches", dispatched_);
}

void Dispatcher::external_transition(devs::VirtualTime, const devs::EventBag& inputs) {
    // Status reports first so the batches in the same bag are assigned
    // against fresh queue lengths.
    for (const devs::PortEvent& entry : inputs.entries()) {
        if (entry.port != "status_a" && entry.port != "status_b") continue;
        const auto* count = dynamic_cast<const devs::CountMessage*>(entry.payload.get());
        if (count == nullptr) {
            throw ModelError(component_path() + ": non-count payload on '" + entry.port + "'");
        }
        (entry.port == "status_a" ? queue_a_ : queue_b_) = count->value;
    }
    for (const devs::PortEvent& entry : inputs.entries()) {
        if (entry.port != "in") continue;
        const auto* batch = dynamic_cast<const BatchMessage*>(entry.payload.get());
        if (batch == nullptr) {
            throw ModelError(component_path() + ": non-batch payload on 'in'");
        }
        pending_.push_back(batch->batch);
    }
}

} // namespace minifab::models
