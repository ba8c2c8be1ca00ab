#include "minifab/models/generator.hpp"

#include "minifab/errors.hpp"

#include <algorithm>
#include <memory>

namespace minifab::models {

LotGenerator::LotGenerator(GeneratorConfig config) : config_(std::move(config)) {
    if (config_.period_minutes <= 0.0) {
        throw ConstructionError("generator period must be positive");
    }
    if (config_.total_lots < 0) {
        throw ConstructionError("generator total lot count must be non-negative");
    }
}

devs::VirtualTime LotGenerator::time_advance() const {
    return emitted_ < config_.total_lots ? config_.period_minutes : devs::kInfiniteTime;
}

std::int64_t LotGenerator::next_emission_size() const {
    const std::int64_t remaining = config_.total_lots - emitted_;
    const std::int64_t size = config_.pattern == GeneratorPattern::Uniform
                                  ? 1
                                  : kSinusoidalCycle[cycle_position_ % kSinusoidalCycle.size()];
    return std::min(size, remaining);
}

devs::EventBag LotGenerator::output() const {
    devs::EventBag bag;
    const std::int64_t size = next_emission_size();
    for (std::int64_t i = 0; i < size; ++i) {
        WaferLot lot;
        lot.id = config_.id_base + emitted_ + i;
        lot.type = config_.lot_type;
        lot.created_at = now();
        lot.stage_entered_at = now();
        bag.add("out", std::make_shared<LotMessage>(std::move(lot)));
    }
    return bag;
}

void LotGenerator::internal_transition() {
    emitted_ += next_emission_size();
    ++cycle_position_;
    record("lots_generated", emitted_);
}

void LotGenerator::external_transition(devs::VirtualTime, const devs::EventBag&) {
    // no input ports; unreachable
}

} // namespace minifab::models
