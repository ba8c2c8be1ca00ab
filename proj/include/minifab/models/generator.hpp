#pragma once

#include "minifab/devs/atomic.hpp"
#include "minifab/lots.hpp"

#include <array>
#include <cstdint>

namespace minifab::models {

enum class GeneratorPattern { Uniform, Sinusoidal };

struct GeneratorConfig {
    LotType lot_type = LotType::Pa;
    double period_minutes = 480.0;
    std::int64_t total_lots = 0;
    GeneratorPattern pattern = GeneratorPattern::Uniform;
    std::int64_t id_base = 0; // first lot id; keeps ids unique across generators
};

/// Emits wafer lots on port "out" at t = period, 2*period, ... until
/// total_lots have been produced, then passivates. Uniform emits one
/// lot per event; Sinusoidal cycles emission sizes 1,2,3,2,1 and
/// truncates the final emission so the cumulative count lands exactly
/// on total_lots.
class LotGenerator final : public devs::Atomic {
public:
    explicit LotGenerator(GeneratorConfig config);

    devs::VirtualTime time_advance() const override;
    devs::EventBag output() const override;
    void internal_transition() override;
    void external_transition(devs::VirtualTime elapsed, const devs::EventBag& inputs) override;

    std::vector<std::string> input_ports() const override { return {}; }
    std::vector<std::string> output_ports() const override { return {"out"}; }

    static constexpr std::array<int, 5> kSinusoidalCycle{1, 2, 3, 2, 1};

private:
    std::int64_t next_emission_size() const;

    GeneratorConfig config_;
    std::int64_t emitted_ = 0;
    std::size_t cycle_position_ = 0;
};

} // namespace minifab::models
