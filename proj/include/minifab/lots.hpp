#pragma once

#include "minifab/devs/message.hpp"
#include "minifab/devs/time.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minifab {

enum class LotType { Pa, Pb, Tw };

std::string_view lot_type_name(LotType type);

/// A carrier of wafers flowing through the factory. Lots keep their
/// identity across cascade stages; currentStep resets to 0 whenever a
/// lot re-enters batching.
struct WaferLot {
    std::int64_t id = 0;
    LotType type = LotType::Pa;
    devs::VirtualTime created_at = 0.0;
    devs::VirtualTime stage_entered_at = 0.0;
    std::optional<devs::VirtualTime> completed_at;
    int current_step = 0; // 0 = not yet batched
};

/// Exactly three lots processed together; all members share the step.
struct Batch {
    std::vector<WaferLot> lots;
    int step = 1; // 1..6

    static constexpr int kSize = 3;
    static constexpr int kLastStep = 6;
};

struct LotMessage final : devs::Message {
    WaferLot lot;

    explicit LotMessage(WaferLot l) : lot(std::move(l)) {}
    std::string text() const override;
};

struct BatchMessage final : devs::Message {
    Batch batch;

    explicit BatchMessage(Batch b) : batch(std::move(b)) {}
    std::string text() const override;
};

} // namespace minifab
