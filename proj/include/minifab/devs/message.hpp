#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minifab::devs {

/// Immutable payload carried by an event. Payloads are shared between
/// the bags of all coupling targets, so concrete messages must not be
/// mutated after construction.
struct Message {
    virtual ~Message() = default;

    /// Deterministic human-readable rendering used by trace records.
    virtual std::string text() const = 0;
};

using MessagePtr = std::shared_ptr<const Message>;

struct CountMessage final : Message {
    std::int64_t value;

    explicit CountMessage(std::int64_t v) : value(v) {}
    std::string text() const override { return std::to_string(value); }
};

struct PortEvent {
    std::string port;
    MessagePtr payload;
};

/// Multiset of (port, payload) entries exchanged at one instant.
/// Multiple entries on the same port are preserved in insertion order;
/// the kernel inserts in a deterministic order.
class EventBag {
public:
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    void add(std::string port, MessagePtr payload) {
        entries_.push_back({std::move(port), std::move(payload)});
    }

    const std::vector<PortEvent>& entries() const { return entries_; }

    std::vector<MessagePtr> on(std::string_view port) const {
        std::vector<MessagePtr> out;
        for (const auto& entry : entries_) {
            if (entry.port == port) out.push_back(entry.payload);
        }
        return out;
    }

    void clear() { entries_.clear(); }

private:
    std::vector<PortEvent> entries_;
};

} // namespace minifab::devs
