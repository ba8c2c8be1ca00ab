#pragma once

#include "minifab/devs/time.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace minifab::devs {

enum class RecordKind { Output, StateChange };

using TraceValue = std::variant<std::int64_t, double, std::string>;

std::string trace_value_text(const TraceValue& v);
bool trace_value_is_numeric(const TraceValue& v);
double trace_value_number(const TraceValue& v);

/// One observation: an output event or a recorded state variable of a
/// component at an instant.
struct TraceRecord {
    VirtualTime time;
    std::string component; // dotted path relative to the network root
    RecordKind kind;
    std::string variable;  // port name for outputs, variable name otherwise
    TraceValue value;
};

/// Full simulation trace. Records are in non-decreasing time order;
/// ties are ordered by component path, with per-component append order
/// preserved.
class EventTrace {
public:
    void append(TraceRecord record) { records_.push_back(std::move(record)); }

    const std::vector<TraceRecord>& records() const { return records_; }
    bool empty() const { return records_.empty(); }
    std::size_t size() const { return records_.size(); }

    /// Stable sort by (time, component path).
    void finalize();

private:
    std::vector<TraceRecord> records_;
};

bool operator==(const TraceRecord& a, const TraceRecord& b);

} // namespace minifab::devs
