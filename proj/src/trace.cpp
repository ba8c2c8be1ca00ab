#include "minifab/devs/trace.hpp"

#include <algorithm>
#include <charconv>

namespace minifab::devs {

namespace {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

std::string trace_value_text(const TraceValue& v) {
    switch (v.index()) {
    case 0: return std::to_string(std::get<std::int64_t>(v));
    case 1: return format_double(std::get<double>(v));
    default: return std::get<std::string>(v);
    }
}

bool trace_value_is_numeric(const TraceValue& v) { return v.index() != 2; }

double trace_value_number(const TraceValue& v) {
    if (v.index() == 0) return static_cast<double>(std::get<std::int64_t>(v));
    return std::get<double>(v);
}

void EventTrace::finalize() {
    std::stable_sort(records_.begin(), records_.end(),
                     [](const TraceRecord& a, const TraceRecord& b) {
                         if (a.time != b.time) return a.time < b.time;
                         return a.component < b.component;
                     });
}

bool operator==(const TraceRecord& a, const TraceRecord& b) {
    return a.time == b.time && a.component == b.component && a.kind == b.kind &&
           a.variable == b.variable && a.value == b.value;
}

} // namespace minifab::devs
