#pragma once

#include <limits>

namespace minifab::devs {

/// Simulation clock in minutes. Event-time equality is exact (no
/// epsilon): the imminent set is defined by bitwise-equal next-event
/// times.
using VirtualTime = double;

/// Time advance of a passive component; compares greater than every
/// finite time.
inline constexpr VirtualTime kInfiniteTime = std::numeric_limits<double>::infinity();

inline bool is_passive(VirtualTime t) { return t == kInfiniteTime; }

} // namespace minifab::devs
