#pragma once

#include "minifab/devs/coupled.hpp"
#include "minifab/devs/trace.hpp"

#include <cstdint>

namespace minifab::devs {

/// Validates the network and raises ConstructionError on unknown
/// components or ports, malformed names, or self-loop couplings.
void validate_network(const CoupledSpec& root);

/// Runs the PDEVS cycle on the hierarchical network until the minimum
/// next-event time exceeds end_time. At each global event time the
/// imminent components produce outputs, outputs are routed through the
/// coupling relations, and each affected component applies exactly one
/// of the internal/external/confluent transitions. Identical
/// (root, end_time, seed) inputs yield a byte-identical trace.
EventTrace simulate(const CoupledSpec& root, VirtualTime end_time, std::uint64_t seed);

/// Returns the behaviorally equivalent single-level network: atomic
/// components keyed by their dotted path with transitively resolved
/// couplings. Simulating the result reproduces the hierarchical trace.
CoupledSpec flatten(const CoupledSpec& root);

} // namespace minifab::devs
