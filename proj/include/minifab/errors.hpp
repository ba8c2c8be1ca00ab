#pragma once

#include <stdexcept>
#include <string>

namespace minifab {

/// A model violated its behavioral contract during simulation
/// (negative time advance, batch delivered to a machine that does not
/// serve its step, ...).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A network or configuration is structurally invalid and is rejected
/// before any simulation starts.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Input data is degenerate for the requested computation
/// (zero variance, constant feature column, ...).
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A named component or variable does not exist.
struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem operation failed.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace minifab
