#pragma once

#include "minifab/devs/message.hpp"
#include "minifab/devs/time.hpp"
#include "minifab/devs/trace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minifab::devs {

/// Behavioral interface of an atomic component: time-advance, output,
/// and the internal/external/confluent transition functions. Component
/// state lives in the derived class; the simulator owns one instance
/// per component per run.
class Atomic {
public:
    virtual ~Atomic() = default;

    /// Called once before the first time-advance query with the
    /// component's derived seed. Components without stochastic behavior
    /// ignore it.
    virtual void initialize(std::uint64_t /*seed*/) {}

    /// Time until the next internal event; kInfiniteTime when passive.
    /// Must never be negative.
    virtual VirtualTime time_advance() const = 0;

    /// Computed only when the component is imminent, immediately before
    /// its internal or confluent transition.
    virtual EventBag output() const = 0;

    virtual void internal_transition() = 0;

    /// elapsed is the time since this component's previous event and
    /// satisfies 0 <= elapsed < time_advance().
    virtual void external_transition(VirtualTime elapsed, const EventBag& inputs) = 0;

    /// Applied when the component is imminent and receives input in the
    /// same instant. Default order: internal effects first, then the
    /// input with zero elapsed time.
    virtual void confluent_transition(const EventBag& inputs) {
        internal_transition();
        external_transition(0.0, inputs);
    }

    virtual std::vector<std::string> input_ports() const = 0;
    virtual std::vector<std::string> output_ports() const = 0;

protected:
    /// Absolute simulation time, valid during any of the callbacks above.
    VirtualTime now() const { return runtime_ ? runtime_->now : 0.0; }

    /// Append a state-change record to the simulation trace.
    void record(std::string variable, TraceValue value) const {
        if (runtime_ && runtime_->trace) {
            runtime_->trace->append(
                {runtime_->now, runtime_->path, RecordKind::StateChange,
                 std::move(variable), std::move(value)});
        }
    }

    const std::string& component_path() const {
        static const std::string empty;
        return runtime_ ? runtime_->path : empty;
    }

private:
    friend class Simulator;

    struct Runtime {
        EventTrace* trace = nullptr;
        std::string path;
        VirtualTime now = 0.0;
    };

    Runtime* runtime_ = nullptr;
};

} // namespace minifab::devs
