#pragma once

#include "minifab/devs/atomic.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace minifab::devs {

/// Builds a fresh atomic instance. Networks store factories rather than
/// live components so that one CoupledSpec can be simulated repeatedly,
/// each run starting from the initial state.
using AtomicFactory = std::function<std::unique_ptr<Atomic>()>;

struct Coupling {
    std::string from_component; // empty = the coupled model's own input port
    std::string from_port;
    std::string to_component;   // empty = the coupled model's own output port
    std::string to_port;
};

/// Coupling graph of a network: named atomic/coupled components plus
/// external-input, external-output, and internal coupling relations.
/// Pure data; validated and instantiated by the simulator.
class CoupledSpec {
public:
    CoupledSpec() = default;
    explicit CoupledSpec(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    /// Component names may contain [a-z0-9_.]; the restriction keeps
    /// lexicographic ordering of dotted paths consistent with
    /// per-level ordering (flatten relies on this).
    void add_atomic(const std::string& name, AtomicFactory factory);
    void add_coupled(const std::string& name, CoupledSpec child);

    void add_input_port(const std::string& port);
    void add_output_port(const std::string& port);

    /// self input port -> child input port
    void couple_input(const std::string& port, const std::string& child, const std::string& child_port);
    /// child output port -> child input port
    void couple(const std::string& from_child, const std::string& from_port,
                const std::string& to_child, const std::string& to_port);
    /// child output port -> self output port
    void couple_output(const std::string& child, const std::string& child_port, const std::string& port);

    using Component = std::variant<AtomicFactory, CoupledSpec>;

    const std::map<std::string, Component>& components() const { return components_; }
    const std::vector<std::string>& input_ports() const { return input_ports_; }
    const std::vector<std::string>& output_ports() const { return output_ports_; }
    const std::vector<Coupling>& input_couplings() const { return input_couplings_; }
    const std::vector<Coupling>& internal_couplings() const { return internal_couplings_; }
    const std::vector<Coupling>& output_couplings() const { return output_couplings_; }

    bool has_component(const std::string& name) const { return components_.count(name) != 0; }
    bool has_input_port(const std::string& port) const;
    bool has_output_port(const std::string& port) const;

private:
    void check_name(const std::string& name) const;

    std::string name_;
    std::map<std::string, Component> components_;
    std::vector<std::string> input_ports_;
    std::vector<std::string> output_ports_;
    std::vector<Coupling> input_couplings_;
    std::vector<Coupling> internal_couplings_;
    std::vector<Coupling> output_couplings_;
};

} // namespace minifab::devs
