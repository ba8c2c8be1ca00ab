#include "minifab/devs/coupled.hpp"

#include "minifab/errors.hpp"

#include <algorithm>

namespace minifab::devs {

void CoupledSpec::check_name(const std::string& name) const {
    if (name.empty()) throw ConstructionError("component name must not be empty");
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
        if (!ok) {
            throw ConstructionError("component name '" + name +
                                    "' contains characters outside [a-z0-9_.]");
        }
    }
}

void CoupledSpec::add_atomic(const std::string& name, AtomicFactory factory) {
    check_name(name);
    if (!factory) throw ConstructionError("null factory for component '" + name + "'");
    if (has_component(name)) throw ConstructionError("duplicate component '" + name + "'");
    components_.emplace(name, std::move(factory));
}

void CoupledSpec::add_coupled(const std::string& name, CoupledSpec child) {
    check_name(name);
    if (has_component(name)) throw ConstructionError("duplicate component '" + name + "'");
    components_.emplace(name, std::move(child));
}

void CoupledSpec::add_input_port(const std::string& port) {
    if (has_input_port(port)) throw ConstructionError("duplicate input port '" + port + "'");
    input_ports_.push_back(port);
}

void CoupledSpec::add_output_port(const std::string& port) {
    if (has_output_port(port)) throw ConstructionError("duplicate output port '" + port + "'");
    output_ports_.push_back(port);
}

bool CoupledSpec::has_input_port(const std::string& port) const {
    return std::find(input_ports_.begin(), input_ports_.end(), port) != input_ports_.end();
}

bool CoupledSpec::has_output_port(const std::string& port) const {
    return std::find(output_ports_.begin(), output_ports_.end(), port) != output_ports_.end();
}

void CoupledSpec::couple_input(const std::string& port, const std::string& child,
                               const std::string& child_port) {
    input_couplings_.push_back({"", port, child, child_port});
}

void CoupledSpec::couple(const std::string& from_child, const std::string& from_port,
                         const std::string& to_child, const std::string& to_port) {
    internal_couplings_.push_back({from_child, from_port, to_child, to_port});
}

void CoupledSpec::couple_output(const std::string& child, const std::string& child_port,
                                const std::string& port) {
    output_couplings_.push_back({child, child_port, "", port});
}

} // namespace minifab::devs
