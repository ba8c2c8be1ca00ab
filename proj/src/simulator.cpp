#include "minifab/devs/simulator.hpp"

#include "minifab/errors.hpp"
#include "minifab/rng.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace minifab::devs {

namespace {

// ---------------------------------------------------------------------------
// Shared hierarchy walk used by both the simulator and flatten().

struct SpecNode {
    const CoupledSpec* spec = nullptr;
    SpecNode* parent = nullptr;
    std::string name_in_parent;
    std::string path; // dotted path of this coupled model, "" for root
    std::map<std::string, std::unique_ptr<SpecNode>> coupled_children;
    std::map<std::string, const AtomicFactory*> atomic_children;
};

struct AtomicRef {
    std::string path;
    std::string local_name;
    SpecNode* level = nullptr;
    const AtomicFactory* factory = nullptr;
};

std::string join_path(const std::string& prefix, const std::string& name) {
    return prefix.empty() ? name : prefix + "." + name;
}

void build_tree(const CoupledSpec& spec, SpecNode* node, std::vector<AtomicRef>& atomics) {
    for (const auto& [name, component] : spec.components()) {
        if (std::holds_alternative<AtomicFactory>(component)) {
            const auto* factory = &std::get<AtomicFactory>(component);
            node->atomic_children.emplace(name, factory);
            atomics.push_back({join_path(node->path, name), name, node, factory});
        } else {
            auto child = std::make_unique<SpecNode>();
            child->spec = &std::get<CoupledSpec>(component);
            child->parent = node;
            child->name_in_parent = name;
            child->path = join_path(node->path, name);
            build_tree(*child->spec, child.get(), atomics);
            node->coupled_children.emplace(name, std::move(child));
        }
    }
}

struct SpecTree {
    SpecNode root;
    std::vector<AtomicRef> atomics; // sorted by path

    explicit SpecTree(const CoupledSpec& spec) {
        root.spec = &spec;
        build_tree(spec, &root, atomics);
        std::sort(atomics.begin(), atomics.end(),
                  [](const AtomicRef& a, const AtomicRef& b) { return a.path < b.path; });
    }
};

// ---------------------------------------------------------------------------
// Validation

struct PortSets {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
};

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

void validate_level(const CoupledSpec& spec, const std::string& path) {
    auto where = [&](const std::string& detail) {
        return (path.empty() ? std::string("<root>") : path) + ": " + detail;
    };

    // Port sets of every child, instantiating atomics once to read their
    // declared ports.
    std::map<std::string, PortSets> child_ports;
    for (const auto& [name, component] : spec.components()) {
        if (std::holds_alternative<AtomicFactory>(component)) {
            auto instance = std::get<AtomicFactory>(component)();
            if (!instance) throw ConstructionError(where("factory for '" + name + "' returned null"));
            child_ports[name] = {instance->input_ports(), instance->output_ports()};
        } else {
            const auto& child = std::get<CoupledSpec>(component);
            child_ports[name] = {child.input_ports(), child.output_ports()};
        }
    }

    auto require_child_port = [&](const std::string& component, const std::string& port, bool input) {
        auto it = child_ports.find(component);
        if (it == child_ports.end()) {
            throw ConstructionError(where("coupling names unknown component '" + component + "'"));
        }
        const auto& ports = input ? it->second.inputs : it->second.outputs;
        if (!contains(ports, port)) {
            throw ConstructionError(where("component '" + component + "' has no " +
                                          (input ? "input" : "output") + " port '" + port + "'"));
        }
    };

    for (const Coupling& c : spec.input_couplings()) {
        if (!spec.has_input_port(c.from_port)) {
            throw ConstructionError(where("unknown external input port '" + c.from_port + "'"));
        }
        require_child_port(c.to_component, c.to_port, true);
    }
    for (const Coupling& c : spec.internal_couplings()) {
        require_child_port(c.from_component, c.from_port, false);
        require_child_port(c.to_component, c.to_port, true);
        if (c.from_component == c.to_component) {
            throw ConstructionError(where("self-loop coupling on component '" + c.from_component + "'"));
        }
    }
    for (const Coupling& c : spec.output_couplings()) {
        require_child_port(c.from_component, c.from_port, false);
        if (!spec.has_output_port(c.to_port)) {
            throw ConstructionError(where("unknown external output port '" + c.to_port + "'"));
        }
    }

    for (const auto& [name, component] : spec.components()) {
        if (std::holds_alternative<CoupledSpec>(component)) {
            validate_level(std::get<CoupledSpec>(component), join_path(path, name));
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Simulation

class Simulator {
public:
    explicit Simulator(const CoupledSpec& root) : tree_(root) {
        leaves_.reserve(tree_.atomics.size());
        for (const AtomicRef& ref : tree_.atomics) {
            Leaf leaf;
            leaf.model = (*ref.factory)();
            leaf.level = ref.level;
            leaf.local_name = ref.local_name;
            leaf.runtime.path = ref.path;
            leaf.runtime.trace = &trace_;
            leaves_.push_back(std::move(leaf));
        }
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            leaf_index_[leaves_[i].runtime.path] = i;
            leaves_[i].model->runtime_ = &leaves_[i].runtime;
        }
    }

    EventTrace run(VirtualTime end_time, std::uint64_t seed) {
        for (Leaf& leaf : leaves_) {
            leaf.runtime.now = 0.0;
            leaf.model->initialize(derive_component_seed(seed, leaf.runtime.path));
            leaf.next = query_time_advance(leaf);
        }

        while (true) {
            VirtualTime t = kInfiniteTime;
            for (const Leaf& leaf : leaves_) t = std::min(t, leaf.next);
            if (!(t <= end_time)) break;

            // (1)+(2) collect the imminent set and invoke their outputs,
            // (3) route every entry through the coupling relations.
            for (Leaf& leaf : leaves_) {
                if (leaf.next != t) continue;
                leaf.runtime.now = t;
                EventBag outputs = leaf.model->output();
                for (const PortEvent& entry : outputs.entries()) {
                    trace_.append({t, leaf.runtime.path, RecordKind::Output, entry.port,
                                   entry.payload ? entry.payload->text() : std::string("null")});
                    route_from_child(*leaf.level, leaf.local_name, entry.port, entry.payload);
                }
            }

            // (4) apply exactly one transition per affected component and
            // (5) reschedule it.
            for (Leaf& leaf : leaves_) {
                const bool imminent = leaf.next == t;
                const bool has_input = !leaf.inbox.empty();
                if (!imminent && !has_input) continue;
                leaf.runtime.now = t;
                if (imminent && has_input) {
                    leaf.model->confluent_transition(leaf.inbox);
                } else if (imminent) {
                    leaf.model->internal_transition();
                } else {
                    const VirtualTime elapsed = t - leaf.last;
                    assert(elapsed >= 0.0 && t < leaf.next);
                    leaf.model->external_transition(elapsed, leaf.inbox);
                }
                leaf.inbox.clear();
                leaf.last = t;
                leaf.next = t + query_time_advance(leaf);
            }
        }

        trace_.finalize();
        return std::move(trace_);
    }

private:
    struct Leaf {
        std::unique_ptr<Atomic> model;
        SpecNode* level = nullptr;
        std::string local_name;
        Atomic::Runtime runtime;
        VirtualTime last = 0.0;
        VirtualTime next = kInfiniteTime;
        EventBag inbox;
    };

    VirtualTime query_time_advance(Leaf& leaf) {
        const VirtualTime ta = leaf.model->time_advance();
        if (ta < 0.0) {
            throw ModelError(leaf.runtime.path + ": negative time advance");
        }
        return ta;
    }

    void route_from_child(SpecNode& level, const std::string& child, const std::string& port,
                          const MessagePtr& payload) {
        for (const Coupling& c : level.spec->internal_couplings()) {
            if (c.from_component == child && c.from_port == port) {
                deliver_to(level, c.to_component, c.to_port, payload);
            }
        }
        for (const Coupling& c : level.spec->output_couplings()) {
            if (c.from_component == child && c.from_port == port && level.parent) {
                route_from_child(*level.parent, level.name_in_parent, c.to_port, payload);
            }
            // at the root the event leaves the system
        }
    }

    void deliver_to(SpecNode& level, const std::string& component, const std::string& port,
                    const MessagePtr& payload) {
        if (level.atomic_children.count(component) != 0) {
            const std::size_t idx = leaf_index_.at(join_path(level.path, component));
            leaves_[idx].inbox.add(port, payload);
            return;
        }
        SpecNode& sub = *level.coupled_children.at(component);
        for (const Coupling& c : sub.spec->input_couplings()) {
            if (c.from_port == port) deliver_to(sub, c.to_component, c.to_port, payload);
        }
    }

    SpecTree tree_;
    std::vector<Leaf> leaves_;
    std::map<std::string, std::size_t> leaf_index_;
    EventTrace trace_;
};

// ---------------------------------------------------------------------------
// Flatten

namespace {

struct ResolvedTarget {
    bool is_root_output = false;
    std::string component; // atomic path when !is_root_output
    std::string port;      // input port or root output port
};

void resolve_from_child(SpecNode& level, const std::string& child, const std::string& port,
                        std::vector<ResolvedTarget>& out);

void resolve_into(SpecNode& level, const std::string& component, const std::string& port,
                  std::vector<ResolvedTarget>& out) {
    if (level.atomic_children.count(component) != 0) {
        out.push_back({false, join_path(level.path, component), port});
        return;
    }
    SpecNode& sub = *level.coupled_children.at(component);
    for (const Coupling& c : sub.spec->input_couplings()) {
        if (c.from_port == port) resolve_into(sub, c.to_component, c.to_port, out);
    }
}

void resolve_from_child(SpecNode& level, const std::string& child, const std::string& port,
                        std::vector<ResolvedTarget>& out) {
    for (const Coupling& c : level.spec->internal_couplings()) {
        if (c.from_component == child && c.from_port == port) {
            resolve_into(level, c.to_component, c.to_port, out);
        }
    }
    for (const Coupling& c : level.spec->output_couplings()) {
        if (c.from_component == child && c.from_port == port) {
            if (level.parent) {
                resolve_from_child(*level.parent, level.name_in_parent, c.to_port, out);
            } else {
                out.push_back({true, "", c.to_port});
            }
        }
    }
}

} // namespace

void validate_network(const CoupledSpec& root) { validate_level(root, ""); }

EventTrace simulate(const CoupledSpec& root, VirtualTime end_time, std::uint64_t seed) {
    validate_network(root);
    Simulator sim(root);
    return sim.run(end_time, seed);
}

CoupledSpec flatten(const CoupledSpec& root) {
    validate_network(root);
    SpecTree tree(root);

    CoupledSpec flat(root.name());
    for (const std::string& port : root.input_ports()) flat.add_input_port(port);
    for (const std::string& port : root.output_ports()) flat.add_output_port(port);
    for (const AtomicRef& ref : tree.atomics) flat.add_atomic(ref.path, *ref.factory);

    // Replay the runtime routing walk symbolically so the flat coupling
    // list delivers messages in exactly the hierarchical order.
    for (const AtomicRef& ref : tree.atomics) {
        auto instance = (*ref.factory)();
        for (const std::string& port : instance->output_ports()) {
            std::vector<ResolvedTarget> targets;
            resolve_from_child(*ref.level, ref.local_name, port, targets);
            for (const ResolvedTarget& target : targets) {
                if (target.is_root_output) {
                    flat.couple_output(ref.path, port, target.port);
                } else {
                    flat.couple(ref.path, port, target.component, target.port);
                }
            }
        }
    }
    for (const std::string& port : root.input_ports()) {
        std::vector<ResolvedTarget> targets;
        for (const Coupling& c : root.input_couplings()) {
            if (c.from_port == port) resolve_into(tree.root, c.to_component, c.to_port, targets);
        }
        for (const ResolvedTarget& target : targets) {
            flat.couple_input(port, target.component, target.port);
        }
    }

    validate_network(flat);
    return flat;
}

} // namespace minifab::devs
