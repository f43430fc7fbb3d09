#include "chio/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "chio/errors.hpp"

namespace chio {

PiecewiseLinear PiecewiseLinear::constant(double v) {
    return {{0.0}, {v}};
}

double PiecewiseLinear::at(double t) const {
    if (times.empty()) {
        return 0.0;
    }
    if (t <= times.front()) {
        return values.front();
    }
    if (t >= times.back()) {
        return values.back();
    }
    auto it = std::upper_bound(times.begin(), times.end(), t);
    const size_t i = static_cast<size_t>(it - times.begin());
    const double t0 = times[i - 1], t1 = times[i];
    const double v0 = values[i - 1], v1 = values[i];
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

Circuit::Circuit() {
    names_.push_back("0");
    index_["0"] = 0;
    index_["gnd"] = 0;
}

int Circuit::node(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) {
        return it->second;
    }
    const int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_[name] = idx;
    return idx;
}

int Circuit::find_node(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

const std::string& Circuit::node_name(int idx) const {
    return names_.at(static_cast<size_t>(idx));
}

void Circuit::add(Element e) {
    elems_.push_back(std::move(e));
}

void Circuit::add_resistor(const std::string& name, int a, int b, double ohms) {
    add(Resistor{name, a, b, ohms});
}

void Circuit::add_capacitor(const std::string& name, int a, int b, double farads,
                            std::optional<double> v0) {
    add(Capacitor{name, a, b, farads, v0});
}

void Circuit::add_inductor(const std::string& name, int a, int b, double henries, double i0) {
    add(Inductor{name, a, b, henries, i0});
}

void Circuit::add_voltage_source(const std::string& name, int a, int b, PiecewiseLinear wave) {
    add(VoltageSource{name, a, b, std::move(wave)});
}

void Circuit::add_diode(const std::string& name, int anode, int cathode, double area,
                        const DiodeModel& model) {
    add(Diode{name, anode, cathode, area, model});
}

void Circuit::set_initial_voltage(int node, double volts) {
    ic_[node] = volts;
}

bool Circuit::has_diodes() const {
    return std::any_of(elems_.begin(), elems_.end(),
                       [](const Element& e) { return std::holds_alternative<Diode>(e); });
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

void Circuit::validate() const {
    const int n = node_count();
    UnionFind uf(n);
    auto check_node = [&](int idx, const std::string& name) {
        if (idx < 0 || idx >= n) {
            throw ModelError("element '" + name + "' references an unknown node");
        }
    };
    for (const Element& e : elems_) {
        std::visit(
            [&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Resistor>) {
                    check_node(el.a, el.name);
                    check_node(el.b, el.name);
                    if (!(el.ohms > 0) || !std::isfinite(el.ohms)) {
                        throw ModelError("resistor '" + el.name + "' must have a positive value");
                    }
                    uf.unite(el.a, el.b);
                } else if constexpr (std::is_same_v<T, Capacitor>) {
                    check_node(el.a, el.name);
                    check_node(el.b, el.name);
                    if (!(el.farads > 0) || !std::isfinite(el.farads)) {
                        throw ModelError("capacitor '" + el.name + "' must have a positive value");
                    }
                    uf.unite(el.a, el.b);
                } else if constexpr (std::is_same_v<T, Inductor>) {
                    check_node(el.a, el.name);
                    check_node(el.b, el.name);
                    if (!(el.henries > 0) || !std::isfinite(el.henries)) {
                        throw ModelError("inductor '" + el.name + "' must have a positive value");
                    }
                    uf.unite(el.a, el.b);
                } else if constexpr (std::is_same_v<T, VoltageSource>) {
                    check_node(el.a, el.name);
                    check_node(el.b, el.name);
                    if (el.wave.times.empty() || el.wave.times.size() != el.wave.values.size()) {
                        throw ModelError("source '" + el.name + "' has an empty or ragged waveform");
                    }
                    uf.unite(el.a, el.b);
                } else if constexpr (std::is_same_v<T, Diode>) {
                    check_node(el.anode, el.name);
                    check_node(el.cathode, el.name);
                    if (!(el.area > 0)) {
                        throw ModelError("diode '" + el.name + "' must have a positive area");
                    }
                    if (!(el.model.js > 0) || !(el.model.ideality > 0) || !(el.model.vt > 0) ||
                        el.model.rs < 0) {
                        throw ModelError("diode model '" + el.model.name + "' has invalid parameters");
                    }
                    uf.unite(el.anode, el.cathode);
                }
            },
            e);
    }
    const int groot = uf.find(0);
    for (int i = 1; i < n; ++i) {
        if (uf.find(i) != groot) {
            throw ModelError("node '" + node_name(i) + "' is not connected to ground");
        }
    }
}

void TransientConfig::validate() const {
    if (!(dt > 0)) {
        throw ModelError("transient dt must be positive");
    }
    if (tstop < dt) {
        throw ModelError("transient stop time must be at least one step");
    }
    if (abstol <= 0 || reltol <= 0 || max_newton < 1 || gmin < 0) {
        throw ModelError("invalid transient tolerances");
    }
}

}  // namespace chio
