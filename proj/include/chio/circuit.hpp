#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chio {

/// Piecewise-linear time -> value, flat extrapolation beyond the end points.
struct PiecewiseLinear {
    std::vector<double> times;
    std::vector<double> values;

    static PiecewiseLinear constant(double v);
    double at(double t) const;
    bool operator==(const PiecewiseLinear&) const = default;
};

struct Resistor {
    std::string name;
    int a, b;
    double ohms;
    bool operator==(const Resistor&) const = default;
};

struct Capacitor {
    std::string name;
    int a, b;
    double farads;
    std::optional<double> v0;  // initial voltage a->b, set => enforced at t = 0
    bool operator==(const Capacitor&) const = default;
};

struct Inductor {
    std::string name;
    int a, b;
    double henries;
    double i0 = 0.0;  // initial current a->b
    bool operator==(const Inductor&) const = default;
};

struct VoltageSource {
    std::string name;
    int a, b;  // v(a) - v(b) = wave(t)
    PiecewiseLinear wave;
    bool operator==(const VoltageSource&) const = default;
};

/// Shockley junction with an area-scaled series resistance:
///   I = area * js * (exp(Vj / (n vt)) - 1),  Rs = rs / area.
struct DiodeModel {
    std::string name = "d";
    double js = 1e-12;    // A per um^2
    double ideality = 1.0;
    double vt = 0.02585;  // V
    double rs = 90.0;     // ohm * um^2
    bool operator==(const DiodeModel&) const = default;
};

struct Diode {
    std::string name;
    int anode, cathode;
    double area = 1.0;  // um^2
    DiodeModel model;
    bool operator==(const Diode&) const = default;
};

using Element = std::variant<Resistor, Capacitor, Inductor, VoltageSource, Diode>;

/// Element graph with interned node names. Node 0 is ground ("0" or "gnd").
class Circuit {
public:
    Circuit();

    int ground() const { return 0; }
    int node(const std::string& name);
    int find_node(const std::string& name) const;  // -1 when absent
    const std::string& node_name(int idx) const;
    int node_count() const { return static_cast<int>(names_.size()); }

    void add(Element e);
    void add_resistor(const std::string& name, int a, int b, double ohms);
    void add_capacitor(const std::string& name, int a, int b, double farads,
                       std::optional<double> v0 = std::nullopt);
    void add_inductor(const std::string& name, int a, int b, double henries, double i0 = 0.0);
    void add_voltage_source(const std::string& name, int a, int b, PiecewiseLinear wave);
    void add_diode(const std::string& name, int anode, int cathode, double area,
                   const DiodeModel& model);

    /// .ic node pin, applied during the initial operating-point solve.
    void set_initial_voltage(int node, double volts);
    const std::map<int, double>& initial_voltages() const { return ic_; }

    const std::vector<Element>& elements() const { return elems_; }
    bool has_diodes() const;

    /// Checks element values, node indices, and that every node reaches ground.
    void validate() const;

    bool operator==(const Circuit& o) const {
        return names_ == o.names_ && elems_ == o.elems_ && ic_ == o.ic_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<Element> elems_;
    std::map<int, double> ic_;
};

struct TransientConfig {
    double dt = 0.0;
    double tstop = 0.0;
    double abstol = 1e-6;   // V (also applied to branch currents, in A)
    double reltol = 1e-6;
    int max_newton = 100;
    // false: start from the DC operating point (capacitors open, inductors
    // shorted). true: start from the switched state defined by element initial
    // conditions and .ic pins, skipping the DC solve.
    bool use_ic = false;
    double gmin = 1e-15;  // leak to ground on every node, keeps floating nodes solvable

    void validate() const;
    bool operator==(const TransientConfig&) const = default;
};

}  // namespace chio
