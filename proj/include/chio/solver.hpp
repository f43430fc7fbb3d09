#pragma once

#include <string>
#include <vector>

#include "chio/circuit.hpp"

namespace chio {

/// Uniformly sampled transient result. Sample 0 is the initial state at t = 0.
/// Branch currents cover voltage sources and inductors, in element order.
struct Waveform {
    double dt = 0.0;
    std::vector<double> time;
    std::vector<std::string> node_names;                 // nodes 1..n-1, ground excluded
    std::vector<std::vector<double>> node_voltage;       // [node-1][sample]
    std::vector<std::string> branch_names;               // "i(v1)", "i(l2)", ...
    std::vector<std::vector<double>> branch_current;     // [branch][sample]

    size_t samples() const { return time.size(); }
    const std::vector<double>& probe(const std::string& node) const;
    const std::vector<double>& branch(const std::string& name) const;
    double peak_abs(const std::string& node) const;
};

/// Newton-converged DC solution: capacitors open, inductors shorted, sources at
/// t = 0, .ic node pins enforced. Returns voltages indexed by node id (0 = ground).
std::vector<double> dc_operating_point(const Circuit& c, double abstol = 1e-9,
                                       double reltol = 1e-9, int max_newton = 200,
                                       double gmin = 1e-15);

/// Trapezoidal transient with per-step Newton iteration and SPICE-style diode
/// junction-voltage limiting. The t = 0 state comes from the DC operating point
/// (cfg.use_ic = false) or from element initial conditions and .ic pins applied
/// to the switched network (cfg.use_ic = true).
Waveform transient(const Circuit& c, const TransientConfig& cfg);

/// Sum of C v^2 / 2 + L i^2 / 2 over the circuit's storage elements at a sample.
double stored_energy(const Circuit& c, const Waveform& w, size_t sample);

}  // namespace chio
