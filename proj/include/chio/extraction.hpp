#pragma once

#include <optional>

#include "chio/techlib.hpp"

namespace chio {

/// Knobs of the compact parasitic models. Defaults are back-fitted against the
/// reference micro-bump generation table (see tests/test_extraction.cpp).
struct ExtractionParams {
    double rho_wire = 2.2e-8;  // ohm*m, copper with process derating
    double rho_bump = 1.1e-7;  // ohm*m, solder micro bump

    // Effective dielectric constant, calibrated so the W=S, T=H=2W wire family
    // comes out at 259.2 fF/mm total capacitance per unit length.
    double eps_eff = 4.1832605195;

    double bump_diameter_ratio = 0.5;      // bump diameter = ratio * pitch
    double bump_height_ratio = 4.0 / 7.0;  // bump height = ratio * pitch
    double bond_diameter_ratio = 0.5;      // hybrid-bond pad variant (copper, no solder)
    double bond_height_ratio = 0.5;

    double kappa_pad = 8.444e-11;  // F per meter of pitch: C_pad = kappa_pad * P

    // When >= 0, overrides the model's line-to-line split: C_couple = frac * C_total.
    double couple_frac_override = -1.0;

    void validate() const;
};

/// Lumped electrical view of one channel: wire + both pads, plus the
/// line-to-line capacitance toward one adjacent channel.
struct ChannelParasitics {
    double c_pkg;     // F, total wire capacitance
    double r_pkg;     // ohm
    double l_pkg;     // H
    double c_pad;     // F, per pad
    double r_pad;     // ohm, per pad
    double c_couple;  // F, adjacent-channel share of c_pkg

    void validate() const;
};

/// R = rho * L / (W * T)
double wire_resistance(const WireGeometry& g, const ExtractionParams& p);

/// Rectangular-conductor partial self inductance
///   L = (mu0 / 2 pi) * l * [ln(2 l / (W + T)) + 0.5 + 0.2235 (W + T) / l].
/// Returns 0 for l == 0; throws ModelError when 0 < l <= W + T (out of regime).
double wire_inductance(const WireGeometry& g);

struct WireCapacitance {
    double total;   // F
    double couple;  // F, line-to-line toward one neighbor
};

/// Ground + coupling capacitance from the dimensionless ratios W/H, S/H, T/H,
/// scaled by length. Total counts both neighbors; couple is the one-sided part.
WireCapacitance wire_capacitance(const WireGeometry& g, const ExtractionParams& p);

/// Per-unit-length total capacitance (F/m) of the cross-section.
double capacitance_per_length(const WireGeometry& g, const ExtractionParams& p);

struct PadParasitics {
    double r_pad;  // ohm
    double c_pad;  // F
};

/// Cylindrical pad model: R = rho * h / (pi r^2) with h, r tied to the pitch;
/// C = kappa_pad * P. Hybrid-bond pads use the copper resistivity and the bond
/// aspect ratios instead of the solder-bump ones.
PadParasitics bump_parasitics(const PadGeometry& pad, const ExtractionParams& p);

ChannelParasitics extract_channel(const TechGeneration& tech, const ExtractionParams& p,
                                  std::optional<double> length_override = std::nullopt);

/// Solves eps_eff so that capacitance_per_length(ratio_sample) == target (F/m).
double calibrate_eps_eff(double target_cap_per_length, const WireGeometry& ratio_sample);

}  // namespace chio
