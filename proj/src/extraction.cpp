#include "chio/extraction.hpp"

#include <cmath>

#include "chio/errors.hpp"

namespace chio {

namespace {

constexpr double kEps0 = 8.8542e-12;        // F/m
constexpr double kMu0Over2Pi = 2e-7;        // H/m
constexpr double kPi = 3.14159265358979323846;

// Dense-wiring capacitance model: a line over a return plane flanked by two
// neighbors. Normalized by the dielectric permittivity. cg is the plate +
// fringe part to the plane, cc the line-to-line part toward one neighbor.
struct NormalizedCaps {
    double cg;
    double cc;
};

NormalizedCaps normalized_caps(double w, double s, double t, double h) {
    NormalizedCaps n;
    n.cg = w / h + 2.04 * std::pow(s / (s + 0.54 * h), 1.77) * std::pow(t / (t + 4.53 * h), 0.07);
    n.cc = 1.14 * (t / s) * std::pow(h / (h + 2.06 * s), 0.09) +
           0.74 * std::pow(w / (w + 1.59 * s), 1.14) +
           1.16 * std::pow(w / (w + 1.87 * s), 0.16) * std::pow(h / (h + 0.98 * s), 1.18);
    return n;
}

}  // namespace

void ExtractionParams::validate() const {
    if (rho_wire <= 0 || rho_bump <= 0 || eps_eff <= 0 || kappa_pad <= 0 ||
        bump_diameter_ratio <= 0 || bump_height_ratio <= 0 || bond_diameter_ratio <= 0 ||
        bond_height_ratio <= 0) {
        throw ModelError("extraction parameters must be strictly positive");
    }
    if (bump_diameter_ratio >= 1.0 || bond_diameter_ratio >= 1.0) {
        throw ModelError("pad diameter ratio must be < 1 (pads cannot touch)");
    }
    if (couple_frac_override >= 1.0) {
        throw ModelError("coupling fraction override must be < 1");
    }
}

void ChannelParasitics::validate() const {
    if (c_pkg < 0 || r_pkg < 0 || l_pkg < 0 || c_pad < 0 || r_pad < 0 || c_couple < 0) {
        throw ModelError("channel parasitics must be non-negative");
    }
    if (c_couple > c_pkg) {
        throw ModelError("coupling capacitance cannot exceed the total wire capacitance");
    }
}

double wire_resistance(const WireGeometry& g, const ExtractionParams& p) {
    if (g.width <= 0 || g.thickness <= 0) {
        throw ModelError("wire cross-section must be positive");
    }
    return p.rho_wire * g.length / (g.width * g.thickness);
}

double wire_inductance(const WireGeometry& g) {
    if (g.length == 0) {
        return 0.0;
    }
    const double wt = g.width + g.thickness;
    if (g.length <= wt) {
        throw ModelError("inductance model out of regime: length must exceed W + T");
    }
    return kMu0Over2Pi * g.length *
           (std::log(2.0 * g.length / wt) + 0.5 + 0.2235 * wt / g.length);
}

double capacitance_per_length(const WireGeometry& g, const ExtractionParams& p) {
    const NormalizedCaps n = normalized_caps(g.width, g.spacing, g.thickness, g.height);
    return p.eps_eff * kEps0 * (n.cg + 2.0 * n.cc);
}

WireCapacitance wire_capacitance(const WireGeometry& g, const ExtractionParams& p) {
    if (g.spacing <= 0 || g.height <= 0) {
        throw ModelError("wire spacing and height must be positive");
    }
    const NormalizedCaps n = normalized_caps(g.width, g.spacing, g.thickness, g.height);
    const double eps = p.eps_eff * kEps0;
    WireCapacitance c;
    c.total = eps * (n.cg + 2.0 * n.cc) * g.length;
    if (p.couple_frac_override >= 0.0) {
        c.couple = p.couple_frac_override * c.total;
    } else {
        c.couple = eps * n.cc * g.length;
    }
    return c;
}

PadParasitics bump_parasitics(const PadGeometry& pad, const ExtractionParams& p) {
    pad.validate();
    const bool bump = pad.kind == TechKind::MicroBump;
    const double rho = bump ? p.rho_bump : p.rho_wire;
    const double kd = bump ? p.bump_diameter_ratio : p.bond_diameter_ratio;
    const double kh = bump ? p.bump_height_ratio : p.bond_height_ratio;
    const double radius = kd * pad.pitch / 2.0;
    PadParasitics out;
    out.r_pad = rho * (kh * pad.pitch) / (kPi * radius * radius);
    out.c_pad = p.kappa_pad * pad.pitch;
    return out;
}

ChannelParasitics extract_channel(const TechGeneration& tech, const ExtractionParams& p,
                                  std::optional<double> length_override) {
    p.validate();
    WireGeometry wire = tech.wire;
    if (length_override) {
        if (*length_override < 0) {
            throw ModelError("length override must be non-negative");
        }
        wire.length = *length_override;
    }

    ChannelParasitics out;
    out.r_pkg = wire_resistance(wire, p);
    out.l_pkg = wire_inductance(wire);
    const WireCapacitance c = wire_capacitance(wire, p);
    out.c_pkg = c.total;
    out.c_couple = c.couple;
    const PadParasitics pp = bump_parasitics(tech.pad, p);
    out.r_pad = pp.r_pad;
    out.c_pad = pp.c_pad;
    out.validate();
    return out;
}

double calibrate_eps_eff(double target_cap_per_length, const WireGeometry& ratio_sample) {
    if (target_cap_per_length <= 0) {
        throw ModelError("calibration target must be positive");
    }
    // capacitance_per_length is linear in eps_eff.
    ExtractionParams unit;
    unit.eps_eff = 1.0;
    const double per_unit = capacitance_per_length(ratio_sample, unit);
    return target_cap_per_length / per_unit;
}

}  // namespace chio
