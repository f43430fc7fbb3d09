#include "chio/techlib.hpp"

#include <array>

#include "chio/errors.hpp"

namespace chio {

namespace {

struct Row {
    double l_m, ws_m, th_m, p_m;
};

constexpr double MM = 1e-3;
constexpr double UM = 1e-6;

// Micro-bump scaling, generations 0..5: L, W=S, T=H, P.
constexpr std::array<Row, 6> kMicroBump = {{
    {4 * MM, 2.5 * UM, 5 * UM, 70 * UM},
    {2 * MM, 2.0 * UM, 4 * UM, 55 * UM},
    {1.6 * MM, 1.5 * UM, 3 * UM, 40 * UM},
    {0.9 * MM, 1.0 * UM, 2 * UM, 30 * UM},
    {0.4 * MM, 0.5 * UM, 1 * UM, 20 * UM},
    {0.15 * MM, 0.25 * UM, 0.5 * UM, 10 * UM},
}};

// Hybrid bonding scaling, generations 0..4.
constexpr std::array<Row, 5> kHybridBond = {{
    {150 * UM, 0.25 * UM, 0.5 * UM, 10 * UM},
    {100 * UM, 0.20 * UM, 0.4 * UM, 5 * UM},
    {75 * UM, 0.15 * UM, 0.3 * UM, 2.5 * UM},
    {50 * UM, 0.10 * UM, 0.2 * UM, 1 * UM},
    {25 * UM, 0.05 * UM, 0.1 * UM, 0.5 * UM},
}};

const Row& table_row(TechKind kind, int index) {
    const int count = generation_count(kind);
    if (index < 0 || index >= count) {
        throw ModelError(to_string(kind) + " generation index " + std::to_string(index) +
                         " out of range 0.." + std::to_string(count - 1));
    }
    return kind == TechKind::MicroBump ? kMicroBump[static_cast<size_t>(index)]
                                       : kHybridBond[static_cast<size_t>(index)];
}

}  // namespace

std::string to_string(TechKind kind) {
    return kind == TechKind::MicroBump ? "micro-bump" : "hybrid-bond";
}

TechKind tech_kind_from_string(const std::string& s) {
    if (s == "ubump" || s == "micro-bump" || s == "microbump" || s == "u-bump") {
        return TechKind::MicroBump;
    }
    if (s == "hybrid" || s == "hybrid-bond" || s == "hybridbond") {
        return TechKind::HybridBond;
    }
    throw UsageError("unknown technology kind '" + s + "' (expected 'ubump' or 'hybrid')");
}

void WireGeometry::validate() const {
    if (length <= 0 || width <= 0 || spacing <= 0 || thickness <= 0 || height <= 0) {
        throw ModelError("wire geometry fields must be strictly positive");
    }
}

void PadGeometry::validate() const {
    if (pitch <= 0) {
        throw ModelError("pad pitch must be strictly positive");
    }
}

void ChipletGeometry::validate() const {
    if (edge_length <= 0 || spacing <= 0) {
        throw ModelError("chiplet geometry fields must be strictly positive");
    }
}

TechGeneration TechGeneration::builtin(TechKind kind, int index) {
    const Row& row = table_row(kind, index);
    TechGeneration g;
    g.kind = kind;
    g.index = index;
    g.wire = {row.l_m, row.ws_m, row.ws_m, row.th_m, row.th_m};
    g.pad = {row.p_m, kind};
    return g;
}

TechGeneration TechGeneration::custom(TechKind kind, const WireGeometry& wire, double pitch) {
    TechGeneration g;
    g.kind = kind;
    g.index = -1;
    g.wire = wire;
    g.pad = {pitch, kind};
    g.wire.validate();
    g.pad.validate();
    return g;
}

std::vector<TechGeneration> list_generations(TechKind kind) {
    std::vector<TechGeneration> out;
    const int count = generation_count(kind);
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back(TechGeneration::builtin(kind, i));
    }
    return out;
}

int generation_count(TechKind kind) {
    return kind == TechKind::MicroBump ? static_cast<int>(kMicroBump.size())
                                       : static_cast<int>(kHybridBond.size());
}

}  // namespace chio
