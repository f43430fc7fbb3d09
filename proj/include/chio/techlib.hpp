#pragma once

#include <string>
#include <vector>

namespace chio {

enum class TechKind { MicroBump, HybridBond };

std::string to_string(TechKind kind);
TechKind tech_kind_from_string(const std::string& s);

/// Substrate wire geometry, SI units (meters).
struct WireGeometry {
    double length;     // L
    double width;      // W
    double spacing;    // S
    double thickness;  // T
    double height;     // H, above the return plane

    void validate() const;
};

/// Interface pad: micro bump or hybrid-bond pad. Pitch in meters.
struct PadGeometry {
    double pitch;
    TechKind kind;

    void validate() const;
};

struct ChipletGeometry {
    double edge_length;  // C_E
    double spacing;      // C_S

    void validate() const;
};

/// One packaging generation: wire plus pad geometry for a given interface family.
struct TechGeneration {
    TechKind kind;
    int index;  // -1 for custom (non-table) generations
    WireGeometry wire;
    PadGeometry pad;

    static TechGeneration builtin(TechKind kind, int index);
    static TechGeneration custom(TechKind kind, const WireGeometry& wire, double pitch);
};

/// All table rows of a family, ascending generation index.
std::vector<TechGeneration> list_generations(TechKind kind);

int generation_count(TechKind kind);

}  // namespace chio
