#pragma once

#include <optional>
#include <string>

#include "chio/circuit.hpp"

namespace chio {

struct ParsedDeck {
    Circuit circuit;
    std::optional<TransientConfig> tran;

    bool operator==(const ParsedDeck&) const = default;
};

/// Minimal deck grammar, case-insensitive, one statement per line:
///   R|L|C <name-tail> <node> <node> <value> [ic=<value>]      (ic on C and L only)
///   D<name-tail> <anode> <cathode> <model> [area=<value>]
///   V<name-tail> <node+> <node-> (<value> | PWL(t1 v1 t2 v2 ...))
///   .model <name> D(js=<v> n=<v> rs=<v> [vt=<v>])
///   .ic V(<node>)=<value>
///   .tran <dt> <tstop> [uic]
///   * comment line
/// Values take SI suffixes f p n u m k meg. Node "0" or "gnd" is ground.
ParsedDeck parse_netlist(const std::string& text);

/// Canonical deck text; parsing it again yields an identical ParsedDeck.
std::string unparse(const ParsedDeck& deck);

/// "5.978n" -> 5.978e-9. Throws ParseError (line/col 0) on malformed input.
double parse_si_value(const std::string& token);

}  // namespace chio
