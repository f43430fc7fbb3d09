#pragma once

#include <stdexcept>
#include <string>

namespace chio {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad invocation: unknown flags, malformed config, missing files.
struct UsageError : Error {
    using Error::Error;
};

/// Netlist/config text that does not match the grammar. Carries position.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no, int col_no)
        : Error("line " + std::to_string(line_no) + ", col " + std::to_string(col_no) + ": " + msg),
          line(line_no),
          col(col_no) {}
    int line;
    int col;
};

/// Structurally invalid circuit, geometry, or bench.
struct ModelError : Error {
    using Error::Error;
};

/// Numerical failure (Newton non-convergence, infeasible search bracket).
struct SolverError : Error {
    using Error::Error;
};

}  // namespace chio
