#pragma once
#include <stdexcept>
#include <string>

namespace meetlab {

// Base type for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (bad token, wrong field count, ...).
struct ParseError : Error { using Error::Error; };

// Structurally invalid graph (self-loop, duplicate edge, disconnected, ...).
struct ValidationError : Error { using Error::Error; };

// Bad arguments to a generator or solver.
struct InvalidParams : Error { using Error::Error; };

// A linear system with no usable pivot. `column` is the index of the unknown
// whose pivot vanished, -1 when unknown.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what, int column_ = -1)
        : Error(what), column(column_) {}
    int column;
};

// Potential functions require a minimal ("hidden") reference state.
struct NotHidden : Error { using Error::Error; };

// Minimality search came back empty; indicates a numerical or logic bug.
struct NoHiddenState : Error { using Error::Error; };

// Iterative solver hit its iteration cap before reaching tolerance.
struct NotConverged : Error { using Error::Error; };

// Iterates escaped their certified upper bound; indicates an internal bug.
struct Diverged : Error { using Error::Error; };

} // namespace meetlab
