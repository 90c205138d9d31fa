#pragma once

#include <stdexcept>
#include <string>

namespace g1t {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (PD codes, matrix files, JSON).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Shape mismatches: empty matrices, column/generator count disagreement.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error("dimension error: " + msg) {}
};

// Structurally invalid diagrams.  The kind distinguishes the failure the
// way callers need to: bad edge multiplicities vs. inconsistent
// orientations vs. data that cannot be drawn in the plane.
struct DiagramError : Error {
    enum class Kind {
        edge_occurrence,
        orientation,
        disconnected,
        nonplanar,
        unknown_component,
        multi_component,
    };
    Kind kind;
    DiagramError(Kind k, const std::string& msg) : Error("diagram error: " + msg), kind(k) {}
};

// A Reidemeister move that does not apply at the requested site.
struct MoveError : Error {
    explicit MoveError(const std::string& msg) : Error("move error: " + msg) {}
};

// State-sum size guard.
struct LimitError : Error {
    explicit LimitError(const std::string& msg) : Error("limit error: " + msg) {}
};

// Invalid annulus tangles and closure specifications.
struct TangleError : Error {
    enum class Kind {
        closed_component,
        endpoints,
        missing_face,
        bad_path,
        unroutable,
    };
    Kind kind;
    TangleError(Kind k, const std::string& msg) : Error("tangle error: " + msg), kind(k) {}
};

}  // namespace g1t
