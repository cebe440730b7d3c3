#pragma once

#include <stdexcept>
#include <string>

namespace neyman {

/// A second moment is zero: the Neyman allocation sits on the boundary of
/// [0,1] and is flagged rather than silently clamped.
struct DegenerateInstance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Estimator applied to a trace with no rounds.
struct EmptyTrace : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An allocation outside (0,1) reached an importance weight. Interior
/// allocations are a strategy contract; a boundary value is a strategy bug,
/// never an infinite weight.
struct NonpositivePropensity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvertedBounds : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Neyman loss queried at pi in {0,1}.
struct BoundaryAllocation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A closed-form bound was requested outside its hypotheses; the message
/// names the inequality that failed.
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace neyman
