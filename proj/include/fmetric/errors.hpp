#pragma once

#include <stdexcept>
#include <string>

namespace fmetric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "error"; }
};

#define FMETRIC_DECLARE_ERROR(Name, Kind)                                   \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(what) {}             \
        const char* kind() const noexcept override { return Kind; }         \
    }

/// Argument outside the function's domain (e.g. f(t) with t <= 0).
FMETRIC_DECLARE_ERROR(DomainError, "domain");
/// Table gauge probed outside its knot range.
FMETRIC_DECLARE_ERROR(OutOfRangeError, "out_of_range");
/// Malformed argument (empty grid, unsorted schedule, bad alpha, ...).
FMETRIC_DECLARE_ERROR(ArgumentError, "argument");
/// The delta(eps) resolver could not find a threshold within budget.
FMETRIC_DECLARE_ERROR(ResolutionError, "resolution");
/// An operation's precondition does not hold on the given input.
FMETRIC_DECLARE_ERROR(PreconditionError, "precondition");
/// Supplied matrix fails the metric axioms.
FMETRIC_DECLARE_ERROR(MetricAxiomError, "metric_axiom");
/// Supplied metric does not sandwich D under the gauge.
FMETRIC_DECLARE_ERROR(SandwichError, "sandwich");
/// Contraction certificate invalid (k >= 1 or observed ratio above k).
FMETRIC_DECLARE_ERROR(CertificationError, "certification");
/// Malformed input file, descriptor or expression.
FMETRIC_DECLARE_ERROR(ParseError, "parse");
/// File could not be read or written.
FMETRIC_DECLARE_ERROR(IoError, "io");
/// Label not present in the space.
FMETRIC_DECLARE_ERROR(UnknownLabelError, "unknown_label");

#undef FMETRIC_DECLARE_ERROR

}  // namespace fmetric
