#pragma once

#include <stdexcept>
#include <string>

namespace chordarc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct DegenerateComponent : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct NotClosed : Error {
    using Error::Error;
};
struct MultiComponent : Error {
    using Error::Error;
};
struct IdenticalPoints : Error {
    using Error::Error;
};
struct InvalidB : Error {
    using Error::Error;
};
struct NotEmbedded : Error {
    NotEmbedded(const std::string& msg, int comp_a, double s_a, int comp_b, double s_b)
        : Error(msg), component_a(comp_a), component_b(comp_b), arc_a(s_a), arc_b(s_b) {}
    int component_a, component_b;
    double arc_a, arc_b;
};
struct TooFewEdges : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct UnknownGenerator : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};
struct NoKnownValues : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InitialNotEmbedded : Error {
    using Error::Error;
};

}  // namespace chordarc
