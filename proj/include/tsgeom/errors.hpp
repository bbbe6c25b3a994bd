#ifndef TSGEOM_ERRORS_HPP
#define TSGEOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsgeom {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument values: non-finite samples, negative rates, out-of-range indices.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Malformed generator or oscillator-network specification.
class SpecError : public Error {
public:
    using Error::Error;
};

/// Operation received fewer data points than it needs.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// A sign triple that matches none of the 13 configurations. Only reachable
/// with tau > 0, where independent rounding of the three values can produce
/// an unrealizable pattern. Carries the raw triple for diagnosis.
class ClassificationError : public Error {
public:
    ClassificationError(std::size_t index, double d_left, double d2, double d_right)
        : Error("unclassifiable sign triple at index " + std::to_string(index) +
                ": d_left=" + std::to_string(d_left) + " d2=" + std::to_string(d2) +
                " d_right=" + std::to_string(d_right)),
          index(index), d_left(d_left), d2(d2), d_right(d_right) {}

    std::size_t index;
    double d_left;
    double d2;
    double d_right;
};

/// A symbol sequence contains a transition forbidden by the validity mask.
class CorruptedInput : public Error {
public:
    CorruptedInput(std::size_t index, int from, int to)
        : Error("forbidden transition " + std::to_string(from) + "->" + std::to_string(to) +
                " at symbol index " + std::to_string(index)),
          index(index), from(from), to(to) {}

    std::size_t index;
    int from;
    int to;
};

/// Every window of a series carries the undefined sentinel.
class NoDefinedValue : public Error {
public:
    using Error::Error;
};

/// Integration state became non-finite.
class DivergenceError : public Error {
public:
    DivergenceError(std::size_t step)
        : Error("non-finite state at integration step " + std::to_string(step)), step(step) {}

    std::size_t step;
};

/// File ingestion failure; message carries the 1-based line number when known.
class IngestError : public Error {
public:
    explicit IngestError(const std::string& msg, std::size_t line = 0)
        : Error(line ? ("line " + std::to_string(line) + ": " + msg) : msg), line(line) {}

    std::size_t line;
};

/// Bad command-line usage (unknown flag, missing required argument, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace tsgeom

#endif // TSGEOM_ERRORS_HPP
