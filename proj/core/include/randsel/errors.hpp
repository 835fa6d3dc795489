#pragma once

#include <stdexcept>
#include <string>

namespace randsel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (non-finite entries, dimension mismatches).
class InputError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter or configuration value.
class ParamError : public Error {
public:
    using Error::Error;
};

/// A label vector (or a subsample of one) contains a single class, so the
/// centered label kernel has zero norm and alignment is undefined.
class DegenerateLabelError : public Error {
public:
    using Error::Error;
};

/// A kernel matrix centered to (numerically) zero; alignment is undefined.
class DegenerateKernelError : public Error {
public:
    using Error::Error;
};

/// A feature did not appear in enough tasks on one side of the contribution
/// estimator to form a mean.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// CSV or JSON input that cannot be parsed; the message names the location.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A serialized artifact with an unknown schema version or wrong kind.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A linear solve produced non-finite values or failed to converge.
class NumericError : public Error {
public:
    using Error::Error;
};

/// The LP solver hit its pivot cap or an ensemble LP has no feasible point.
class SolverError : public Error {
public:
    using Error::Error;
};

} // namespace randsel
