#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdae {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-conforming shapes in linear algebra or between model and data.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Value outside the mathematical domain of an operation (e.g. cross-entropy
// with components outside (0,1)).
class DomainError : public Error {
public:
    using Error::Error;
};

// Out-of-bounds index, e.g. a masking start index past the input dimension.
class IndexError : public Error {
public:
    using Error::Error;
};

// Malformed input file (bad magic, unexpected field values).
class FormatError : public Error {
public:
    using Error::Error;
};

// File shorter than its header claims.
class LengthError : public Error {
public:
    using Error::Error;
};

// Invalid configuration value or combination.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Dataset cannot support the requested operation (missing class, too few
// samples, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// Training produced a non-finite loss or parameter.
class TrainError : public Error {
public:
    TrainError(const std::string& msg, std::size_t epoch)
        : Error(msg), epoch_(epoch) {}
    std::size_t epoch() const { return epoch_; }

private:
    std::size_t epoch_;
};

// SMO failed to satisfy the KKT conditions within its pass budget.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, std::size_t violations)
        : Error(msg), violations_(violations) {}
    std::size_t violations() const { return violations_; }

private:
    std::size_t violations_;
};

}  // namespace cdae
