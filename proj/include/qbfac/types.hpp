#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qbfac {

using index = std::size_t;

// Unit roundoff of IEEE double (2^-53). The error-indicator validity floor
// sqrt(4*eps/delta)*||A||_F is derived from this value.
inline constexpr double kEpsMach = 1.1102230246251565e-16;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    SingularityError(const std::string& msg, index diag_index)
        : Error(msg), diag_index_(diag_index) {}
    index diag_index() const { return diag_index_; }

private:
    index diag_index_;
};

// Requested tolerance sits below the floor where the Frobenius error
// indicator is still trustworthy in double precision.
class ToleranceFloorError : public Error {
public:
    ToleranceFloorError(const std::string& msg, double floor)
        : Error(msg), floor_(floor) {}
    double floor_value() const { return floor_; }

private:
    double floor_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class FormatError : public IoError {
public:
    using IoError::IoError;
};

class OracleCapError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace qbfac
