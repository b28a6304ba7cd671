#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

/// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic misuse: division by zero, incompatible radicands.
class math_error : public error {
public:
    using error::error;
};

/// A certificate check failed. what() names the violated certificate.
class verify_error : public error {
public:
    using error::error;
};

/// No level assignment satisfies the characteristic equation with |y| <= 1.
class infeasible_error : public error {
public:
    using error::error;
};

/// Unparseable or malformed input file.
class format_error : public error {
public:
    using error::error;
};

} // namespace cforge
