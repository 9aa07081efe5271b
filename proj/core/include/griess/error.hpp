#pragma once

#include <stdexcept>
#include <string>

namespace griess {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad rank, wrong root, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace griess
