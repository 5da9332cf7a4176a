// errors.hpp -- error taxonomy shared by the whole toolkit.
#pragma once

#include <stdexcept>
#include <string>

namespace ucc {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// malformed arguments and violated preconditions
class ArgumentError : public Error {
public:
    using Error::Error;
};

// element / index outside its declared range
class RangeError : public Error {
public:
    using Error::Error;
};

// a checked mathematical condition fails (carries a witness in the message)
class ValidationError : public Error {
public:
    using Error::Error;
};

// enumeration cap, closure cap or search budget exceeded
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace ucc
