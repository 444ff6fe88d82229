#ifndef ESYMLAB_ERROR_HPP
#define ESYMLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace esymlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SubMultisetViolation : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class ExpansionCap : public Error {
public:
    using Error::Error;
};

class UnsupportedJ : public Error {
public:
    using Error::Error;
};

// Raised when two routes to the same quantity disagree. Always a bug.
class IdentityMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class NotSupported : public Error {
public:
    using Error::Error;
};

class NoPeriodFound : public Error {
public:
    using Error::Error;
};

class PrefixTooShort : public Error {
public:
    using Error::Error;
};

class UnknownBuiltin : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& message);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

}  // namespace esymlab

#endif
