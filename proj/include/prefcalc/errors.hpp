#ifndef PREFCALC_ERRORS_HPP
#define PREFCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prefcalc {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Atom refers to an attribute the space does not have, a level outside the
// attribute's range, or a level that is not a grid point where one is required.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Conditioning on an expression whose utility is zero (vanishing denominator
// in the inference rule).
class UndefinedConditionalError : public Error {
public:
    explicit UndefinedConditionalError(const std::string& what) : Error(what) {}
};

// Two domain sets / mass functions built over different attribute spaces were
// combined.
class SpaceMismatchError : public Error {
public:
    explicit SpaceMismatchError(const std::string& what) : Error(what) {}
};

}  // namespace prefcalc

#endif  // PREFCALC_ERRORS_HPP
