#ifndef BCAPPROX_ERRORS_HPP
#define BCAPPROX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bc
{

// Zero or zero divisor where an invertible value was required.
class NullConeError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class DegenerateMapError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class InvalidRotationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the documented domain of an operation (radius, sample count, ...).
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class GeometryError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class PolePlacementError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace bc

#endif
