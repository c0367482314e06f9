#pragma once

#include <stdexcept>
#include <string>

namespace cubiccolor {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Coincident points, or tolerance too coarse to separate the configuration's lines.
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument too close to a multiple of pi for cot.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two generated points collapsed at the working tolerance.
class PrecisionTooLow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cubiccolor
