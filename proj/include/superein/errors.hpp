#pragma once

#include <stdexcept>
#include <string>

namespace superein {

/// Malformed input: dimension mismatches, parameters out of range, bad flags.
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A bilinear form that had to be non-degenerate on some subspace was not.
class DegeneracyError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The request is valid but outside what this library realizes (e.g. F(4) matrices).
class ScopeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace superein
