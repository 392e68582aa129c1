#pragma once

#include <stdexcept>
#include <string>

namespace gsbs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-square matrix, n < 2, bad JSON ...).
class InvalidInput : public Error
{
public:
  using Error::Error;
};

/// A configured safety cap would be exceeded.
class ResourceError : public Error
{
public:
  using Error::Error;
};

/// The request is mathematically well posed but outside what this library
/// decides (single-prime groups, infinite coset spaces).
class Unsupported : public Error
{
public:
  using Error::Error;
};

} // namespace gsbs
