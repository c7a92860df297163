#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace wms
{

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error
{
  public:
    using Error::Error;
};

class DegenerateModule : public Error
{
  public:
    using Error::Error;
};

class SpaceMismatch : public Error
{
  public:
    using Error::Error;
};

/// A scheme, window or spec invariant does not hold. `invariant()` names it.
class ValidationError : public Error
{
  public:
    ValidationError(std::string invariant, const std::string& detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant))
    {
    }
    const std::string& invariant() const { return invariant_; }

  private:
    std::string invariant_;
};

class ParseError : public Error
{
  public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// The requested operation is not available for this input shape.
class Unsupported : public Error
{
  public:
    using Error::Error;
};

} // namespace wms
