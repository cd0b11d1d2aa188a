#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conefj {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Input could not be parsed (rationals, expressions, JSON files). */
class ParseError : public Error
{
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/** Raised when vector/matrix/cone dimensions do not agree. */
class DimensionMismatch : public Error
{
  public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class MalformedProgram : public Error
{
  public:
    explicit MalformedProgram(const std::string& what) : Error(what) {}
};

/**
 * Domain errors: the inputs are well formed but the requested object does
 * not exist (point inside the cone, cone not pointed, point outside hull).
 * The CLI maps every subclass to exit code 3.
 */
class DomainError : public Error
{
  public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

class NotOutside : public DomainError
{
  public:
    explicit NotOutside(const std::string& what) : DomainError(what) {}
};

class NotPointed : public DomainError
{
  public:
    explicit NotPointed(const std::string& what) : DomainError(what) {}
};

class NotInHull : public DomainError
{
  public:
    explicit NotInHull(const std::string& what) : DomainError(what) {}
};

class NotInDual : public DomainError
{
  public:
    explicit NotInDual(const std::string& what) : DomainError(what) {}
};

class Infeasible : public DomainError
{
  public:
    explicit Infeasible(const std::string& what) : DomainError(what) {}
};

/** Expression syntax error; `position` is a 0-based byte offset. */
class SyntaxError : public ParseError
{
  public:
    SyntaxError(const std::string& what, std::size_t position)
        : ParseError(what + " at position " + std::to_string(position)), message_(what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

  private:
    std::string message_;
    std::size_t position_;
};

class ArityError : public ParseError
{
  public:
    explicit ArityError(const std::string& what) : ParseError(what) {}
};

/**
 * Evaluation hit a pole. `component` is the index of the offending output
 * component, or -1 when the expression is evaluated on its own.
 */
class DivisionByZero : public Error
{
  public:
    explicit DivisionByZero(int component = -1)
        : Error(component < 0 ? std::string("division by zero")
                              : "division by zero in component " + std::to_string(component)),
          component_(component)
    {
    }
    int component() const noexcept { return component_; }

  private:
    int component_;
};

}  // namespace conefj
