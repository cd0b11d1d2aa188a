#pragma once

#include "conefj/linalg.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace conefj {

/**
 * Immutable rational-function expression over variables x1..xs. Nodes are
 * shared; the smart constructors fold constants and drop neutral elements.
 */
class Expr
{
  public:
    enum class Kind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow };

    static Expr constant(Rational value);
    static Expr variable(std::size_t index);  // 0-based: x1 is index 0

    friend Expr operator-(const Expr& a);
    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    static Expr pow(const Expr& base, unsigned long exponent);

    Kind kind() const;
    bool is_constant(const Rational& value) const;

    /// Exact value; throws DivisionByZero(-1) at a pole.
    Rational evaluate(std::span<const Rational> x) const;

    /// Symbolic partial derivative with respect to variable `index` (0-based).
    Expr derivative(std::size_t index) const;

    /// Highest variable index used plus one (0 for constants).
    std::size_t arity_used() const;

    /// Fully parenthesized text accepted back by parse_expression.
    std::string render() const;

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/**
 * Parses one expression:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := unary (('*'|'/') unary)*
 *   unary  := '-' unary | factor
 *   factor := atom ('^' integer)?
 *   atom   := integer | 'x' positive-integer | '(' expr ')'
 *
 * Unary minus binds looser than '^' (so -x1^2 is -(x1^2)), and rational
 * literals are written as integer quotients ("1/2"), folded exactly.
 * Throws SyntaxError with the byte offset, ArityError for x_k with k > arity.
 */
Expr parse_expression(std::string_view source, std::size_t arity);

}  // namespace conefj
