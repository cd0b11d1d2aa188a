#pragma once

#include "conefj/expr.hpp"
#include "conefj/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace conefj {

/**
 * F : Q^arity -> Q^components with its symbolic Jacobian. The partial
 * derivatives are derived once at construction.
 */
class VectorFunction
{
  public:
    VectorFunction(std::size_t arity, std::vector<Expr> components);

    /// Components separated by ';'.
    static VectorFunction parse(std::string_view source, std::size_t arity);
    /// One expression per entry.
    static VectorFunction parse(const std::vector<std::string>& components, std::size_t arity);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return components_.size(); }
    const std::vector<Expr>& components() const noexcept { return components_; }
    const Expr& partial(std::size_t component, std::size_t var) const
    {
        return jacobian_[component * arity_ + var];
    }

    /// Throws DivisionByZero carrying the component index.
    QVector eval(std::span<const Rational> x) const;
    QMatrix jacobian_at(std::span<const Rational> x) const;

    std::vector<std::string> render() const;

  private:
    std::size_t arity_;
    std::vector<Expr> components_;
    std::vector<Expr> jacobian_;
};

}  // namespace conefj
