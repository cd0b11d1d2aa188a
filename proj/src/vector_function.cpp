#include "conefj/vector_function.hpp"

#include "conefj/errors.hpp"

namespace conefj {

VectorFunction::VectorFunction(std::size_t arity, std::vector<Expr> components)
    : arity_(arity), components_(std::move(components))
{
    for (const auto& c : components_)
        if (c.arity_used() > arity_)
            throw ArityError("component uses x" + std::to_string(c.arity_used()) + " but arity is " +
                             std::to_string(arity_));
    jacobian_.reserve(components_.size() * arity_);
    for (const auto& c : components_)
        for (std::size_t j = 0; j < arity_; ++j) jacobian_.push_back(c.derivative(j));
}

VectorFunction VectorFunction::parse(std::string_view source, std::size_t arity)
{
    std::vector<Expr> comps;
    std::size_t start = 0;
    for (;;) {
        auto semi = source.find(';', start);
        auto piece = source.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        try {
            comps.push_back(parse_expression(piece, arity));
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.message(), start + e.position());
        }
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return VectorFunction(arity, std::move(comps));
}

VectorFunction VectorFunction::parse(const std::vector<std::string>& components, std::size_t arity)
{
    std::vector<Expr> comps;
    comps.reserve(components.size());
    for (const auto& c : components) comps.push_back(parse_expression(c, arity));
    return VectorFunction(arity, std::move(comps));
}

QVector VectorFunction::eval(std::span<const Rational> x) const
{
    if (x.size() != arity_)
        throw DimensionMismatch("function of arity " + std::to_string(arity_) + " evaluated at point of dimension " +
                                std::to_string(x.size()));
    QVector out;
    out.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        try {
            out.push_back(components_[i].evaluate(x));
        } catch (const DivisionByZero&) {
            throw DivisionByZero(static_cast<int>(i));
        }
    }
    return out;
}

QMatrix VectorFunction::jacobian_at(std::span<const Rational> x) const
{
    if (x.size() != arity_)
        throw DimensionMismatch("jacobian of arity " + std::to_string(arity_) + " at point of dimension " +
                                std::to_string(x.size()));
    QMatrix out(components_.size(), arity_);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        for (std::size_t j = 0; j < arity_; ++j) {
            try {
                out(i, j) = partial(i, j).evaluate(x);
            } catch (const DivisionByZero&) {
                throw DivisionByZero(static_cast<int>(i));
            }
        }
    }
    return out;
}

std::vector<std::string> VectorFunction::render() const
{
    std::vector<std::string> out;
    for (const auto& c : components_) out.push_back(c.render());
    return out;
}

}  // namespace conefj
