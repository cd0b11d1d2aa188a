#include "conefj/expr.hpp"

#include "conefj/errors.hpp"

#include <cctype>

namespace conefj {

struct Expr::Node
{
    Kind kind;
    Rational value;                // Constant
    std::size_t var = 0;           // Variable
    unsigned long exponent = 0;    // Pow
    std::shared_ptr<const Node> a; // unary operand / left
    std::shared_ptr<const Node> b; // right
};

namespace {

Rational pow_exact(const Rational& base, unsigned long e)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace

Expr Expr::constant(Rational value)
{
    return Expr(std::make_shared<const Node>(Node{Kind::Constant, std::move(value), 0, 0, nullptr, nullptr}));
}

Expr Expr::variable(std::size_t index)
{
    return Expr(std::make_shared<const Node>(Node{Kind::Variable, 0, index, 0, nullptr, nullptr}));
}

Expr::Kind Expr::kind() const { return node_->kind; }

bool Expr::is_constant(const Rational& value) const
{
    return node_->kind == Kind::Constant && node_->value == value;
}

Expr operator-(const Expr& a)
{
    using K = Expr::Kind;
    if (a.kind() == K::Constant) return Expr::constant(-a.node_->value);
    if (a.kind() == K::Negate) return Expr(a.node_->a);
    return Expr(std::make_shared<const Expr::Node>(Expr::Node{K::Negate, 0, 0, 0, a.node_, nullptr}));
}

Expr operator+(const Expr& a, const Expr& b)
{
    using K = Expr::Kind;
    if (a.kind() == K::Constant && b.kind() == K::Constant) return Expr::constant(a.node_->value + b.node_->value);
    if (a.is_constant(0)) return b;
    if (b.is_constant(0)) return a;
    return Expr(std::make_shared<const Expr::Node>(Expr::Node{K::Add, 0, 0, 0, a.node_, b.node_}));
}

Expr operator-(const Expr& a, const Expr& b)
{
    using K = Expr::Kind;
    if (a.kind() == K::Constant && b.kind() == K::Constant) return Expr::constant(a.node_->value - b.node_->value);
    if (b.is_constant(0)) return a;
    if (a.is_constant(0)) return -b;
    return Expr(std::make_shared<const Expr::Node>(Expr::Node{K::Sub, 0, 0, 0, a.node_, b.node_}));
}

Expr operator*(const Expr& a, const Expr& b)
{
    using K = Expr::Kind;
    if (a.kind() == K::Constant && b.kind() == K::Constant) return Expr::constant(a.node_->value * b.node_->value);
    if (a.is_constant(0) || b.is_constant(0)) return Expr::constant(0);
    if (a.is_constant(1)) return b;
    if (b.is_constant(1)) return a;
    return Expr(std::make_shared<const Expr::Node>(Expr::Node{K::Mul, 0, 0, 0, a.node_, b.node_}));
}

Expr operator/(const Expr& a, const Expr& b)
{
    using K = Expr::Kind;
    if (a.kind() == K::Constant && b.kind() == K::Constant && b.node_->value != 0)
        return Expr::constant(a.node_->value / b.node_->value);
    if (b.is_constant(1)) return a;
    return Expr(std::make_shared<const Expr::Node>(Expr::Node{K::Div, 0, 0, 0, a.node_, b.node_}));
}

Expr Expr::pow(const Expr& base, unsigned long exponent)
{
    if (exponent == 0) return constant(1);
    if (exponent == 1) return base;
    if (base.kind() == Kind::Constant) return constant(pow_exact(base.node_->value, exponent));
    return Expr(std::make_shared<const Node>(Node{Kind::Pow, 0, 0, exponent, base.node_, nullptr}));
}

Rational Expr::evaluate(std::span<const Rational> x) const
{
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Constant: return n.value;
        case Kind::Variable:
            if (n.var >= x.size()) throw DimensionMismatch("expression uses x" + std::to_string(n.var + 1));
            return x[n.var];
        case Kind::Negate: return -Expr(n.a).evaluate(x);
        case Kind::Add: return Expr(n.a).evaluate(x) + Expr(n.b).evaluate(x);
        case Kind::Sub: return Expr(n.a).evaluate(x) - Expr(n.b).evaluate(x);
        case Kind::Mul: return Expr(n.a).evaluate(x) * Expr(n.b).evaluate(x);
        case Kind::Div: {
            Rational num = Expr(n.a).evaluate(x);
            Rational den = Expr(n.b).evaluate(x);
            if (den == 0) throw DivisionByZero();
            return num / den;
        }
        case Kind::Pow: return pow_exact(Expr(n.a).evaluate(x), n.exponent);
    }
    return 0;
}

Expr Expr::derivative(std::size_t index) const
{
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Constant: return constant(0);
        case Kind::Variable: return constant(n.var == index ? 1 : 0);
        case Kind::Negate: return -Expr(n.a).derivative(index);
        case Kind::Add: return Expr(n.a).derivative(index) + Expr(n.b).derivative(index);
        case Kind::Sub: return Expr(n.a).derivative(index) - Expr(n.b).derivative(index);
        case Kind::Mul: {
            Expr u(n.a), v(n.b);
            return u.derivative(index) * v + u * v.derivative(index);
        }
        case Kind::Div: {
            Expr u(n.a), v(n.b);
            return (u.derivative(index) * v - u * v.derivative(index)) / pow(v, 2);
        }
        case Kind::Pow: {
            Expr u(n.a);
            return constant(Rational(mpz_class(n.exponent))) * pow(u, n.exponent - 1) * u.derivative(index);
        }
    }
    return constant(0);
}

std::size_t Expr::arity_used() const
{
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Constant: return 0;
        case Kind::Variable: return n.var + 1;
        case Kind::Negate:
        case Kind::Pow: return Expr(n.a).arity_used();
        default: return std::max(Expr(n.a).arity_used(), Expr(n.b).arity_used());
    }
}

std::string Expr::render() const
{
    const Node& n = *node_;
    auto bin = [&](const char* op) {
        return "(" + Expr(n.a).render() + " " + op + " " + Expr(n.b).render() + ")";
    };
    switch (n.kind) {
        case Kind::Constant: {
            std::string s = to_string(n.value);
            return n.value < 0 || n.value.get_den() != 1 ? "(" + s + ")" : s;
        }
        case Kind::Variable: return "x" + std::to_string(n.var + 1);
        case Kind::Negate: return "(-" + Expr(n.a).render() + ")";
        case Kind::Add: return bin("+");
        case Kind::Sub: return bin("-");
        case Kind::Mul: return bin("*");
        case Kind::Div: return bin("/");
        case Kind::Pow: {
            std::string base = Expr(n.a).render();
            if (base.front() != '(') base = "(" + base + ")";
            return base + "^" + std::to_string(n.exponent);
        }
    }
    return "";
}

namespace {

class Parser
{
  public:
    Parser(std::string_view src, std::size_t arity) : src_(src), arity_(arity) {}

    Expr parse()
    {
        skip_ws();
        if (pos_ == src_.size()) throw SyntaxError("empty expression", pos_);
        Expr e = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return e;
    }

  private:
    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    Expr expr()
    {
        Expr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = lhs + term();
            else if (accept('-'))
                lhs = lhs - term();
            else
                return lhs;
        }
    }

    Expr term()
    {
        Expr lhs = unary();
        for (;;) {
            if (accept('*'))
                lhs = lhs * unary();
            else if (accept('/'))
                lhs = lhs / unary();
            else
                return lhs;
        }
    }

    Expr unary()
    {
        if (accept('-')) return -unary();
        return factor();
    }

    Expr factor()
    {
        Expr base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t at = pos_;
            std::string d = digits();
            if (d.empty()) throw SyntaxError("expected nonnegative integer exponent", at);
            if (d.size() > 6) throw SyntaxError("exponent too large", at);
            return Expr::pow(base, std::stoul(d));
        }
        return base;
    }

    Expr atom()
    {
        skip_ws();
        if (pos_ == src_.size()) throw SyntaxError("unexpected end of expression", pos_);
        const std::size_t at = pos_;
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Expr::constant(Rational(mpz_class(digits(), 10)));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
            std::string_view word = src_.substr(pos_, end - pos_);
            if (word.size() < 2 || word[0] != 'x' ||
                word.find_first_not_of("0123456789", 1) != std::string_view::npos)
                throw SyntaxError("unknown identifier '" + std::string(word) + "'", at);
            if (word[1] == '0') throw SyntaxError("variable index must be positive", at);
            if (word.size() > 10) throw ArityError("variable " + std::string(word) + " exceeds arity");
            pos_ = end;
            const std::size_t k = std::stoul(std::string(word.substr(1)));
            if (k > arity_)
                throw ArityError("variable x" + std::to_string(k) + " exceeds arity " + std::to_string(arity_));
            return Expr::variable(k - 1);
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", at);
    }

    std::string_view src_;
    std::size_t arity_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view source, std::size_t arity) { return Parser(source, arity).parse(); }

}  // namespace conefj
