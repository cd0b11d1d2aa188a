#include "support.hpp"

#include "conefj/errors.hpp"
#include "conefj/expr.hpp"
#include "conefj/vector_function.hpp"

#include <doctest.h>

#include <string>

using namespace conefj;
using conefj::testing::Gen;
using conefj::testing::qv;

namespace {

// Random polynomial text over x1..xs with small integer coefficients.
std::string random_polynomial(Gen& gen, std::size_t arity, int terms)
{
    std::string out;
    for (int t = 0; t < terms; ++t) {
        long c = gen.integer(-4, 4);
        if (t > 0)
            out += " + ";
        out += "(" + std::to_string(c) + ")";
        long factors = gen.integer(0, 2);
        for (long f = 0; f < factors; ++f) {
            out += "*x" + std::to_string(gen.integer(1, static_cast<long>(arity)));
            long e = gen.integer(0, 3);
            if (e != 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parsing and evaluating expressions")
{
    auto ev = [](const char* src, std::size_t arity, QVector x) { return parse_expression(src, arity).evaluate(x); };
    CHECK(ev("x1^3", 1, qv({"2"})) == 8);
    CHECK(ev("-x1^2", 1, qv({"3"})) == -9);
    CHECK(ev("(-x1)^2", 1, qv({"3"})) == 9);
    CHECK(ev("1/2 + x1", 1, qv({"1/3"})) == Rational(5, 6));
    CHECK(ev("2 - 3 - 4", 0, {}) == -5);
    CHECK(ev("12 / 3 / 2", 0, {}) == 2);
    CHECK(ev("2*x1 - x2*x2", 2, qv({"1", "-1"})) == 1);
    CHECK(ev("x1^0", 1, qv({"0"})) == 1);
    CHECK(ev("--x1", 1, qv({"4"})) == 4);
    CHECK_THROWS_AS(ev("1/x1", 1, qv({"0"})), DivisionByZero);
}

TEST_CASE("syntax errors carry a position")
{
    try {
        parse_expression("x1 + * 2", 1);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 5);
    }
    for (const char* bad : {"", "x0", "y1", "x1 +", "(x1", "x1)", "x1^-1", "x1^x2", "1.5", "x1 x1"})
        CHECK_THROWS_AS(parse_expression(bad, 2), ParseError);
    CHECK_THROWS_AS(parse_expression("x3", 2), ArityError);
}

TEST_CASE("vector functions: parse, eval, jacobian")
{
    VectorFunction cube = VectorFunction::parse("x1^3", 1);
    CHECK(cube.size() == 1);
    CHECK(cube.eval(qv({"2"})) == qv({"8"}));
    CHECK(cube.jacobian_at(qv({"1"})) == QMatrix(1, 1, {Rational(3)}));

    VectorFunction two = VectorFunction::parse("x1 - x2; x1*x2", 2);
    CHECK(two.size() == 2);
    CHECK(two.eval(qv({"3", "2"})) == qv({"1", "6"}));

    CHECK_THROWS_AS(VectorFunction::parse("x3", 2), ArityError);
    CHECK(VectorFunction::parse("x1 - x1", 1).eval(qv({"17/3"})) == qv({"0"}));

    VectorFunction ids = VectorFunction::parse("x1; x2", 2);
    CHECK(ids.jacobian_at(qv({"5", "-2"})) == QMatrix::identity(2));
    CHECK(VectorFunction::parse("x1*x2", 2).jacobian_at(qv({"2", "3"})) ==
          QMatrix(1, 2, {Rational(3), Rational(2)}));

    VectorFunction pole = VectorFunction::parse("x1; 1/x1", 1);
    try {
        pole.eval(qv({"0"}));
        FAIL("expected DivisionByZero");
    } catch (const DivisionByZero& e) {
        CHECK(e.component() == 1);
    }
}

TEST_CASE("syntax error offsets are relative to the whole source")
{
    try {
        VectorFunction::parse("x1; x1 +", 1);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("quotient rule on a rational function")
{
    VectorFunction f = VectorFunction::parse("x1/(1 + x2^2)", 2);
    QMatrix j = f.jacobian_at(qv({"2", "1"}));
    CHECK(j(0, 0) == Rational(1, 2));
    CHECK(j(0, 1) == -1);  // -2*x1*x2/(1+x2^2)^2 = -4/4
}

TEST_CASE("jacobians match exact central differences")
{
    // Exact difference quotients at h = 1/2^k; for degree <= 2 they equal
    // the derivative outright.
    Gen gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t arity = static_cast<std::size_t>(gen.integer(1, 3));
        std::string src = random_polynomial(gen, arity, 4);
        VectorFunction f = VectorFunction::parse(src, arity);
        QVector x = gen.vector(arity, -2, 2);
        QMatrix j = f.jacobian_at(x);
        for (std::size_t v = 0; v < arity; ++v) {
            Rational prev_scaled = -1, prev_h;
            for (int k = 4; k <= 10; k += 2) {
                Rational h(1, 1 << k);
                QVector xp = x, xm = x;
                xp[v] += h;
                xm[v] -= h;
                Rational quotient = (f.eval(xp)[0] - f.eval(xm)[0]) / (2 * h);
                Rational err = abs(quotient - j(0, v));
                // err <= h^2/6 * max|f'''| near x. Four terms, |c| <= 4, degree
                // <= 6 on |x| <= 3: |f'''| <= 4 * 4 * 120 * 27.
                CHECK(err <= 4 * 4 * 540 * h * h);
                // For degree <= 6 the error is exactly |a h^2 + b h^4| with
                // |b| = |f^(5)|/120 <= 4 * 4 * 18, so err/h^2 converges at rate h^2.
                Rational scaled = err / (h * h);
                if (prev_scaled >= 0)
                    CHECK(abs(scaled - prev_scaled) <= 4 * 4 * 18 * prev_h * prev_h);
                prev_scaled = scaled;
                prev_h = h;
            }
        }
    }
    VectorFunction quad = VectorFunction::parse("3*x1^2 - x1*x2 + 5", 2);
    QVector x = qv({"1/3", "-2"});
    Rational h(1, 8);
    Rational quotient = (quad.eval(qv({"11/24", "-2"}))[0] - quad.eval(qv({"5/24", "-2"}))[0]) / (2 * h);
    CHECK(quotient == quad.jacobian_at(x)(0, 0));
}

TEST_CASE("jacobian is additive")
{
    Gen gen(37);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t arity = static_cast<std::size_t>(gen.integer(1, 3));
        std::string a = random_polynomial(gen, arity, 3);
        std::string b = random_polynomial(gen, arity, 3);
        VectorFunction fa = VectorFunction::parse(a, arity);
        VectorFunction fb = VectorFunction::parse(b, arity);
        VectorFunction fs = VectorFunction::parse("(" + a + ") + (" + b + ")", arity);
        QVector x = gen.vector(arity);
        QMatrix ja = fa.jacobian_at(x), jb = fb.jacobian_at(x), js = fs.jacobian_at(x);
        for (std::size_t v = 0; v < arity; ++v)
            CHECK(js(0, v) == ja(0, v) + jb(0, v));
    }
}

TEST_CASE("render round-trips through the parser")
{
    Gen gen(43);
    const char* fixed[] = {"-x1^2", "1/2*x1 - x2/3", "(x1 - 1)^2 + x2", "x1/(x2 + 3)", "7", "-(x1*x2)^3"};
    for (const char* src : fixed) {
        Expr e = parse_expression(src, 2);
        Expr back = parse_expression(e.render(), 2);
        for (int k = 0; k < 10; ++k) {
            QVector x = gen.vector(2, -3, 3);
            bool pole = false;
            Rational a, b;
            try {
                a = e.evaluate(x);
            } catch (const DivisionByZero&) {
                pole = true;
            }
            if (pole) {
                CHECK_THROWS_AS(back.evaluate(x), DivisionByZero);
                continue;
            }
            b = back.evaluate(x);
            CHECK(a == b);
        }
        CHECK(back.render() == e.render());
    }
    for (int trial = 0; trial < 30; ++trial) {
        std::string src = random_polynomial(gen, 2, 4);
        Expr e = parse_expression(src, 2);
        Expr back = parse_expression(e.render(), 2);
        QVector x = gen.vector(2);
        CHECK(e.evaluate(x) == back.evaluate(x));
    }
}

TEST_CASE("arity_used and derivative of constants")
{
    CHECK(parse_expression("x2 + 1", 3).arity_used() == 2);
    CHECK(parse_expression("4", 3).arity_used() == 0);
    CHECK(parse_expression("x1*x2", 2).derivative(0).render() == parse_expression("x2", 2).render());
    CHECK(parse_expression("5", 1).derivative(0).is_constant(Rational(0)));
}
