#pragma once

#include "conefj/linalg.hpp"

#include <optional>
#include <vector>

namespace conefj {

/**
 * maximize objective . x
 *   s.t.   eq  x  = eq_rhs
 *          le  x <= le_rhs
 *          lower_j <= x_j <= upper_j   (each bound optional)
 *
 * An empty `lower`/`upper` vector means every variable is free on that side.
 */
struct LinearProgram
{
    QVector objective;
    QMatrix eq;
    QVector eq_rhs;
    QMatrix le;
    QVector le_rhs;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    std::size_t num_vars() const noexcept { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LPResult
{
    LpStatus status = LpStatus::Infeasible;
    std::optional<QVector> solution;
    std::optional<Rational> objective_value;
};

/**
 * Exact two-phase tableau simplex with Bland's rule. Deterministic: identical
 * programs give identical solutions. Throws MalformedProgram when dimensions
 * are inconsistent.
 */
LPResult solve_lp(const LinearProgram& lp);

/// True when x satisfies every constraint and bound of lp exactly.
bool satisfies(const LinearProgram& lp, std::span<const Rational> x);

/**
 * Incremental construction of a LinearProgram, row by row.
 */
class LpBuilder
{
  public:
    explicit LpBuilder(std::size_t num_vars);

    LpBuilder& maximize(QVector objective);
    LpBuilder& bound(std::size_t var, std::optional<Rational> lower, std::optional<Rational> upper);
    LpBuilder& box_all(const Rational& lower, const Rational& upper);
    LpBuilder& nonnegative_all();
    LpBuilder& add_eq(QVector row, Rational rhs);
    LpBuilder& add_le(QVector row, Rational rhs);
    LpBuilder& add_ge(QVector row, Rational rhs);

    LinearProgram build() const;

  private:
    std::size_t n_;
    QVector objective_;
    std::vector<QVector> eq_rows_;
    QVector eq_rhs_;
    std::vector<QVector> le_rows_;
    QVector le_rhs_;
    std::vector<std::optional<Rational>> lower_;
    std::vector<std::optional<Rational>> upper_;
};

/**
 * Point z with rows_j . z >= t for every row, ||z||_inf <= 1, and the largest
 * such margin t. `margin` is empty when the row list is empty (the
 * conjunction is vacuous, z = 0 and the margin is unbounded).
 */
struct MarginPoint
{
    QVector point;
    std::optional<Rational> margin;

    bool vacuous() const noexcept { return !margin.has_value(); }
};

/// Returns the max-margin point when the optimal margin is > 0, else nothing.
std::optional<MarginPoint> strict_cone_point(std::span<const QVector> rows, std::size_t dim);

}  // namespace conefj
