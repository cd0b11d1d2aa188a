#pragma once

#include "conefj/cone.hpp"
#include "conefj/linalg.hpp"
#include "conefj/vector_function.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace conefj {

struct Interval
{
    Rational lo;
    Rational hi;
};

/**
 * C-minimize f(x) subject to g(x) in -K, with x sampled on a uniform grid
 * over `box` (`grid` points per axis).
 *
 * Unconstrained problems are encoded with g = 0 and K = Q^m (whole space),
 * so K* = {0} and every Fritz John multiplier has mu = 0.
 */
struct VectorProblem
{
    VectorFunction f;
    VectorFunction g;
    PolyhedralCone C;
    PolyhedralCone K;
    std::vector<Interval> box;
    std::size_t grid = 2;

    std::size_t arity() const noexcept { return f.arity(); }

    /// Throws DimensionMismatch / Error when the pieces do not fit together.
    void validate() const;
};

/// A grid point together with everything the checkers need at it.
struct SamplePoint
{
    QVector x;
    bool feasible = false;
    QVector fx;
    QVector gx;
    QMatrix jf;
    QMatrix jg;
};

/**
 * Lexicographically ordered, pairwise distinct sample points. Points where
 * f, g or their Jacobians hit a pole are dropped and counted.
 */
struct SampleSet
{
    std::vector<SamplePoint> points;
    std::size_t dropped = 0;

    std::size_t feasible_count() const;
};

SampleSet make_samples(const VectorProblem& p);
SampleSet make_samples(const VectorProblem& p, std::size_t grid);
/// Samples at explicit points (sorted and deduplicated).
SampleSet make_samples(const VectorProblem& p, std::vector<QVector> points);

bool feasible(const VectorProblem& p, std::span<const Rational> x);

/// M*(x): the generators of K* that are tight at g(x), and M**(x).
struct ActiveFace
{
    QVector base_point;
    std::vector<QVector> active_dual_generators;
    PolyhedralCone mstar;
    PolyhedralCone mstarstar;
};

/// Throws Infeasible when g(x) is not in -K.
ActiveFace active_face(const VectorProblem& p, std::span<const Rational> x);
ActiveFace active_face(const VectorProblem& p, const SamplePoint& s);

/// Multipliers satisfying the Fritz John conditions at a point.
struct FJCertificate
{
    QVector lambda;
    QVector mu;
};

/// lambda in C* \ {0} with lambda . Jf(x) = 0, if one exists.
std::optional<QVector> is_vector_critical(const VectorFunction& f, const PolyhedralCone& C,
                                          std::span<const Rational> x);
std::optional<QVector> is_vector_critical(const PolyhedralCone& C, const QMatrix& jf);

/// Throws Infeasible when x is not feasible.
std::optional<FJCertificate> fj_stationary(const VectorProblem& p, std::span<const Rational> x);
std::optional<FJCertificate> fj_stationary(const VectorProblem& p, const SamplePoint& s);

/// Re-checks lambda in C*, mu in K*, (lambda, mu) != 0 and both equations exactly.
bool verify_fj_certificate(const VectorProblem& p, std::span<const Rational> x, const FJCertificate& cert);

/// Membership in the polar of cone(gens) straight from its H-representation.
bool in_dual_of(const PolyhedralCone& c, std::span<const Rational> v);

/**
 * Sample-relative weak minimality: a feasible sample x is flagged when no
 * feasible sample y has f(x) - f(y) in int(C). Only feasible points appear.
 */
std::vector<std::pair<QVector, bool>> weak_minimizers(const VectorProblem& p, const SampleSet& s);

/// Same scan over every sample, ignoring feasibility (unconstrained setting).
std::vector<std::pair<QVector, bool>> weak_minimizers_unconstrained(const PolyhedralCone& C, const SampleSet& s);

}  // namespace conefj
