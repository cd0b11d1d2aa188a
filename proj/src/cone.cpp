#include "conefj/cone.hpp"

#include "conefj/double_description.hpp"
#include "conefj/errors.hpp"
#include "conefj/lp.hpp"

namespace conefj {

namespace {

void require_dim(const PolyhedralCone& c, std::span<const Rational> x, const char* op)
{
    if (x.size() != c.dim())
        throw DimensionMismatch(std::string(op) + ": point of dimension " + std::to_string(x.size()) +
                                " for cone of dimension " + std::to_string(c.dim()));
}

}  // namespace

PolyhedralCone::PolyhedralCone(std::size_t dim, std::vector<QVector> generators)
    : dim_(dim), dual_(std::make_shared<DualCache>())
{
    generators_.reserve(generators.size());
    for (auto& g : generators) {
        if (g.size() != dim)
            throw DimensionMismatch("cone generator of dimension " + std::to_string(g.size()) +
                                    ", expected " + std::to_string(dim));
        if (!is_zero(g)) generators_.push_back(std::move(g));
    }
}

PolyhedralCone PolyhedralCone::zero(std::size_t dim) { return PolyhedralCone(dim); }

PolyhedralCone PolyhedralCone::orthant(std::size_t dim)
{
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < dim; ++i) gens.push_back(unit(dim, i));
    return PolyhedralCone(dim, std::move(gens));
}

PolyhedralCone PolyhedralCone::whole_space(std::size_t dim)
{
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < dim; ++i) {
        gens.push_back(unit(dim, i));
        gens.push_back(negate(unit(dim, i)));
    }
    return PolyhedralCone(dim, std::move(gens));
}

const std::vector<QVector>& PolyhedralCone::dual_generators() const
{
    std::call_once(dual_->once, [this] {
        dual_->generators = generators_from_inequalities(generators_, dim_);
    });
    return dual_->generators;
}

PolyhedralCone dual_cone(const PolyhedralCone& c) { return PolyhedralCone(c.dim(), c.dual_generators()); }

bool contains(const PolyhedralCone& c, std::span<const Rational> x)
{
    require_dim(c, x, "contains");
    const auto& gens = c.generators();
    if (gens.empty()) return is_zero(x);

    // Feasibility of sum_i b_i g_i = x, b >= 0.
    LpBuilder b(gens.size());
    b.nonnegative_all();
    for (std::size_t r = 0; r < c.dim(); ++r) {
        QVector row(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) row[i] = gens[i][r];
        b.add_eq(std::move(row), x[r]);
    }
    return solve_lp(b.build()).status == LpStatus::Optimal;
}

bool contains_interior(const PolyhedralCone& c, std::span<const Rational> x)
{
    require_dim(c, x, "contains_interior");
    const auto& duals = c.dual_generators();
    if (duals.empty()) return true;
    for (const auto& d : duals)
        if (dot(d, x) <= 0) return false;
    return true;
}

bool is_pointed(const PolyhedralCone& c)
{
    if (c.is_trivial()) return true;
    return strict_cone_point(c.generators(), c.dim()).has_value();
}

QVector separate_from_cone(const PolyhedralCone& c, std::span<const Rational> x)
{
    require_dim(c, x, "separate_from_cone");
    // maximize t  s.t.  l . g >= 0 (all g),  -l . x >= t,  -1 <= l <= 1.
    const std::size_t n = c.dim();
    LpBuilder b(n + 1);
    b.maximize(unit(n + 1, n));
    for (std::size_t i = 0; i < n; ++i) b.bound(i, Rational(-1), Rational(1));
    for (const auto& g : c.generators()) {
        QVector row(g);
        row.push_back(0);
        b.add_ge(std::move(row), 0);
    }
    QVector row = negate(x);
    row.push_back(-1);
    b.add_ge(std::move(row), 0);

    LPResult res = solve_lp(b.build());
    if (res.status != LpStatus::Optimal || *res.objective_value <= 0)
        throw NotOutside("point " + to_string(x) + " lies in the cone");
    return QVector(res.solution->begin(), res.solution->begin() + static_cast<std::ptrdiff_t>(n));
}

StrictSeparator strict_separator(const PolyhedralCone& k)
{
    if (k.is_trivial()) return StrictSeparator{negate(unit(k.dim(), 0)), true};
    auto z = strict_cone_point(k.generators(), k.dim());
    if (!z) throw NotPointed("cone contains a line; no strict separator exists");
    return StrictSeparator{negate(z->point), false};
}

PolyhedralCone product(const PolyhedralCone& c, const PolyhedralCone& k)
{
    const std::size_t n = c.dim() + k.dim();
    std::vector<QVector> gens;
    for (const auto& g : c.generators()) {
        QVector v(n);
        std::copy(g.begin(), g.end(), v.begin());
        gens.push_back(std::move(v));
    }
    for (const auto& h : k.generators()) {
        QVector v(n);
        std::copy(h.begin(), h.end(), v.begin() + static_cast<std::ptrdiff_t>(c.dim()));
        gens.push_back(std::move(v));
    }
    return PolyhedralCone(n, std::move(gens));
}

CaratheodoryDecomposition caratheodory(std::span<const QVector> points, std::span<const Rational> target)
{
    const std::size_t dim = target.size();
    for (const auto& p : points)
        if (p.size() != dim) throw DimensionMismatch("caratheodory: point dimension mismatch");
    if (points.empty()) throw NotInHull("empty point set");

    // Weights a >= 0 with sum a_i p_i = target, sum a_i = 1. A basic feasible
    // solution has at most dim + 1 nonzero weights.
    LpBuilder b(points.size());
    b.nonnegative_all();
    for (std::size_t r = 0; r < dim; ++r) {
        QVector row(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) row[i] = points[i][r];
        b.add_eq(std::move(row), target[r]);
    }
    b.add_eq(QVector(points.size(), Rational(1)), 1);

    LPResult res = solve_lp(b.build());
    if (res.status != LpStatus::Optimal) throw NotInHull("target " + to_string(target) + " is outside the hull");

    CaratheodoryDecomposition out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if ((*res.solution)[i] == 0) continue;
        out.points.push_back(points[i]);
        out.coefficients.push_back((*res.solution)[i]);
    }
    return out;
}

bool same_cone(const PolyhedralCone& a, const PolyhedralCone& b)
{
    if (a.dim() != b.dim()) return false;
    for (const auto& g : a.generators())
        if (!contains(b, g)) return false;
    for (const auto& g : b.generators())
        if (!contains(a, g)) return false;
    return true;
}

}  // namespace conefj
