#include "conefj/problem.hpp"

#include "conefj/errors.hpp"
#include "conefj/lp.hpp"

#include <algorithm>
#include <iostream>

namespace conefj {

void VectorProblem::validate() const
{
    const std::size_t s = f.arity();
    if (g.arity() != s) throw DimensionMismatch("f and g have different arity");
    if (f.size() != C.dim()) throw DimensionMismatch("f has " + std::to_string(f.size()) + " components, C has dimension " + std::to_string(C.dim()));
    if (g.size() != K.dim()) throw DimensionMismatch("g has " + std::to_string(g.size()) + " components, K has dimension " + std::to_string(K.dim()));
    if (box.size() != s) throw DimensionMismatch("box has " + std::to_string(box.size()) + " intervals for arity " + std::to_string(s));
    for (const auto& iv : box)
        if (!(iv.lo < iv.hi)) throw Error("box interval with lo >= hi");
    if (grid < 2) throw Error("grid must have at least 2 points per axis");
}

std::size_t SampleSet::feasible_count() const
{
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const SamplePoint& p) { return p.feasible; }));
}

namespace {

bool k_contains_minus(const PolyhedralCone& K, const QVector& gx) { return contains(K, negate(gx)); }

}  // namespace

SampleSet make_samples(const VectorProblem& p, std::vector<QVector> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    SampleSet out;
    for (auto& x : points) {
        SamplePoint sp;
        try {
            sp.fx = p.f.eval(x);
            sp.gx = p.g.eval(x);
            sp.jf = p.f.jacobian_at(x);
            sp.jg = p.g.jacobian_at(x);
        } catch (const DivisionByZero& e) {
            std::cerr << "note: dropping sample " << to_string(x) << " (" << e.what() << ")\n";
            ++out.dropped;
            continue;
        }
        sp.feasible = k_contains_minus(p.K, sp.gx);
        sp.x = std::move(x);
        out.points.push_back(std::move(sp));
    }
    return out;
}

SampleSet make_samples(const VectorProblem& p, std::size_t grid)
{
    p.validate();
    if (grid < 2) throw Error("grid must have at least 2 points per axis");
    const std::size_t s = p.arity();
    std::vector<QVector> axes(s);
    for (std::size_t i = 0; i < s; ++i) {
        const Rational step = (p.box[i].hi - p.box[i].lo) / Rational(mpz_class(grid - 1));
        for (std::size_t k = 0; k < grid; ++k) axes[i].push_back(p.box[i].lo + Rational(mpz_class(k)) * step);
    }
    std::vector<QVector> points;
    std::vector<std::size_t> idx(s, 0);
    bool more = true;
    while (more) {
        QVector x(s);
        for (std::size_t i = 0; i < s; ++i) x[i] = axes[i][idx[i]];
        points.push_back(std::move(x));
        more = false;
        for (std::size_t d = s; d-- > 0;) {
            if (++idx[d] < grid) {
                more = true;
                break;
            }
            idx[d] = 0;
        }
    }
    return make_samples(p, std::move(points));
}

SampleSet make_samples(const VectorProblem& p) { return make_samples(p, p.grid); }

bool feasible(const VectorProblem& p, std::span<const Rational> x) { return k_contains_minus(p.K, p.g.eval(x)); }

namespace {

ActiveFace face_from_value(const PolyhedralCone& K, std::span<const Rational> x, const QVector& gx)
{
    std::vector<QVector> active;
    for (const auto& w : K.dual_generators()) {
        const Rational v = dot(w, gx);
        if (v == 0)
            active.push_back(w);
        else if (v > 0)
            throw Infeasible("g(x) is not in -K at " + to_string(x));
    }
    PolyhedralCone mstar(K.dim(), active);
    PolyhedralCone mstarstar = dual_cone(mstar);
    return ActiveFace{QVector(x.begin(), x.end()), std::move(active), std::move(mstar), std::move(mstarstar)};
}

/**
 * Some z != 0 with ge_rows . z >= 0 and eq_rows . z = 0. The solution set is
 * a polyhedral cone; it is nonzero iff it meets one of the hyperplanes
 * +/- e_i . z = 1, tried in order +e_1, -e_1, +e_2, ...
 */
std::optional<QVector> nonzero_cone_point(std::size_t n, const std::vector<QVector>& ge_rows,
                                          const std::vector<QVector>& eq_rows)
{
    for (std::size_t i = 0; i < n; ++i) {
        for (int sgn_e : {+1, -1}) {
            LpBuilder b(n);
            for (const auto& r : ge_rows) b.add_ge(r, 0);
            for (const auto& r : eq_rows) b.add_eq(r, 0);
            b.add_eq(scale(Rational(sgn_e), unit(n, i)), 1);
            LPResult res = solve_lp(b.build());
            if (res.status == LpStatus::Optimal) return std::move(*res.solution);
        }
    }
    return std::nullopt;
}

std::optional<FJCertificate> fj_from_values(const VectorProblem& p, const QVector& gx, const QMatrix& jf, const QMatrix& jg)
{
    const std::size_t n = p.C.dim();
    const std::size_t m = p.K.dim();
    const std::size_t s = p.arity();
    std::vector<QVector> ge;
    for (const auto& c : p.C.generators()) {
        QVector r(n + m);
        std::copy(c.begin(), c.end(), r.begin());
        ge.push_back(std::move(r));
    }
    for (const auto& d : p.K.generators()) {
        QVector r(n + m);
        std::copy(d.begin(), d.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
        ge.push_back(std::move(r));
    }
    std::vector<QVector> eq;
    for (std::size_t j = 0; j < s; ++j) {
        QVector r(n + m);
        for (std::size_t i = 0; i < n; ++i) r[i] = jf(i, j);
        for (std::size_t l = 0; l < m; ++l) r[n + l] = jg(l, j);
        eq.push_back(std::move(r));
    }
    {
        QVector r(n + m);
        std::copy(gx.begin(), gx.end(), r.begin() + static_cast<std::ptrdiff_t>(n));
        eq.push_back(std::move(r));
    }
    auto z = nonzero_cone_point(n + m, ge, eq);
    if (!z) return std::nullopt;
    return FJCertificate{QVector(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(n)),
                         QVector(z->begin() + static_cast<std::ptrdiff_t>(n), z->end())};
}

}  // namespace

ActiveFace active_face(const VectorProblem& p, std::span<const Rational> x)
{
    return face_from_value(p.K, x, p.g.eval(x));
}

ActiveFace active_face(const VectorProblem& p, const SamplePoint& s) { return face_from_value(p.K, s.x, s.gx); }

std::optional<QVector> is_vector_critical(const PolyhedralCone& C, const QMatrix& jf)
{
    const std::size_t n = C.dim();
    if (jf.rows() != n) throw DimensionMismatch("Jacobian rows do not match cone dimension");
    std::vector<QVector> eq;
    for (std::size_t j = 0; j < jf.cols(); ++j) eq.push_back(jf.col(j));
    return nonzero_cone_point(n, C.generators(), eq);
}

std::optional<QVector> is_vector_critical(const VectorFunction& f, const PolyhedralCone& C, std::span<const Rational> x)
{
    return is_vector_critical(C, f.jacobian_at(x));
}

std::optional<FJCertificate> fj_stationary(const VectorProblem& p, std::span<const Rational> x)
{
    QVector gx = p.g.eval(x);
    if (!k_contains_minus(p.K, gx)) throw Infeasible("point " + to_string(x) + " is infeasible");
    return fj_from_values(p, gx, p.f.jacobian_at(x), p.g.jacobian_at(x));
}

std::optional<FJCertificate> fj_stationary(const VectorProblem& p, const SamplePoint& s)
{
    if (!s.feasible) throw Infeasible("point " + to_string(s.x) + " is infeasible");
    return fj_from_values(p, s.gx, s.jf, s.jg);
}

bool in_dual_of(const PolyhedralCone& c, std::span<const Rational> v)
{
    if (v.size() != c.dim()) return false;
    for (const auto& g : c.generators())
        if (dot(g, v) < 0) return false;
    return true;
}

bool verify_fj_certificate(const VectorProblem& p, std::span<const Rational> x, const FJCertificate& cert)
{
    if (cert.lambda.size() != p.C.dim() || cert.mu.size() != p.K.dim()) return false;
    if (!in_dual_of(p.C, cert.lambda) || !in_dual_of(p.K, cert.mu)) return false;
    if (is_zero(cert.lambda) && is_zero(cert.mu)) return false;
    const QVector gx = p.g.eval(x);
    if (!k_contains_minus(p.K, gx)) return false;
    if (dot(cert.mu, gx) != 0) return false;
    const QVector stationarity = add(vecmat(cert.lambda, p.f.jacobian_at(x)), vecmat(cert.mu, p.g.jacobian_at(x)));
    return is_zero(stationarity);
}

namespace {

std::vector<std::pair<QVector, bool>> weak_scan(const PolyhedralCone& C, const SampleSet& s, bool feasible_only)
{
    std::vector<std::pair<QVector, bool>> out;
    for (const auto& xi : s.points) {
        if (feasible_only && !xi.feasible) continue;
        bool minimal = true;
        for (const auto& yj : s.points) {
            if (&yj == &xi || (feasible_only && !yj.feasible)) continue;
            if (contains_interior(C, sub(xi.fx, yj.fx))) {
                minimal = false;
                break;
            }
        }
        out.emplace_back(xi.x, minimal);
    }
    return out;
}

}  // namespace

std::vector<std::pair<QVector, bool>> weak_minimizers(const VectorProblem& p, const SampleSet& s)
{
    return weak_scan(p.C, s, true);
}

std::vector<std::pair<QVector, bool>> weak_minimizers_unconstrained(const PolyhedralCone& C, const SampleSet& s)
{
    return weak_scan(C, s, false);
}

}  // namespace conefj
