#include "conefj/gencvx.hpp"

#include "conefj/errors.hpp"
#include "conefj/lp.hpp"

#include <algorithm>
#include <random>

namespace conefj {

const char* to_string(Property p)
{
    switch (p) {
        case Property::Quasiconvex: return "quasiconvex";
        case Property::Pseudoconvex: return "pseudoconvex";
        case Property::ScalarlyQuasiconvex: return "scalarly-quasiconvex";
        case Property::StrictlyScalarlyQuasiconvex: return "strictly-scalarly-quasiconvex";
        case Property::QcImplication: return "qc-implication";
        case Property::FjPseudoconvex: return "fj-pseudoconvex";
        case Property::FjPseudoinvex: return "fj-pseudoinvex";
    }
    return "?";
}

const char* to_string(Verdict v)
{
    return v == Verdict::Falsified ? "Falsified" : "NoCounterexampleOnSample";
}

Property parse_property(std::string_view name)
{
    for (auto p : {Property::Quasiconvex, Property::Pseudoconvex, Property::ScalarlyQuasiconvex,
                   Property::StrictlyScalarlyQuasiconvex, Property::QcImplication, Property::FjPseudoconvex,
                   Property::FjPseudoinvex})
        if (name == to_string(p)) return p;
    throw ParseError("unknown property '" + std::string(name) + "'");
}

const char* to_string(Theorem t)
{
    switch (t) {
        case Theorem::CrouzeixFerland: return "crouzeix-ferland";
        case Theorem::FjPseudoconvex: return "fj-pc";
        case Theorem::FjPseudoinvex: return "fj-pi";
    }
    return "?";
}

const char* to_string(Agreement a)
{
    switch (a) {
        case Agreement::Agree: return "AGREE";
        case Agreement::Disagree: return "DISAGREE";
        case Agreement::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

Theorem parse_theorem(std::string_view name)
{
    for (auto t : {Theorem::CrouzeixFerland, Theorem::FjPseudoconvex, Theorem::FjPseudoinvex})
        if (name == to_string(t)) return t;
    throw ParseError("unknown theorem '" + std::string(name) + "'");
}

namespace {

constexpr const char* kQuasiconvexCond = "Jf(x)(y-x) in -C";
constexpr const char* kPseudoconvexCond = "Jf(x)(y-x) in -int(C)";
constexpr const char* kSegmentCond = "mu.g(z) <= max(mu.g(x), mu.g(y))";
constexpr const char* kStrictSegmentCond = "mu.g(z) < mu.g(x)";
constexpr const char* kQcCond = "Jg(x)(y-x) in -M**(x)";
constexpr const char* kFjFirstCond = "Jf(x)(y-x) in -int(C**)";
constexpr const char* kFjSecondCond = "Jg(x)(y-x) in -int(M**(x))";
constexpr const char* kFjInvexCond = "exists eta: Jf(x)eta in -int(C**), Jg(x)eta in -int(M**(x))";

std::vector<Rational> segment_params(unsigned T)
{
    std::vector<Rational> ts;
    for (unsigned k = 1; k < T; ++k) ts.emplace_back(k, T);
    for (auto& t : ts) t.canonicalize();
    return ts;
}

QVector on_segment(const QVector& x, const QVector& y, const Rational& t) { return add(x, scale(t, sub(y, x))); }

/// -J (y - x)
QVector neg_directional(const QMatrix& j, const QVector& x, const QVector& y) { return negate(matvec(j, sub(y, x))); }

std::optional<QVector> first_nonpositive(const std::vector<QVector>& gens, const QVector& v)
{
    for (const auto& d : gens)
        if (dot(d, v) <= 0) return d;
    return std::nullopt;
}

PropertyReport falsified(PropertyReport r, CounterexamplePair cx)
{
    r.verdict = Verdict::Falsified;
    r.counterexample = std::move(cx);
    return r;
}

QVector concat(const QVector& a, const QVector& b)
{
    QVector out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool is_active(const VectorProblem& p, const QVector& w, const QVector& gx)
{
    return w.size() == p.K.dim() && !is_zero(w) && in_dual_of(p.K, w) && dot(w, gx) == 0;
}

void require_pointed_duals(const VectorProblem& p)
{
    if (!is_pointed(dual_cone(p.C))) throw NotPointed("C* is not pointed (C has empty interior)");
    if (!is_pointed(dual_cone(p.K))) throw NotPointed("K* is not pointed (K has empty interior)");
}

std::optional<EtaWitness> eta_at(const VectorProblem& p, const QVector& x, const QMatrix& jf, const QMatrix& jg,
                                 const std::vector<QVector>& active)
{
    // Variables (eta_1..eta_s, t): maximize t, each generator row . eta + t <= 0,
    // -1 <= eta_i <= 1, t <= 1 (keeps the program bounded when no rows exist).
    const std::size_t s = p.arity();
    LpBuilder b(s + 1);
    b.maximize(unit(s + 1, s));
    for (std::size_t i = 0; i < s; ++i) b.bound(i, Rational(-1), Rational(1));
    b.bound(s, std::nullopt, Rational(1));
    auto add_row = [&](QVector row) {
        row.push_back(1);
        b.add_le(std::move(row), 0);
    };
    for (const auto& u : p.C.dual_generators()) add_row(vecmat(u, jf));
    for (const auto& w : active) add_row(vecmat(w, jg));

    LPResult res = solve_lp(b.build());
    if (res.status != LpStatus::Optimal || *res.objective_value <= 0) return std::nullopt;
    QVector eta(res.solution->begin(), res.solution->begin() + static_cast<std::ptrdiff_t>(s));
    return EtaWitness{x, {}, std::move(eta), *res.objective_value};
}

std::vector<QVector> multiplier_sample(const PolyhedralCone& K, const CheckOptions& opts)
{
    std::vector<QVector> mus = K.dual_generators();
    for (const auto& mu : opts.extra_mu) {
        if (mu.size() != K.dim()) throw DimensionMismatch("extra multiplier has wrong dimension");
        if (!in_dual_of(K, mu)) throw NotInDual("multiplier " + to_string(mu) + " is not in K*");
        if (!is_zero(mu) && std::find(mus.begin(), mus.end(), mu) == mus.end()) mus.push_back(mu);
    }
    const auto& gens = K.dual_generators();
    if (gens.size() < 2) return mus;
    std::mt19937_64 rng(opts.seed);
    for (unsigned r = 0; r < opts.mu_samples; ++r) {
        QVector mu(K.dim());
        bool any = false;
        for (const auto& g : gens) {
            const auto c = static_cast<long>(rng() % 4);
            if (c == 0) continue;
            any = true;
            mu = add(mu, scale(Rational(c), g));
        }
        if (!any || is_zero(mu)) continue;
        mu = primitive(mu);
        if (std::find(mus.begin(), mus.end(), mu) == mus.end()) mus.push_back(std::move(mu));
    }
    return mus;
}

}  // namespace

PropertyReport check_quasiconvex_vector(const VectorFunction& f, const PolyhedralCone& C, const SampleSet& s)
{
    if (f.size() != C.dim()) throw DimensionMismatch("f and C dimensions differ");
    PropertyReport r;
    r.property = Property::Quasiconvex;
    for (const auto& px : s.points) {
        for (const auto& py : s.points) {
            if (&px == &py) continue;
            ++r.stats.examined;
            if (!contains_interior(C, sub(px.fx, py.fx))) continue;
            ++r.stats.triggered;
            QVector v = neg_directional(px.jf, px.x, py.x);
            if (contains(C, v)) continue;
            return falsified(std::move(r), {Property::Quasiconvex, px.x, py.x, kQuasiconvexCond, separate_from_cone(C, v), std::nullopt});
        }
    }
    return r;
}

PropertyReport check_pseudoconvex_vector(const VectorFunction& f, const PolyhedralCone& C, const SampleSet& s)
{
    if (f.size() != C.dim()) throw DimensionMismatch("f and C dimensions differ");
    PropertyReport r;
    r.property = Property::Pseudoconvex;
    for (const auto& px : s.points) {
        for (const auto& py : s.points) {
            if (&px == &py) continue;
            ++r.stats.examined;
            if (!contains_interior(C, sub(px.fx, py.fx))) continue;
            ++r.stats.triggered;
            QVector v = neg_directional(px.jf, px.x, py.x);
            if (contains_interior(C, v)) continue;
            auto d = first_nonpositive(C.dual_generators(), v);
            return falsified(std::move(r), {Property::Pseudoconvex, px.x, py.x, kPseudoconvexCond, *d, std::nullopt});
        }
    }
    return r;
}

PropertyReport check_scalarly_quasiconvex(const VectorFunction& g, const PolyhedralCone& K, const SampleSet& s,
                                          const CheckOptions& opts)
{
    if (g.size() != K.dim()) throw DimensionMismatch("g and K dimensions differ");
    PropertyReport r;
    r.property = Property::ScalarlyQuasiconvex;
    r.mu_sample = multiplier_sample(K, opts);
    r.notes.push_back("certification is relative to the sample points and to the listed multipliers");
    if (r.mu_sample.empty()) r.notes.push_back("K* = {0}: the condition is vacuous");
    const auto ts = segment_params(opts.segment_grid);

    for (std::size_t i = 0; i < s.points.size(); ++i) {
        for (std::size_t j = i + 1; j < s.points.size(); ++j) {
            const auto& px = s.points[i];
            const auto& py = s.points[j];
            ++r.stats.examined;
            for (const auto& t : ts) {
                const QVector z = on_segment(px.x, py.x, t);
                QVector gz;
                try {
                    gz = g.eval(z);
                } catch (const DivisionByZero&) {
                    ++r.stats.skipped;
                    continue;
                }
                for (const auto& mu : r.mu_sample) {
                    const Rational bound = std::max(dot(mu, px.gx), dot(mu, py.gx));
                    if (dot(mu, gz) <= bound) continue;
                    return falsified(std::move(r), {Property::ScalarlyQuasiconvex, px.x, py.x, kSegmentCond, mu, t});
                }
            }
        }
    }
    return r;
}

PropertyReport check_strictly_scalarly_quasiconvex(const VectorFunction& g, const PolyhedralCone& K,
                                                   const SampleSet& s, const CheckOptions& opts)
{
    if (g.size() != K.dim()) throw DimensionMismatch("g and K dimensions differ");
    for (const auto& mu : opts.extra_mu)
        if (mu.size() != K.dim() || !in_dual_of(K, mu)) throw NotInDual("multiplier " + to_string(mu) + " is not in K*");

    PropertyReport r;
    r.property = Property::StrictlyScalarlyQuasiconvex;
    r.notes.push_back("multipliers: generators of M*(x) at each feasible x; strict negativity is preserved by "
                      "nonzero conic combinations, so the generators cover all of M*(x)");
    const auto ts = segment_params(opts.segment_grid);

    for (const auto& px : s.points) {
        if (!px.feasible) continue;
        std::vector<QVector> mus;
        for (const auto& w : K.dual_generators())
            if (dot(w, px.gx) == 0) mus.push_back(w);
        for (const auto& mu : opts.extra_mu)
            if (!is_zero(mu) && dot(mu, px.gx) == 0 && std::find(mus.begin(), mus.end(), mu) == mus.end())
                mus.push_back(mu);
        for (const auto& py : s.points) {
            if (&px == &py || !py.feasible) continue;
            ++r.stats.examined;
            if (mus.empty()) continue;
            ++r.stats.triggered;
            for (const auto& t : ts) {
                const QVector z = on_segment(px.x, py.x, t);
                QVector gz;
                try {
                    gz = g.eval(z);
                } catch (const DivisionByZero&) {
                    ++r.stats.skipped;
                    continue;
                }
                for (const auto& mu : mus) {
                    if (dot(mu, gz) < dot(mu, px.gx)) continue;
                    return falsified(std::move(r),
                                     {Property::StrictlyScalarlyQuasiconvex, px.x, py.x, kStrictSegmentCond, mu, t});
                }
            }
        }
    }
    return r;
}

PropertyReport check_qc_implication(const VectorProblem& p, const SampleSet& s)
{
    PropertyReport r;
    r.property = Property::QcImplication;
    for (const auto& px : s.points) {
        if (!px.feasible) continue;
        const ActiveFace face = active_face(p, px);
        for (const auto& py : s.points) {
            if (&px == &py || !py.feasible) continue;
            ++r.stats.examined;
            ++r.stats.triggered;
            QVector v = neg_directional(px.jg, px.x, py.x);
            if (contains(face.mstarstar, v)) continue;
            auto w = std::find_if(face.active_dual_generators.begin(), face.active_dual_generators.end(),
                                  [&](const QVector& a) { return dot(a, v) < 0; });
            if (w == face.active_dual_generators.end())
                throw std::logic_error("M**(x) membership disagrees with its H-representation");
            return falsified(std::move(r), {Property::QcImplication, px.x, py.x, kQcCond, *w, std::nullopt});
        }
    }
    return r;
}

PropertyReport check_fj_pseudoconvex(const VectorProblem& p, const SampleSet& s)
{
    PropertyReport r;
    r.property = Property::FjPseudoconvex;
    r.notes.push_back("C** is taken as C (closed convex cone)");
    for (const auto& px : s.points) {
        if (!px.feasible) continue;
        std::optional<ActiveFace> face;
        for (const auto& py : s.points) {
            if (&px == &py || !py.feasible) continue;
            ++r.stats.examined;
            if (!contains_interior(p.C, sub(px.fx, py.fx))) continue;
            ++r.stats.triggered;
            QVector vf = neg_directional(px.jf, px.x, py.x);
            if (!contains_interior(p.C, vf)) {
                auto d = first_nonpositive(p.C.dual_generators(), vf);
                return falsified(std::move(r), {Property::FjPseudoconvex, px.x, py.x, kFjFirstCond, *d, std::nullopt});
            }
            if (!face) face = active_face(p, px);
            QVector vg = neg_directional(px.jg, px.x, py.x);
            if (!contains_interior(face->mstarstar, vg)) {
                auto d = first_nonpositive(face->mstarstar.dual_generators(), vg);
                return falsified(std::move(r), {Property::FjPseudoconvex, px.x, py.x, kFjSecondCond, *d, std::nullopt});
            }
        }
    }
    return r;
}

std::optional<EtaWitness> eta_witness(const VectorProblem& p, std::span<const Rational> x)
{
    require_pointed_duals(p);
    const ActiveFace face = active_face(p, x);  // throws Infeasible
    QVector xv(x.begin(), x.end());
    return eta_at(p, xv, p.f.jacobian_at(x), p.g.jacobian_at(x), face.active_dual_generators);
}

PropertyReport check_fj_pseudoinvex(const VectorProblem& p, const SampleSet& s)
{
    require_pointed_duals(p);
    PropertyReport r;
    r.property = Property::FjPseudoinvex;
    r.notes.push_back("eta depends only on x; one witness is listed per triggered x");
    for (const auto& px : s.points) {
        if (!px.feasible) continue;
        bool have_eta = false;
        for (const auto& py : s.points) {
            if (&px == &py || !py.feasible) continue;
            ++r.stats.examined;
            if (!contains_interior(p.C, sub(px.fx, py.fx))) continue;
            ++r.stats.triggered;
            if (have_eta) continue;
            const ActiveFace face = active_face(p, px);
            auto w = eta_at(p, px.x, px.jf, px.jg, face.active_dual_generators);
            if (!w) {
                auto cert = fj_stationary(p, px);
                if (!cert) throw std::logic_error("no eta and no Fritz John multipliers at " + to_string(px.x));
                return falsified(std::move(r), {Property::FjPseudoinvex, px.x, py.x, kFjInvexCond,
                                                concat(cert->lambda, cert->mu), std::nullopt});
            }
            w->y = py.x;
            r.witnesses.push_back(std::move(*w));
            have_eta = true;
        }
    }
    return r;
}

PropertyReport check_property(Property prop, const VectorProblem& p, const SampleSet& s, const CheckOptions& opts)
{
    switch (prop) {
        case Property::Quasiconvex: return check_quasiconvex_vector(p.f, p.C, s);
        case Property::Pseudoconvex: return check_pseudoconvex_vector(p.f, p.C, s);
        case Property::ScalarlyQuasiconvex: return check_scalarly_quasiconvex(p.g, p.K, s, opts);
        case Property::StrictlyScalarlyQuasiconvex: return check_strictly_scalarly_quasiconvex(p.g, p.K, s, opts);
        case Property::QcImplication: return check_qc_implication(p, s);
        case Property::FjPseudoconvex: return check_fj_pseudoconvex(p, s);
        case Property::FjPseudoinvex: return check_fj_pseudoinvex(p, s);
    }
    throw Error("unknown property");
}

bool replay(const VectorProblem& p, const CounterexamplePair& cx)
{
    const QVector& x = cx.x;
    const QVector& y = cx.y;
    if (x.size() != p.arity() || y.size() != p.arity() || x == y) return false;

    auto premise = [&] { return contains_interior(p.C, sub(p.f.eval(x), p.f.eval(y))); };
    auto both_feasible = [&] { return feasible(p, x) && feasible(p, y); };
    auto valid_t = [&] { return cx.t && *cx.t > 0 && *cx.t < 1; };

    switch (cx.property) {
        case Property::Quasiconvex: {
            if (!premise()) return false;
            const QVector v = negate(matvec(p.f.jacobian_at(x), sub(y, x)));
            return !contains(p.C, v) && in_dual_of(p.C, cx.witness) && dot(cx.witness, v) < 0;
        }
        case Property::Pseudoconvex: {
            if (!premise()) return false;
            const QVector v = negate(matvec(p.f.jacobian_at(x), sub(y, x)));
            return !contains_interior(p.C, v) && in_dual_of(p.C, cx.witness) && !is_zero(cx.witness) &&
                   dot(cx.witness, v) <= 0;
        }
        case Property::ScalarlyQuasiconvex: {
            if (!valid_t() || cx.witness.size() != p.K.dim() || !in_dual_of(p.K, cx.witness)) return false;
            const QVector& mu = cx.witness;
            const Rational gz = dot(mu, p.g.eval(on_segment(x, y, *cx.t)));
            return gz > std::max(dot(mu, p.g.eval(x)), dot(mu, p.g.eval(y)));
        }
        case Property::StrictlyScalarlyQuasiconvex: {
            if (!valid_t() || !both_feasible()) return false;
            const QVector gx = p.g.eval(x);
            if (!is_active(p, cx.witness, gx)) return false;
            return dot(cx.witness, p.g.eval(on_segment(x, y, *cx.t))) >= dot(cx.witness, gx);
        }
        case Property::QcImplication: {
            if (!both_feasible()) return false;
            const QVector gx = p.g.eval(x);
            if (!is_active(p, cx.witness, gx)) return false;
            const QVector v = negate(matvec(p.g.jacobian_at(x), sub(y, x)));
            return dot(cx.witness, v) < 0 && !contains(active_face(p, x).mstarstar, v);
        }
        case Property::FjPseudoconvex: {
            if (!both_feasible() || !premise()) return false;
            if (cx.violated_condition == kFjFirstCond) {
                const QVector v = negate(matvec(p.f.jacobian_at(x), sub(y, x)));
                return in_dual_of(p.C, cx.witness) && !is_zero(cx.witness) && dot(cx.witness, v) <= 0 &&
                       !contains_interior(p.C, v);
            }
            if (cx.violated_condition == kFjSecondCond) {
                const QVector gx = p.g.eval(x);
                const QVector v = negate(matvec(p.g.jacobian_at(x), sub(y, x)));
                return is_active(p, cx.witness, gx) && dot(cx.witness, v) <= 0 &&
                       !contains_interior(active_face(p, x).mstarstar, v);
            }
            return false;
        }
        case Property::FjPseudoinvex: {
            if (!both_feasible() || !premise()) return false;
            if (cx.witness.size() != p.C.dim() + p.K.dim()) return false;
            if (!is_pointed(dual_cone(p.C)) || !is_pointed(dual_cone(p.K))) return false;
            const auto n = static_cast<std::ptrdiff_t>(p.C.dim());
            FJCertificate cert{QVector(cx.witness.begin(), cx.witness.begin() + n),
                               QVector(cx.witness.begin() + n, cx.witness.end())};
            return verify_fj_certificate(p, x, cert) && !eta_witness(p, x).has_value();
        }
    }
    return false;
}

bool verify_eta_witness(const VectorProblem& p, const EtaWitness& w)
{
    if (w.margin <= 0 || w.eta.size() != p.arity()) return false;
    for (const auto& e : w.eta)
        if (e < -1 || e > 1) return false;
    if (!feasible(p, w.x)) return false;
    // A witness from eta_witness(p, x) carries no y; the conditions on eta depend on x only.
    if (!w.y.empty()) {
        if (!feasible(p, w.y) || w.x == w.y) return false;
        if (!contains_interior(p.C, sub(p.f.eval(w.x), p.f.eval(w.y)))) return false;
    }

    const QVector jf_eta = matvec(p.f.jacobian_at(w.x), w.eta);
    const QVector jg_eta = matvec(p.g.jacobian_at(w.x), w.eta);
    const QVector gx = p.g.eval(w.x);
    for (const auto& u : p.C.dual_generators())
        if (dot(u, jf_eta) > -w.margin) return false;
    for (const auto& k : p.K.dual_generators())
        if (dot(k, gx) == 0 && dot(k, jg_eta) > -w.margin) return false;
    // The two conclusions of the definition, checked through the cone API.
    return contains_interior(p.C, negate(jf_eta)) && contains_interior(active_face(p, w.x).mstarstar, negate(jg_eta));
}

TheoremReport verify_theorem(Theorem theorem, const VectorProblem& p, const SampleSet& s, const CheckOptions& opts)
{
    TheoremReport rep;
    rep.theorem = theorem;
    switch (theorem) {
        case Theorem::CrouzeixFerland:
            rep.hypotheses.push_back(check_quasiconvex_vector(p.f, p.C, s));
            break;
        case Theorem::FjPseudoconvex:
            rep.hypotheses.push_back(check_quasiconvex_vector(p.f, p.C, s));
            rep.hypotheses.push_back(check_strictly_scalarly_quasiconvex(p.g, p.K, s, opts));
            break;
        case Theorem::FjPseudoinvex:
            require_pointed_duals(p);
            break;
    }
    for (const auto& h : rep.hypotheses) {
        if (!h.holds()) {
            rep.agreement = Agreement::NotApplicable;
            return rep;
        }
    }

    if (theorem == Theorem::CrouzeixFerland) {
        rep.side_a = check_pseudoconvex_vector(p.f, p.C, s);
        const auto weak = weak_minimizers_unconstrained(p.C, s);
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            auto lambda = is_vector_critical(p.C, s.points[i].jf);
            if (!lambda) continue;
            ++rep.critical_points;
            if (!weak[i].second && rep.side_b) {
                rep.side_b = false;
                rep.side_b_witness = s.points[i].x;
                rep.side_b_multiplier = std::move(*lambda);
            }
        }
    } else {
        rep.side_a = theorem == Theorem::FjPseudoconvex ? check_fj_pseudoconvex(p, s) : check_fj_pseudoinvex(p, s);
        const auto weak = weak_minimizers(p, s);
        std::size_t k = 0;
        for (const auto& sp : s.points) {
            if (!sp.feasible) continue;
            const bool is_weak = weak[k++].second;
            auto cert = fj_stationary(p, sp);
            if (!cert) continue;
            ++rep.critical_points;
            if (!is_weak && rep.side_b) {
                rep.side_b = false;
                rep.side_b_witness = sp.x;
                rep.side_b_multiplier = concat(cert->lambda, cert->mu);
            }
        }
    }
    rep.agreement = rep.side_a->holds() == rep.side_b ? Agreement::Agree : Agreement::Disagree;
    return rep;
}

}  // namespace conefj
