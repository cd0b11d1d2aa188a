#include "problems.hpp"

#include "conefj/errors.hpp"
#include "conefj/gencvx.hpp"
#include "conefj/report.hpp"

#include <doctest.h>

#include <string>

using namespace conefj;
using conefj::testing::make_problem;
using conefj::testing::make_unconstrained;
using conefj::testing::qv;

namespace {

const Property kAllProperties[] = {
    Property::Quasiconvex,   Property::Pseudoconvex,   Property::ScalarlyQuasiconvex,
    Property::StrictlyScalarlyQuasiconvex, Property::QcImplication, Property::FjPseudoconvex,
    Property::FjPseudoinvex,
};

std::vector<VectorProblem> corpus()
{
    std::vector<VectorProblem> out;
    out.push_back(make_problem(1, "x1", "-x1", {{"0", "2"}}, 9));
    out.push_back(make_problem(1, "x1^2", "-x1", {{"0", "2"}}, 9));
    out.push_back(make_problem(1, "x1^3", "-x1", {{"-2", "2"}}, 9));
    out.push_back(make_problem(1, "x1^3 - x1", "x1^2 - 4", {{"-2", "2"}}, 9));
    out.push_back(make_problem(1, "-x1^2", "x1^2 - 1", {{"-1", "1"}}, 9));
    out.push_back(make_problem(1, "x1", "-x1^2", {{"-2", "2"}}, 9));
    out.push_back(make_problem(1, "x1; -x1", "x1^2 - 1", {{"-1", "1"}}, 7));
    out.push_back(make_problem(1, "x1/(x1 + 3)", "x1 - 1", {{"-2", "2"}}, 9));
    out.push_back(make_problem(2, "x1^2 + x2^2; (x1 - 1)^2 + x2^2", "x1^2 + x2^2 - 4", {{"-1", "2"}, {"-1", "1"}}, 5));
    out.push_back(make_problem(2, "x1 + x2", "1 - x1*x2; -x1", {{"0", "2"}, {"0", "2"}}, 5));
    out.push_back(make_unconstrained(1, "x1^3", {{"-2", "2"}}, 9));
    out.push_back(make_unconstrained(1, "x1^2", {{"-2", "2"}}, 9));
    out.push_back(make_unconstrained(2, "x1^2 - x2^2", {{"-1", "1"}, {"-1", "1"}}, 5));
    return out;
}

void check_report_consistency(const VectorProblem& p, const PropertyReport& r)
{
    CHECK(r.holds() == !r.counterexample.has_value());
    if (r.counterexample) {
        CHECK(r.counterexample->property == r.property);
        CHECK(replay(p, *r.counterexample));
    }
    for (const EtaWitness& w : r.witnesses) {
        CHECK(w.margin > 0);
        CHECK(verify_eta_witness(p, w));
    }
}

}  // namespace

TEST_CASE("property and theorem names")
{
    for (Property p : kAllProperties)
        CHECK(parse_property(to_string(p)) == p);
    CHECK_THROWS_AS(parse_property("convex"), ParseError);
    for (Theorem t : {Theorem::CrouzeixFerland, Theorem::FjPseudoconvex, Theorem::FjPseudoinvex})
        CHECK(parse_theorem(to_string(t)) == t);
    CHECK(std::string(to_string(Agreement::NotApplicable)) == "NOT-APPLICABLE");
}

TEST_CASE("vector quasiconvexity")
{
    PolyhedralCone r1 = PolyhedralCone::orthant(1);
    VectorProblem lin = make_unconstrained(1, "x1", {{"-2", "2"}}, 41);
    CHECK(check_quasiconvex_vector(lin.f, r1, make_samples(lin)).holds());

    VectorProblem cube = make_unconstrained(1, "x1^3", {{"-2", "2"}}, 41);
    CHECK(check_quasiconvex_vector(cube.f, r1, make_samples(cube)).holds());

    VectorProblem bump = make_unconstrained(1, "x1^3 - x1", {{"-2", "2"}}, 41);
    PropertyReport r = check_quasiconvex_vector(bump.f, r1, make_samples(bump));
    REQUIRE(r.verdict == Verdict::Falsified);
    REQUIRE(r.counterexample.has_value());
    CHECK(replay(bump, *r.counterexample));
    // The first lexicographic violation: x = -2, whose better point lies past the local max.
    const CounterexamplePair& cx = *r.counterexample;
    CHECK(bump.f.eval(cx.y)[0] < bump.f.eval(cx.x)[0]);
    CHECK(dot(cx.witness, matvec(bump.f.jacobian_at(cx.x), sub(cx.y, cx.x))) > 0);
}

TEST_CASE("vector pseudoconvexity")
{
    PolyhedralCone r1 = PolyhedralCone::orthant(1);
    VectorProblem sq = make_unconstrained(1, "x1^2", {{"-2", "2"}}, 41);
    CHECK(check_pseudoconvex_vector(sq.f, r1, make_samples(sq)).holds());
    VectorProblem lin = make_unconstrained(1, "x1", {{"-2", "2"}}, 41);
    CHECK(check_pseudoconvex_vector(lin.f, r1, make_samples(lin)).holds());

    VectorProblem cube = make_unconstrained(1, "x1^3", {{"-2", "2"}}, 41);
    PropertyReport r = check_pseudoconvex_vector(cube.f, r1, make_samples(cube));
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->x == qv({"0"}));
    CHECK(r.counterexample->y[0] < 0);
    CHECK(replay(cube, *r.counterexample));
}

TEST_CASE("scalar quasiconvexity of constraints")
{
    PolyhedralCone r1 = PolyhedralCone::orthant(1);
    auto run = [&](const char* g, std::pair<const char*, const char*> box) {
        VectorProblem p = make_problem(1, "x1", g, {box}, 9);
        return std::make_pair(p, check_scalarly_quasiconvex(p.g, r1, make_samples(p)));
    };
    CHECK(run("-x1", {"-2", "2"}).second.holds());
    CHECK(run("x1^2 - 1", {"-2", "2"}).second.holds());

    auto [p, r] = run("-x1^2", {"-2", "2"});
    REQUIRE(r.counterexample.has_value());
    CHECK(replay(p, *r.counterexample));
    CHECK(r.counterexample->t.has_value());
    CHECK_FALSE(r.mu_sample.empty());

    CheckOptions bad;
    bad.extra_mu = {qv({"-1"})};
    CHECK_THROWS_AS(check_scalarly_quasiconvex(p.g, r1, make_samples(p), bad), NotInDual);
}

TEST_CASE("strict scalar quasiconvexity")
{
    PolyhedralCone r1 = PolyhedralCone::orthant(1);
    VectorProblem convex = make_problem(1, "x1", "x1^2 - 1", {{"-1", "1"}}, 9);
    CHECK(check_strictly_scalarly_quasiconvex(convex.g, r1, make_samples(convex)).holds());

    // Only feasible y enter the definition, and for g = -x1 every feasible
    // y > x = 0 gives -z < 0 along the segment.
    VectorProblem lin = make_problem(1, "x1", "-x1", {{"-2", "2"}}, 9);
    CHECK(check_strictly_scalarly_quasiconvex(lin.g, r1, make_samples(lin)).holds());

    VectorProblem zero = make_problem(1, "x1", "0", {{"-1", "1"}}, 5);
    PropertyReport r = check_strictly_scalarly_quasiconvex(zero.g, r1, make_samples(zero));
    REQUIRE(r.counterexample.has_value());
    CHECK(replay(zero, *r.counterexample));
}

TEST_CASE("the QC implication")
{
    VectorProblem lin = make_problem(1, "x1", "-x1", {{"0", "2"}}, 9);
    CHECK(check_qc_implication(lin, make_samples(lin)).holds());
    VectorProblem convex = make_problem(1, "x1", "x1^2 - 1", {{"-1", "1"}}, 9);
    CHECK(check_qc_implication(convex, make_samples(convex)).holds());

    VectorProblem bump = make_problem(1, "x1", "-x1^2", {{"-2", "2"}}, 9);
    PropertyReport r = check_qc_implication(bump, make_samples(bump));
    check_report_consistency(bump, r);
}

TEST_CASE("FJ-pseudoconvexity")
{
    VectorProblem lin = make_problem(1, "x1", "-x1", {{"0", "2"}}, 21);
    CHECK(check_fj_pseudoconvex(lin, make_samples(lin)).holds());

    // Feasible set x >= 0: nothing feasible improves on x = 0.
    VectorProblem cube = make_problem(1, "x1^3", "-x1", {{"-2", "2"}}, 21);
    CHECK(check_fj_pseudoconvex(cube, make_samples(cube)).holds());

    VectorProblem free_cube = make_unconstrained(1, "x1^3", {{"-2", "2"}}, 21);
    PropertyReport r = check_fj_pseudoconvex(free_cube, make_samples(free_cube));
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->x == qv({"0"}));
    CHECK(replay(free_cube, *r.counterexample));
}

TEST_CASE("eta witnesses")
{
    VectorProblem lin = make_problem(1, "x1", "-x1", {{"0", "2"}}, 21);
    auto w = eta_witness(lin, qv({"1"}));
    REQUIRE(w.has_value());
    CHECK(w->eta == qv({"-1"}));
    CHECK(w->margin > 0);
    CHECK(verify_eta_witness(lin, *w));
    CHECK_FALSE(eta_witness(lin, qv({"0"})).has_value());

    VectorProblem sq = make_problem(1, "x1^2", "-x1", {{"0", "2"}}, 9);
    CHECK_FALSE(eta_witness(sq, qv({"0"})).has_value());

    EtaWitness tampered = *w;
    tampered.eta = qv({"1"});
    CHECK_FALSE(verify_eta_witness(lin, tampered));
    tampered = *w;
    tampered.margin = 0;
    CHECK_FALSE(verify_eta_witness(lin, tampered));

    CHECK_THROWS_AS(eta_witness(lin, qv({"-1"})), Infeasible);

    VectorProblem nonpointed = make_problem(2, "x1", "0; -x1", {{"0", "1"}, {"0", "1"}}, 3, std::nullopt,
                                            PolyhedralCone(2, {qv({"0", "1"})}));
    CHECK_THROWS_AS(eta_witness(nonpointed, qv({"0", "0"})), NotPointed);
    CHECK_THROWS_AS(check_fj_pseudoinvex(nonpointed, make_samples(nonpointed)), NotPointed);
}

TEST_CASE("FJ-pseudoinvexity")
{
    VectorProblem lin = make_problem(1, "x1", "-x1", {{"0", "2"}}, 21);
    PropertyReport r = check_fj_pseudoinvex(lin, make_samples(lin));
    CHECK(r.holds());
    CHECK(r.witnesses.size() == 20);
    for (const EtaWitness& w : r.witnesses) {
        CHECK(w.eta == qv({"-1"}));
        CHECK(verify_eta_witness(lin, w));
    }

    VectorProblem cube = make_problem(1, "x1^3", "-x1", {{"-2", "2"}}, 21);
    check_report_consistency(cube, check_fj_pseudoinvex(cube, make_samples(cube)));
    CHECK(check_fj_pseudoinvex(cube, make_samples(cube)).holds());

    VectorProblem free_cube = make_unconstrained(1, "x1^3", {{"-2", "2"}}, 21);
    PropertyReport f = check_fj_pseudoinvex(free_cube, make_samples(free_cube));
    REQUIRE(f.counterexample.has_value());
    CHECK(f.counterexample->x == qv({"0"}));
    CHECK(replay(free_cube, *f.counterexample));
}

TEST_CASE("tampered counterexamples do not replay")
{
    VectorProblem cube = make_unconstrained(1, "x1^3", {{"-2", "2"}}, 21);
    PropertyReport r = check_pseudoconvex_vector(cube.f, cube.C, make_samples(cube));
    REQUIRE(r.counterexample.has_value());
    CounterexamplePair cx = *r.counterexample;
    cx.y = qv({"1"});  // not better than x = 0
    CHECK_FALSE(replay(cube, cx));
    cx = *r.counterexample;
    cx.x = qv({"1"});  // nonzero gradient: the implication holds
    CHECK_FALSE(replay(cube, cx));
}

TEST_CASE("every emitted certificate re-verifies on the corpus")
{
    for (const VectorProblem& p : corpus()) {
        SampleSet s = make_samples(p);
        for (Property prop : kAllProperties) {
            PropertyReport r = check_property(prop, p, s);
            CHECK(r.property == prop);
            check_report_consistency(p, r);
        }
    }
}

TEST_CASE("pseudoconvex implies quasiconvex")
{
    for (const VectorProblem& p : corpus()) {
        SampleSet s = make_samples(p);
        if (check_pseudoconvex_vector(p.f, p.C, s).holds())
            CHECK(check_quasiconvex_vector(p.f, p.C, s).holds());
    }
}

TEST_CASE("scalar quasiconvexity of g implies the QC implication")
{
    for (const VectorProblem& p : corpus()) {
        SampleSet s = make_samples(p);
        if (check_scalarly_quasiconvex(p.g, p.K, s).holds())
            CHECK(check_qc_implication(p, s).holds());
    }
}

TEST_CASE("FJ-pseudoconvex problems have only weakly efficient FJ points")
{
    int applied = 0;
    for (const VectorProblem& p : corpus()) {
        SampleSet s = make_samples(p);
        if (!check_fj_pseudoconvex(p, s).holds())
            continue;
        ++applied;
        for (const auto& [x, weak] : weak_minimizers(p, s))
            if (fj_stationary(p, x))
                CHECK(weak);
    }
    CHECK(applied >= 3);
}

TEST_CASE("FJ-pseudoinvexity: both directions on the corpus")
{
    for (const VectorProblem& p : corpus()) {
        if (!is_pointed(dual_cone(p.C)) || !is_pointed(dual_cone(p.K)))
            continue;
        SampleSet s = make_samples(p);
        PropertyReport r = check_fj_pseudoinvex(p, s);
        if (r.holds()) {
            for (const auto& [x, weak] : weak_minimizers(p, s))
                if (fj_stationary(p, x))
                    CHECK(weak);
        }
        // Non-FJ points that some feasible point beats admit eta with t > 0.
        auto flags = weak_minimizers(p, s);
        for (const auto& [x, weak] : flags) {
            if (weak || fj_stationary(p, x))
                continue;
            auto w = eta_witness(p, x);
            REQUIRE(w.has_value());
            CHECK(w->margin > 0);
            CHECK(verify_eta_witness(p, *w));
        }
    }
}

TEST_CASE("theorem harnesses")
{
    VectorProblem cube = make_unconstrained(1, "x1^3", {{"-2", "2"}}, 41);
    TheoremReport cf = verify_theorem(Theorem::CrouzeixFerland, cube, make_samples(cube));
    CHECK(cf.agreement == Agreement::Agree);
    REQUIRE(cf.side_a.has_value());
    CHECK_FALSE(cf.side_a->holds());
    CHECK_FALSE(cf.side_b);
    REQUIRE(cf.side_b_witness.has_value());
    CHECK(*cf.side_b_witness == qv({"0"}));

    VectorProblem sq = make_unconstrained(1, "x1^2", {{"-2", "2"}}, 41);
    TheoremReport cs = verify_theorem(Theorem::CrouzeixFerland, sq, make_samples(sq));
    CHECK(cs.agreement == Agreement::Agree);
    CHECK(cs.side_a->holds());
    CHECK(cs.side_b);

    VectorProblem bump = make_unconstrained(1, "x1^3 - x1", {{"-2", "2"}}, 41);
    CHECK(verify_theorem(Theorem::CrouzeixFerland, bump, make_samples(bump)).agreement == Agreement::NotApplicable);

    VectorProblem lin = make_problem(1, "x1", "-x1", {{"0", "2"}}, 21);
    for (Theorem t : {Theorem::FjPseudoconvex, Theorem::FjPseudoinvex}) {
        TheoremReport r = verify_theorem(t, lin, make_samples(lin));
        CHECK(r.agreement == Agreement::Agree);
        CHECK(r.side_b);
        CHECK(r.critical_points == 1);
    }
    TheoremReport pc = verify_theorem(Theorem::FjPseudoconvex, lin, make_samples(lin));
    CHECK(pc.hypotheses.size() == 2);

    for (const VectorProblem& p : corpus()) {
        SampleSet s = make_samples(p);
        for (Theorem t : {Theorem::CrouzeixFerland, Theorem::FjPseudoconvex, Theorem::FjPseudoinvex}) {
            if (t == Theorem::FjPseudoinvex && (!is_pointed(dual_cone(p.C)) || !is_pointed(dual_cone(p.K))))
                continue;
            CHECK(verify_theorem(t, p, s).agreement != Agreement::Disagree);
        }
    }
}

TEST_CASE("reports are deterministic for fixed options")
{
    VectorProblem p = make_problem(2, "x1^2 + x2^2; (x1 - 1)^2 + x2^2", "x1^2 + x2^2 - 4", {{"-1", "2"}, {"-1", "1"}}, 5);
    CheckOptions opts;
    opts.seed = 99;
    opts.mu_samples = 5;
    for (Property prop : kAllProperties) {
        std::string a = to_json(check_property(prop, p, make_samples(p), opts)).dump();
        std::string b = to_json(check_property(prop, p, make_samples(p), opts)).dump();
        CHECK(a == b);
    }
}
