#pragma once

#include "conefj/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conefj {

enum class Property {
    Quasiconvex,
    Pseudoconvex,
    ScalarlyQuasiconvex,
    StrictlyScalarlyQuasiconvex,
    QcImplication,
    FjPseudoconvex,
    FjPseudoinvex,
};

enum class Verdict { NoCounterexampleOnSample, Falsified };

const char* to_string(Property p);
const char* to_string(Verdict v);
/// Accepts the names printed by to_string(Property); throws ParseError.
Property parse_property(std::string_view name);

/**
 * A sample pair at which a definition's implication fails. `witness` is the
 * exact quantity exhibiting the failure:
 *   quasiconvex          lambda in C* with lambda . (-Jf(x)(y-x)) < 0
 *   pseudoconvex         dual generator d of C with d . (-Jf(x)(y-x)) <= 0
 *   scalarly qc          mu in K*, with `t` the segment parameter
 *   strictly scalarly qc mu in M*(x), with `t` the segment parameter
 *   qc-implication       w in M*(x) with w . (-Jg(x)(y-x)) < 0
 *   fj-pseudoconvex      dual generator of C (first condition) or of M**(x)
 *   fj-pseudoinvex       a Fritz John certificate (lambda, mu) at x, which
 *                        rules out every eta by the theorem of the alternative
 */
struct CounterexamplePair
{
    Property property = Property::Quasiconvex;
    QVector x;
    QVector y;
    std::string violated_condition;
    QVector witness;
    std::optional<Rational> t;
};

/// Direction eta with u.(Jf(x) eta) <= -margin for every generator u of C*
/// and w.(Jg(x) eta) <= -margin for every active generator w of M*(x).
/// `y` is the better point that triggered x; empty when built for x alone.
struct EtaWitness
{
    QVector x;
    QVector y;
    QVector eta;
    Rational margin;
};

struct SampleStats
{
    std::size_t examined = 0;
    std::size_t triggered = 0;
    std::size_t skipped = 0;  // segment points at a pole
};

struct PropertyReport
{
    Property property = Property::Quasiconvex;
    Verdict verdict = Verdict::NoCounterexampleOnSample;
    std::optional<CounterexamplePair> counterexample;
    std::vector<EtaWitness> witnesses;
    SampleStats stats;
    std::vector<QVector> mu_sample;
    std::vector<std::string> notes;

    bool holds() const noexcept { return verdict == Verdict::NoCounterexampleOnSample; }
};

struct CheckOptions
{
    unsigned segment_grid = 8;  // t in {1/T, ..., (T-1)/T}
    unsigned mu_samples = 8;    // random conic combinations of K* generators
    std::uint64_t seed = 1;
    std::vector<QVector> extra_mu;
};

PropertyReport check_quasiconvex_vector(const VectorFunction& f, const PolyhedralCone& C, const SampleSet& s);
PropertyReport check_pseudoconvex_vector(const VectorFunction& f, const PolyhedralCone& C, const SampleSet& s);

/// Throws NotInDual when an extra multiplier is outside K*.
PropertyReport check_scalarly_quasiconvex(const VectorFunction& g, const PolyhedralCone& K, const SampleSet& s,
                                          const CheckOptions& opts = {});
PropertyReport check_strictly_scalarly_quasiconvex(const VectorFunction& g, const PolyhedralCone& K,
                                                   const SampleSet& s, const CheckOptions& opts = {});

PropertyReport check_qc_implication(const VectorProblem& p, const SampleSet& s);
PropertyReport check_fj_pseudoconvex(const VectorProblem& p, const SampleSet& s);

/// Throws NotPointed unless C* and K* are pointed; Infeasible for infeasible x.
std::optional<EtaWitness> eta_witness(const VectorProblem& p, std::span<const Rational> x);
PropertyReport check_fj_pseudoinvex(const VectorProblem& p, const SampleSet& s);

/// Dispatch by name, using p's f/g/C/K as each checker requires.
PropertyReport check_property(Property prop, const VectorProblem& p, const SampleSet& s, const CheckOptions& opts = {});

/// Re-evaluates the definition at the pair; true iff the violation reproduces exactly.
bool replay(const VectorProblem& p, const CounterexamplePair& cx);

bool verify_eta_witness(const VectorProblem& p, const EtaWitness& w);

enum class Theorem { CrouzeixFerland, FjPseudoconvex, FjPseudoinvex };
enum class Agreement { Agree, Disagree, NotApplicable };

const char* to_string(Theorem t);
const char* to_string(Agreement a);
Theorem parse_theorem(std::string_view name);

/**
 * Both sides of a characterization evaluated on one sample set.
 * Side A is the property checker; side B asks whether every critical
 * (resp. Fritz John stationary) sample is a sample weak minimizer.
 */
struct TheoremReport
{
    Theorem theorem = Theorem::CrouzeixFerland;
    Agreement agreement = Agreement::Agree;
    std::vector<PropertyReport> hypotheses;
    std::optional<PropertyReport> side_a;
    bool side_b = true;
    std::optional<QVector> side_b_witness;    // critical point that is not a weak minimizer
    std::optional<QVector> side_b_multiplier; // lambda, or (lambda, mu) concatenated
    std::size_t critical_points = 0;
};

TheoremReport verify_theorem(Theorem theorem, const VectorProblem& p, const SampleSet& s,
                             const CheckOptions& opts = {});

}  // namespace conefj
