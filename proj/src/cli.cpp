#include "conefj/cli.hpp"

#include "conefj/cone.hpp"
#include "conefj/errors.hpp"
#include "conefj/gencvx.hpp"
#include "conefj/problem.hpp"
#include "conefj/problem_file.hpp"
#include "conefj/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#ifndef CONEFJ_VERSION
#define CONEFJ_VERSION "0.0.0"
#endif

namespace conefj {

using nlohmann::ordered_json;

namespace {

/// Bad command line (missing flag, unknown name, out-of-range option).
class UsageError : public Error
{
  public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

template <class Fn>
auto parse_name(Fn&& fn, const std::string& name)
{
    try {
        return fn(name);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

struct Options
{
    std::string cone_op;
    std::vector<std::string> files;
    std::string point;
    std::string property;
    std::string theorem;
    std::optional<std::size_t> grid;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> mu_samples;
    std::optional<unsigned> segment_grid;
};

ordered_json envelope(const std::string& command, const std::vector<std::string>& args, const std::string& digest)
{
    ordered_json j;
    j["tool"] = "conefj";
    j["version"] = CONEFJ_VERSION;
    j["command"] = command;
    j["args"] = args;
    j["input_digest"] = digest;
    return j;
}

std::string digest_of(const std::vector<std::string>& files)
{
    std::string bytes;
    for (const auto& f : files) {
        bytes += read_text_file(f);
        bytes.push_back('\0');
    }
    return input_digest(bytes);
}

QVector require_point(const Options& o, std::size_t dim)
{
    if (o.point.empty()) throw UsageError("--point is required");
    QVector x = parse_vector(o.point);
    if (x.size() != dim)
        throw DimensionMismatch("--point has " + std::to_string(x.size()) + " entries, expected " + std::to_string(dim));
    return x;
}

int cmd_cone(const Options& o, ordered_json& rep)
{
    const std::string& op = o.cone_op;
    auto need_files = [&](std::size_t k) {
        if (o.files.size() != k)
            throw UsageError("cone " + op + " expects " + std::to_string(k) + " file argument(s)");
    };
    ordered_json res;
    if (op == "caratheodory") {
        need_files(1);
        const auto doc = read_json_file(o.files[0]);
        if (!doc.contains("points") || !doc.at("points").is_array()) throw ParseError("points file needs a 'points' array");
        std::vector<QVector> pts;
        for (const auto& p : doc.at("points")) pts.push_back(vector_from_json(p));
        if (pts.empty()) throw ParseError("points file has no points");
        const QVector target = require_point(o, pts.front().size());
        const auto dec = caratheodory(pts, target);
        ordered_json ps = ordered_json::array();
        for (const auto& p : dec.points) ps.push_back(vector_to_json(p));
        res["target"] = vector_to_json(target);
        res["points"] = std::move(ps);
        res["coefficients"] = vector_to_json(dec.coefficients);
    } else if (op == "product") {
        need_files(2);
        res["product"] = cone_to_json(product(load_cone(o.files[0]), load_cone(o.files[1])));
    } else {
        need_files(1);
        const PolyhedralCone c = load_cone(o.files[0]);
        if (op == "dual") {
            res = cone_to_json(dual_cone(c));
        } else if (op == "pointed") {
            res["pointed"] = is_pointed(c);
        } else if (op == "member") {
            const QVector x = require_point(o, c.dim());
            res["point"] = vector_to_json(x);
            res["member"] = contains(c, x);
        } else if (op == "interior") {
            const QVector x = require_point(o, c.dim());
            res["point"] = vector_to_json(x);
            res["interior"] = contains_interior(c, x);
        } else if (op == "separate") {
            const QVector x = require_point(o, c.dim());
            const QVector lambda = separate_from_cone(c, x);
            res["point"] = vector_to_json(x);
            res["lambda"] = vector_to_json(lambda);
            res["lambda_dot_point"] = to_string(dot(lambda, x));
        } else {
            throw UsageError("unknown cone operation '" + op + "'");
        }
    }
    rep["result"] = std::move(res);
    return kExitOk;
}

ProblemFile load_with_overrides(const Options& o)
{
    if (o.files.size() != 1) throw UsageError("expected exactly one problem file");
    ProblemFile pf = load_problem_file(o.files[0]);
    if (o.grid) {
        if (*o.grid < 2) throw UsageError("--grid must be at least 2");
        pf.problem.grid = *o.grid;
    }
    if (o.seed) pf.options.seed = *o.seed;
    if (o.mu_samples) pf.options.mu_samples = *o.mu_samples;
    if (o.segment_grid) {
        if (*o.segment_grid < 2) throw UsageError("--segment-grid must be at least 2");
        pf.options.segment_grid = *o.segment_grid;
    }
    return pf;
}

ordered_json sample_stats(const SampleSet& s)
{
    return ordered_json{{"samples", s.points.size()}, {"dropped_at_poles", s.dropped}, {"feasible", s.feasible_count()}};
}

int cmd_analyze(const Options& o, ordered_json& rep)
{
    const ProblemFile pf = load_with_overrides(o);
    const VectorProblem& p = pf.problem;
    const SampleSet s = make_samples(p);
    const auto weak = weak_minimizers(p, s);

    ordered_json points = ordered_json::array();
    std::size_t fj_weak = 0, fj_only = 0, weak_only = 0, neither = 0;
    std::size_t k = 0;
    for (const auto& sp : s.points) {
        ordered_json pj;
        pj["x"] = vector_to_json(sp.x);
        pj["feasible"] = sp.feasible;
        auto lambda = is_vector_critical(p.C, sp.jf);
        pj["vector_critical"] = lambda ? vector_to_json(*lambda) : ordered_json(nullptr);
        if (sp.feasible) {
            auto cert = fj_stationary(p, sp);
            const bool is_weak = weak[k++].second;
            pj["fj_certificate"] = cert ? to_json(*cert) : ordered_json(nullptr);
            pj["weak_minimizer"] = is_weak;
            if (cert && is_weak) ++fj_weak;
            else if (cert) ++fj_only;
            else if (is_weak) ++weak_only;
            else ++neither;
        } else {
            pj["fj_certificate"] = nullptr;
            pj["weak_minimizer"] = nullptr;
        }
        points.push_back(std::move(pj));
    }
    ordered_json res;
    res["sample_stats"] = sample_stats(s);
    res["points"] = std::move(points);
    res["summary"] = {{"fj_and_weak_min", fj_weak},
                      {"fj_not_weak_min", fj_only},
                      {"weak_min_not_fj", weak_only},
                      {"neither", neither}};
    res["note"] = "weak minimality is relative to the feasible sample points";
    rep["result"] = std::move(res);
    return kExitOk;
}

int cmd_check(const Options& o, ordered_json& rep)
{
    const Property prop = parse_name(parse_property, o.property);
    const ProblemFile pf = load_with_overrides(o);
    const SampleSet s = make_samples(pf.problem);
    const PropertyReport r = check_property(prop, pf.problem, s, pf.options);
    ordered_json res = to_json(r);
    res["sample_stats_grid"] = sample_stats(s);
    rep["result"] = std::move(res);
    return r.holds() ? kExitOk : kExitFalsified;
}

int cmd_verify(const Options& o, ordered_json& rep)
{
    const Theorem thm = parse_name(parse_theorem, o.theorem);
    const ProblemFile pf = load_with_overrides(o);
    const SampleSet s = make_samples(pf.problem);
    const TheoremReport r = verify_theorem(thm, pf.problem, s, pf.options);
    ordered_json res = to_json(r);
    res["sample_stats_grid"] = sample_stats(s);
    rep["result"] = std::move(res);
    return r.agreement == Agreement::Disagree ? kExitDisagree : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact polar cones, Fritz John stationarity and generalized convexity checks"};
    app.require_subcommand(1);
    Options o;

    auto* cone = app.add_subcommand("cone", "cone algebra");
    cone->add_option("op", o.cone_op, "dual|member|interior|pointed|separate|product|caratheodory")->required();
    cone->add_option("files", o.files, "cone JSON file(s)")->required();
    cone->add_option("--point", o.point, "comma-separated rationals");

    auto add_problem_opts = [&](CLI::App* sub) {
        sub->add_option("file", o.files, "problem JSON file")->required()->expected(1);
        sub->add_option("--grid", o.grid, "points per axis (overrides the file)");
        sub->add_option("--seed", o.seed, "seed for multiplier sampling");
        sub->add_option("--mu-samples", o.mu_samples, "random conic combinations of K* generators");
        sub->add_option("--segment-grid", o.segment_grid, "segment grid T: t in {1/T..(T-1)/T}");
    };
    auto* analyze = app.add_subcommand("analyze", "per-point feasibility, FJ stationarity and weak minimality");
    add_problem_opts(analyze);
    auto* check = app.add_subcommand("check", "check one generalized-convexity property on the sample");
    add_problem_opts(check);
    check->add_option("--property", o.property, "property name")->required();
    auto* verify = app.add_subcommand("verify", "evaluate both sides of a characterization theorem");
    add_problem_opts(verify);
    verify->add_option("--theorem", o.theorem, "crouzeix-ferland|fj-pc|fj-pi")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string command;
    if (*cone) command = "cone";
    else if (*analyze) command = "analyze";
    else if (*check) command = "check";
    else command = "verify";

    try {
        ordered_json rep = envelope(command, args, digest_of(o.files));
        int code = kExitOk;
        if (command == "cone") code = cmd_cone(o, rep);
        else if (command == "analyze") code = cmd_analyze(o, rep);
        else if (command == "check") code = cmd_check(o, rep);
        else code = cmd_verify(o, rep);
        out << rep.dump(2) << "\n";
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace conefj
