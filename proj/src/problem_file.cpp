#include "conefj/problem_file.hpp"

#include "conefj/errors.hpp"

#include <fstream>
#include <sstream>

namespace conefj {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::size_t positive_int(const json& v, const char* what)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<std::string> string_array(const json& v, const char* what)
{
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

Rational rational_from_json(const json& v)
{
    if (!v.is_string()) throw ParseError("rationals must be JSON strings, got " + v.dump());
    return parse_rational(v.get<std::string>());
}

QVector vector_from_json(const json& v)
{
    if (!v.is_array()) throw ParseError("expected an array of rational strings, got " + v.dump());
    QVector out;
    for (const auto& e : v) out.push_back(rational_from_json(e));
    return out;
}

ordered_json vector_to_json(std::span<const Rational> v)
{
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

PolyhedralCone parse_cone(const json& doc)
{
    const std::size_t dim = positive_int(field(doc, "dim"), "cone dim");
    if (dim == 0) throw ParseError("cone dim must be positive");
    const json& gens = field(doc, "generators");
    if (!gens.is_array()) throw ParseError("cone generators must be an array");
    std::vector<QVector> out;
    for (const auto& g : gens) {
        QVector v = vector_from_json(g);
        if (v.size() != dim)
            throw DimensionMismatch("cone generator has " + std::to_string(v.size()) + " entries, dim is " +
                                    std::to_string(dim));
        out.push_back(std::move(v));
    }
    return PolyhedralCone(dim, std::move(out));
}

ordered_json cone_to_json(const PolyhedralCone& c)
{
    ordered_json gens = ordered_json::array();
    for (const auto& g : c.generators()) gens.push_back(vector_to_json(g));
    ordered_json out;
    out["dim"] = c.dim();
    out["generators"] = std::move(gens);
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path)
{
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

PolyhedralCone load_cone(const std::string& path) { return parse_cone(read_json_file(path)); }

ProblemFile parse_problem_file(const json& doc)
{
    try {
        const json& dims = field(doc, "dims");
        const std::size_t s = positive_int(field(dims, "s"), "dims.s");
        const std::size_t n = positive_int(field(dims, "n"), "dims.n");
        const std::size_t m = positive_int(field(dims, "m"), "dims.m");
        if (s == 0 || n == 0 || m == 0) throw ParseError("dims must be positive");

        PolyhedralCone C = parse_cone(field(doc, "C"));
        PolyhedralCone K = parse_cone(field(doc, "K"));
        if (C.dim() != n) throw DimensionMismatch("C.dim does not match dims.n");
        if (K.dim() != m) throw DimensionMismatch("K.dim does not match dims.m");

        VectorFunction f = VectorFunction::parse(string_array(field(doc, "f"), "f"), s);
        VectorFunction g = VectorFunction::parse(string_array(field(doc, "g"), "g"), s);
        if (f.size() != n) throw DimensionMismatch("f must have dims.n components");
        if (g.size() != m) throw DimensionMismatch("g must have dims.m components");

        const json& domain = field(doc, "domain");
        const json& box_json = field(domain, "box");
        if (!box_json.is_array() || box_json.size() != s) throw ParseError("domain.box needs one [lo, hi] pair per variable");
        std::vector<Interval> box;
        for (const auto& iv : box_json) {
            if (!iv.is_array() || iv.size() != 2) throw ParseError("box entries must be [lo, hi] pairs");
            Interval b{rational_from_json(iv[0]), rational_from_json(iv[1])};
            if (!(b.lo < b.hi)) throw ParseError("box interval requires lo < hi");
            box.push_back(std::move(b));
        }
        const std::size_t grid = positive_int(field(domain, "grid"), "domain.grid");
        if (grid < 2) throw ParseError("domain.grid must be at least 2");

        CheckOptions opts;
        if (doc.contains("options")) {
            const json& o = doc.at("options");
            if (!o.is_object()) throw ParseError("options must be an object");
            if (o.contains("segment_grid")) {
                opts.segment_grid = static_cast<unsigned>(positive_int(o.at("segment_grid"), "segment_grid"));
                if (opts.segment_grid < 2) throw ParseError("segment_grid must be at least 2");
            }
            if (o.contains("mu_samples")) opts.mu_samples = static_cast<unsigned>(positive_int(o.at("mu_samples"), "mu_samples"));
            if (o.contains("seed")) opts.seed = positive_int(o.at("seed"), "seed");
            if (o.contains("extra_mu")) {
                for (const auto& mu : o.at("extra_mu")) {
                    QVector v = vector_from_json(mu);
                    if (v.size() != m) throw DimensionMismatch("extra_mu entries must have dims.m entries");
                    opts.extra_mu.push_back(std::move(v));
                }
            }
        }

        VectorProblem p{std::move(f), std::move(g), std::move(C), std::move(K), std::move(box), grid};
        p.validate();
        return ProblemFile{std::move(p), std::move(opts)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed problem file: ") + e.what());
    }
}

ProblemFile load_problem_file(const std::string& path) { return parse_problem_file(read_json_file(path)); }

}  // namespace conefj
