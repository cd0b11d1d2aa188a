#pragma once

#include "conefj/cone.hpp"
#include "conefj/gencvx.hpp"
#include "conefj/problem.hpp"

#include <json.hpp>

#include <string>

namespace conefj {

/**
 * Problem file (JSON, rationals as strings):
 *
 *   {
 *     "dims":    {"s": 1, "n": 1, "m": 1},
 *     "C":       {"dim": 1, "generators": [["1"]]},
 *     "K":       {"dim": 1, "generators": [["1"]]},
 *     "f":       ["x1"],
 *     "g":       ["-x1"],
 *     "domain":  {"box": [["0", "2"]], "grid": 21},
 *     "options": {"segment_grid": 8, "mu_samples": 8, "seed": 1, "extra_mu": [["1"]]}
 *   }
 *
 * "options" and each of its keys are optional.
 */
struct ProblemFile
{
    VectorProblem problem;
    CheckOptions options;
};

ProblemFile parse_problem_file(const nlohmann::json& doc);
ProblemFile load_problem_file(const std::string& path);

/// {"dim": n, "generators": [["p/q", ...], ...]}
PolyhedralCone parse_cone(const nlohmann::json& doc);
PolyhedralCone load_cone(const std::string& path);
nlohmann::ordered_json cone_to_json(const PolyhedralCone& c);

Rational rational_from_json(const nlohmann::json& v);
QVector vector_from_json(const nlohmann::json& v);
nlohmann::ordered_json vector_to_json(std::span<const Rational> v);

nlohmann::json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace conefj
