#include "conefj/report.hpp"

#include "conefj/problem_file.hpp"

#include <cstdint>
#include <cstdio>

namespace conefj {

using nlohmann::ordered_json;

ordered_json to_json(const FJCertificate& cert)
{
    ordered_json j;
    j["lambda"] = vector_to_json(cert.lambda);
    j["mu"] = vector_to_json(cert.mu);
    return j;
}

ordered_json to_json(const CounterexamplePair& cx)
{
    ordered_json j;
    j["x"] = vector_to_json(cx.x);
    j["y"] = vector_to_json(cx.y);
    j["violated_condition"] = cx.violated_condition;
    j["witness"] = vector_to_json(cx.witness);
    j["t"] = cx.t ? ordered_json(to_string(*cx.t)) : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const EtaWitness& w)
{
    ordered_json j;
    j["x"] = vector_to_json(w.x);
    j["y"] = vector_to_json(w.y);
    j["eta"] = vector_to_json(w.eta);
    j["margin"] = to_string(w.margin);
    return j;
}

ordered_json to_json(const PropertyReport& r)
{
    ordered_json j;
    j["property"] = to_string(r.property);
    j["verdict"] = to_string(r.verdict);
    j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : ordered_json(nullptr);
    ordered_json ws = ordered_json::array();
    for (const auto& w : r.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    ordered_json mus = ordered_json::array();
    for (const auto& mu : r.mu_sample) mus.push_back(vector_to_json(mu));
    j["mu_sample"] = std::move(mus);
    j["sample_stats"] = {{"pairs_examined", r.stats.examined},
                         {"pairs_triggered", r.stats.triggered},
                         {"segment_points_skipped", r.stats.skipped}};
    j["notes"] = r.notes;
    return j;
}

ordered_json to_json(const TheoremReport& r)
{
    ordered_json j;
    j["theorem"] = to_string(r.theorem);
    j["verdict"] = to_string(r.agreement);
    ordered_json hyps = ordered_json::array();
    for (const auto& h : r.hypotheses) hyps.push_back(to_json(h));
    j["hypotheses"] = std::move(hyps);
    j["side_a"] = r.side_a ? ordered_json{{"holds", r.side_a->holds()}, {"report", to_json(*r.side_a)}}
                           : ordered_json(nullptr);
    if (r.agreement == Agreement::NotApplicable) {
        j["side_b"] = nullptr;
    } else {
        ordered_json b;
        b["holds"] = r.side_b;
        b["critical_points"] = r.critical_points;
        b["failing_point"] = r.side_b_witness ? vector_to_json(*r.side_b_witness) : ordered_json(nullptr);
        b["multiplier"] = r.side_b_multiplier ? vector_to_json(*r.side_b_multiplier) : ordered_json(nullptr);
        j["side_b"] = std::move(b);
    }
    j["note"] = "both sides are evaluated on the sample set only; weak minimality is sample-relative";
    return j;
}

std::string input_digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace conefj
