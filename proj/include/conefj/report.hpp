#pragma once

#include "conefj/gencvx.hpp"
#include "conefj/problem.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace conefj {

// JSON renderings used by the CLI reports. Key order is fixed and every
// rational is rendered canonically, so equal inputs give equal bytes.

nlohmann::ordered_json to_json(const FJCertificate& cert);
nlohmann::ordered_json to_json(const CounterexamplePair& cx);
nlohmann::ordered_json to_json(const EtaWitness& w);
nlohmann::ordered_json to_json(const PropertyReport& r);
nlohmann::ordered_json to_json(const TheoremReport& r);

/// FNV-1a 64-bit digest of the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

}  // namespace conefj
