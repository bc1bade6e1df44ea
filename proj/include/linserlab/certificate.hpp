#pragma once

// JSON form of emptiness certificates and a verifier that re-derives every
// claim from the certificate alone.

#include <optional>
#include <string>

#include <json.hpp>

#include "linserlab/dumnicki.hpp"

namespace linserlab::certificate {

inline constexpr const char* kFormat = "linserlab/emptiness-certificate/1";

nlohmann::json to_json(const dumnicki::EmptinessCertificate& c);

/// Strict parse: unknown or missing keys, wrong types and malformed values
/// throw std::invalid_argument.
dumnicki::EmptinessCertificate from_json(const nlohmann::json& j);

struct VerifyResult {
  bool valid = false;
  std::optional<std::size_t> failing_piece;
  std::string reason;
};

/// Accepts only the canonical certificate for its (domain, mults, cuts):
/// tight primitive cuts, the recomputed partition, and the preferred evidence
/// for every piece, each recomputed from scratch.
VerifyResult verify(const dumnicki::EmptinessCertificate& c);
VerifyResult verify(const nlohmann::json& j);

/// Changes one scalar leaf of `j` (integer shift or character change) and
/// returns its JSON pointer.
std::string mutate_leaf(nlohmann::json& j, Rng& rng);

}  // namespace linserlab::certificate
