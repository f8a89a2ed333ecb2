// Witness certificates for arcs and their independent re-verification.
//
// JSON layout of one certificate:
//
//   {
//     "field":  {"p": 2, "r": 3, "modulus": [1, 1, 0, 1], "alpha": 2},
//     "kind":   "generalized",
//     "points": ["[1:0:0]", "[0:1:0]", ...],
//     "claim":  "valid" | "complete" | "minimal-complete" | "maximal",
//     "stats":  {"k": 9, "three_secant_count": 1},      (optional)
//     "search_meta": {...}                               (optional, free form)
//   }
//
// A bundle is {"certificates": [...], "summary": {...}}.

#ifndef GENARCS_CERTIFICATE_HPP
#define GENARCS_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genarcs/arcs.hpp"

namespace genarcs {

enum class Claim { Valid, Complete, MinimalComplete, Maximal };

std::string to_string(Claim claim);
Claim parse_claim(std::string_view text);

struct ArcCertificate {
  FieldSpec field;
  ArcKind kind = ArcKind::Generalized;
  std::vector<Triple> points;  // canonical coordinates
  Claim claim = Claim::Valid;
  std::optional<std::size_t> k;
  std::optional<std::size_t> three_secant_count;
  nlohmann::json search_meta = nlohmann::json::object();
};

/// Certificate for a point set of `plane`; fills k and the 3-secant count
/// (the latter only when it is well defined for the set).
ArcCertificate make_certificate(const Plane& plane, std::span<const PointId> set, ArcKind kind, Claim claim);

nlohmann::json to_json(const ArcCertificate& cert);
/// Throws std::invalid_argument on missing fields or bad encodings.
ArcCertificate certificate_from_json(const nlohmann::json& j);

/// Reads a single certificate or a bundle. Throws std::invalid_argument on
/// unreadable or malformed input.
std::vector<ArcCertificate> read_certificates(const std::string& path);
void write_bundle(const std::string& path, const std::vector<ArcCertificate>& certs,
                  const nlohmann::json& summary = nlohmann::json::object());

struct VerificationReport {
  bool passed = false;
  bool kind_valid = false;
  std::optional<bool> complete;
  std::optional<std::size_t> recomputed_three_secants;
  std::size_t k = 0;
  std::vector<std::string> problems;
  std::string note;  // e.g. how a maximality/minimality claim is backed
};

/// Rechecks everything from scratch; never trusts stored flags. Throws
/// std::invalid_argument when the field description is malformed.
VerificationReport verify_certificate(const ArcCertificate& cert);

}  // namespace genarcs

#endif  // GENARCS_CERTIFICATE_HPP
