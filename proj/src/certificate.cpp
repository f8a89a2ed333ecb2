#include "genarcs/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genarcs {

using nlohmann::json;

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::Valid: return "valid";
    case Claim::Complete: return "complete";
    case Claim::MinimalComplete: return "minimal-complete";
    case Claim::Maximal: return "maximal";
  }
  return "?";
}

Claim parse_claim(std::string_view text) {
  if (text == "valid") return Claim::Valid;
  if (text == "complete") return Claim::Complete;
  if (text == "minimal-complete") return Claim::MinimalComplete;
  if (text == "maximal") return Claim::Maximal;
  throw std::invalid_argument("unknown claim '" + std::string(text) + "'");
}

ArcCertificate make_certificate(const Plane& plane, std::span<const PointId> set, ArcKind kind, Claim claim) {
  ArcCertificate cert;
  cert.field = plane.field().spec();
  cert.kind = kind;
  cert.claim = claim;
  PointSet sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (PointId p : sorted) cert.points.push_back(plane.point(p).coords);
  cert.k = sorted.size();
  try {
    cert.three_secant_count = count_three_secants(plane, sorted);
  } catch (const std::domain_error&) {
  }
  return cert;
}

json to_json(const ArcCertificate& cert) {
  const Plane plane(make_field(cert.field));
  json j;
  j["field"] = {{"p", cert.field.p}, {"r", cert.field.r}, {"modulus", cert.field.modulus}, {"alpha", cert.field.alpha}};
  j["kind"] = to_string(cert.kind);
  j["points"] = json::array();
  for (const auto& t : cert.points) j["points"].push_back(plane.format_point(plane.point_index(t)));
  j["claim"] = to_string(cert.claim);
  json stats = json::object();
  if (cert.k) stats["k"] = *cert.k;
  if (cert.three_secant_count) stats["three_secant_count"] = *cert.three_secant_count;
  if (!stats.empty()) j["stats"] = stats;
  if (!cert.search_meta.empty()) j["search_meta"] = cert.search_meta;
  return j;
}

ArcCertificate certificate_from_json(const json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
    ArcCertificate cert;
    const json& f = j.at("field");
    cert.field.p = f.at("p").get<std::uint32_t>();
    cert.field.r = f.at("r").get<std::uint32_t>();
    cert.field.modulus = f.at("modulus").get<std::vector<std::uint32_t>>();
    cert.field.alpha = f.at("alpha").get<std::uint32_t>();
    const Field field = make_field(cert.field);
    cert.field = field.spec();
    const Plane plane(field);
    cert.kind = parse_arc_kind(j.at("kind").get<std::string>());
    for (const auto& p : j.at("points")) cert.points.push_back(plane.point(plane.parse_point(p.get<std::string>())).coords);
    cert.claim = parse_claim(j.at("claim").get<std::string>());
    if (j.contains("stats")) {
      const json& s = j.at("stats");
      if (s.contains("k")) cert.k = s.at("k").get<std::size_t>();
      if (s.contains("three_secant_count")) cert.three_secant_count = s.at("three_secant_count").get<std::size_t>();
    }
    if (j.contains("search_meta")) cert.search_meta = j.at("search_meta");
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<ArcCertificate> read_certificates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
  std::vector<ArcCertificate> out;
  if (j.is_object() && j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) out.push_back(certificate_from_json(c));
  } else {
    out.push_back(certificate_from_json(j));
  }
  return out;
}

void write_bundle(const std::string& path, const std::vector<ArcCertificate>& certs, const json& summary) {
  json j;
  j["certificates"] = json::array();
  for (const auto& c : certs) j["certificates"].push_back(to_json(c));
  j["summary"] = summary;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

VerificationReport verify_certificate(const ArcCertificate& cert) {
  const Plane plane(make_field(cert.field));
  VerificationReport report;

  PointSet set;
  for (const auto& t : cert.points) {
    const PointId id = plane.point_index(t);
    if (plane.point(id).coords != t) report.problems.push_back("non-canonical point " + plane.format_point(id));
    set.push_back(id);
  }
  report.k = set.size();
  if (std::set<PointId>(set.begin(), set.end()).size() != set.size()) {
    report.problems.push_back("repeated points");
    return report;
  }
  if (cert.k && *cert.k != set.size())
    report.problems.push_back("stated k=" + std::to_string(*cert.k) + " but " + std::to_string(set.size()) +
                              " points");

  report.kind_valid = is_valid(plane, set, cert.kind);
  if (!report.kind_valid) report.problems.push_back("not a valid " + to_string(cert.kind));

  if (report.kind_valid && cert.claim != Claim::Valid) {
    report.complete = is_complete(plane, set, cert.kind);
    if (!*report.complete) report.problems.push_back("claimed " + to_string(cert.claim) + " but not complete");
  }

  try {
    report.recomputed_three_secants = count_three_secants(plane, set);
  } catch (const std::domain_error& e) {
    if (cert.three_secant_count) report.problems.push_back(e.what());
  }
  if (cert.three_secant_count && report.recomputed_three_secants &&
      *cert.three_secant_count != *report.recomputed_three_secants)
    report.problems.push_back("stated T=" + std::to_string(*cert.three_secant_count) +
                              " but recomputed T=" + std::to_string(*report.recomputed_three_secants));

  if (cert.claim == Claim::Maximal || cert.claim == Claim::MinimalComplete) {
    report.note = "extremality attested by search log";
    if (cert.search_meta.contains("exhaustive") && !cert.search_meta.at("exhaustive").get<bool>())
      report.note += " (search was not exhaustive)";
  }
  report.passed = report.problems.empty();
  return report;
}

}  // namespace genarcs
