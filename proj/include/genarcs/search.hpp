// Exhaustive search for smallest complete and largest arcs of each kind.
//
// The search enumerates point sets in orderly fashion (points are added in
// strictly increasing index order, so every set is generated once) and keeps,
// for each node, the list of points that can still be added. With frame
// fixing, every candidate contains the standard frame [1:0:0], [0:1:0],
// [0:0:1], [1:1:1]; PGL(3,q) is sharply transitive on ordered frames, and
// every candidate of size >= 4 contains four points in general position.
//
// Generalized candidates are restricted to sets with at most three points on
// a line. For sets of six or more points this is implied by the definition;
// for smaller sets it excludes configurations such as four collinear points
// plus one more, which are complete in the raw sense but contain no frame.

#ifndef GENARCS_SEARCH_HPP
#define GENARCS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genarcs/certificate.hpp"

namespace genarcs {

enum class SearchMode { MinComplete, MaxSize };

std::string to_string(SearchMode mode);
/// Accepts "min-complete" / "min_complete" and "max" / "max-size".
SearchMode parse_search_mode(std::string_view text);

struct SearchConfig {
  std::uint32_t q = 0;
  ArcKind kind = ArcKind::Generalized;
  SearchMode mode = SearchMode::MaxSize;
  bool fix_frame = true;
  std::optional<std::size_t> k_floor;    // min mode: first size tried
  std::optional<std::size_t> k_ceiling;  // max mode: stop once reached
  bool permutation_reduction = false;    // quotient by the S4 acting on the frame
  unsigned worker_count = 1;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_seconds;
  std::size_t witness_cap = 10;
  std::uint32_t q_cap = 13;
};

struct SearchResult {
  std::optional<std::size_t> answer;
  std::vector<ArcCertificate> witnesses;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
  double wall_seconds = 0.0;
  nlohmann::json meta = nlohmann::json::object();
};

/// Smallest k admitting a complete arc of the configured kind, ascending from
/// the floor (k_floor, else the proven lower bound for the kind, never below
/// 4). Emits up to witness_cap minimal-complete certificates.
SearchResult search_min_complete(const Plane& plane, const SearchConfig& cfg);

/// Largest k admitting an arc of the configured kind. The search stops early
/// when an arc reaches the ceiling (k_ceiling, else the best known upper
/// bound for the kind).
SearchResult search_max(const Plane& plane, const SearchConfig& cfg);

/// Same questions without frame fixing or symmetry reduction; a soundness
/// oracle for the frame-fixed search. Minimum mode visits every candidate set
/// (including the empty set) that is not larger than the best complete set
/// found so far. Requires q <= 5.
SearchResult search_unrestricted(const Plane& plane, const SearchConfig& cfg);

/// Dispatches on cfg.fix_frame and cfg.mode.
SearchResult run_search(const Plane& plane, const SearchConfig& cfg);

/// Default ceiling for max mode and where it comes from.
struct Ceiling {
  std::size_t value;
  std::string source;
};
Ceiling default_ceiling(std::uint32_t q, ArcKind kind);

/// Default floor for min mode and where it comes from.
struct Floor {
  std::size_t value;
  std::string source;
};
Floor default_floor(std::uint32_t q, ArcKind kind);

/// Point index permutations of the 24 collineations permuting the frame.
std::vector<std::vector<PointId>> frame_collineations(const Plane& plane);

/// "q,kind,mode,answer,nodes,exhaustive,wall_time"
std::string csv_header();
std::string csv_row(const SearchConfig& cfg, const SearchResult& result);

}  // namespace genarcs

#endif  // GENARCS_SEARCH_HPP
