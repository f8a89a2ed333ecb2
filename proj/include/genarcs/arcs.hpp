// Arc predicates on point sets of PG(2,q).
//
// kind          valid when
// Arc           no three points collinear
// Generalized   no six points on a conic, reducible conics included
// Veronesian    both of the above
//
// Point sets are spans of distinct point indices; functions throw
// std::invalid_argument on repeated points.

#ifndef GENARCS_ARCS_HPP
#define GENARCS_ARCS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genarcs/plane.hpp"

namespace genarcs {

enum class ArcKind { Arc, Veronesian, Generalized };

std::string to_string(ArcKind kind);
/// Accepts "arc", "veronesian", "generalized" (case-insensitive).
ArcKind parse_arc_kind(std::string_view text);

using PointSet = std::vector<PointId>;

bool is_arc(const Plane& plane, std::span<const PointId> set);
bool is_generalized_arc(const Plane& plane, std::span<const PointId> set);
bool is_veronesian_arc(const Plane& plane, std::span<const PointId> set);
bool is_valid(const Plane& plane, std::span<const PointId> set, ArcKind kind);

/// Whether set + {p} is still valid, assuming set itself is valid and p is not
/// in it. Only configurations through p are examined.
bool extends(const Plane& plane, std::span<const PointId> set, PointId p, ArcKind kind);

/// True iff no point outside the set extends it. Throws std::invalid_argument
/// when the set is not valid for `kind`.
bool is_complete(const Plane& plane, std::span<const PointId> set, ArcKind kind);

/// Points covered by the zero sets of every conic through five set points
/// (Generalized, Veronesian) and by every line through two set points (Arc,
/// Veronesian), plus the set itself.
std::vector<bool> coverage(const Plane& plane, std::span<const PointId> set, ArcKind kind);

/// Completeness as "the covered points fill the plane". Agrees with
/// is_complete. Throws std::invalid_argument when the set is not valid.
bool is_complete_by_coverage(const Plane& plane, std::span<const PointId> set, ArcKind kind);

/// Number of points of the set on each line, indexed by LineId.
std::vector<std::uint32_t> line_counts(const Plane& plane, std::span<const PointId> set);

/// Number of lines meeting the set in exactly three points. Throws
/// std::domain_error when a line holds four or more points of a set with at
/// least six points (impossible for a generalized arc).
std::size_t count_three_secants(const Plane& plane, std::span<const PointId> set);

struct SecantSplit {
  PointSet arc_part;   // points off the 3-secant
  PointSet collinear;  // the three points on it
  LineId line = 0;
};

/// Splits off the 3-secant with the smallest line index; nullopt when there is
/// none.
std::optional<SecantSplit> strip_three_secant(const Plane& plane, std::span<const PointId> set);

}  // namespace genarcs

#endif  // GENARCS_ARCS_HPP
