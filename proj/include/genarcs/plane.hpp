// Incidence geometry of the projective plane PG(2,q).
//
// Points and lines are canonical homogeneous triples whose first nonzero
// coordinate is 1. Both carry a dense index in [0, q^2+q+1) following the
// order: [1:x1:x2] by (x1, x2), then [0:1:x2] by x2, then [0:0:1]. With the
// canonical element encoding this gives index([1:a:b]) = a*q + b,
// index([0:1:b]) = q^2 + b and index([0:0:1]) = q^2 + q.

#ifndef GENARCS_PLANE_HPP
#define GENARCS_PLANE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genarcs/gf.hpp"

namespace genarcs {

using PointId = std::uint32_t;
using LineId = std::uint32_t;
using Triple = std::array<FieldElement, 3>;
using Sextuple = std::array<FieldElement, 6>;

struct ProjPoint {
  Triple coords;
  PointId index = 0;
};

/// Point P lies on the line iff coeffs[0]*x0 + coeffs[1]*x1 + coeffs[2]*x2 == 0.
struct ProjLine {
  Triple coeffs;
  LineId index = 0;
};

/// Largest q for which a Plane can be built.
inline constexpr std::uint32_t kMaxPlaneOrder = 128;

class Plane {
 public:
  /// Throws std::invalid_argument when q exceeds kMaxPlaneOrder.
  explicit Plane(Field field);

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }
  /// Number of points, which equals the number of lines.
  std::uint32_t size() const { return size_; }

  const ProjPoint& point(PointId id) const { return points_[id]; }
  const ProjLine& line(LineId id) const { return lines_[id]; }

  /// Index of the point with the given (not necessarily canonical)
  /// coordinates. Throws std::invalid_argument for the zero triple.
  PointId point_index(const Triple& coords) const;
  LineId line_index(const Triple& coeffs) const;

  std::span<const PointId> points_on(LineId l) const {
    return {points_on_line_.data() + std::size_t{l} * (q() + 1), q() + 1};
  }
  std::span<const LineId> lines_through(PointId p) const {
    return {lines_through_point_.data() + std::size_t{p} * (q() + 1), q() + 1};
  }

  bool incident(PointId p, LineId l) const;
  /// Throws std::invalid_argument when a == b.
  LineId line_through(PointId a, PointId b) const {
    if (!join_.empty() && a != b) return join_[std::size_t{a} * size_ + b];
    return join_slow(a, b);
  }
  /// Throws std::invalid_argument when l1 == l2.
  PointId meet(LineId l1, LineId l2) const;
  /// True iff the coordinate determinant vanishes (so also for repeated points).
  bool collinear(PointId a, PointId b, PointId c) const;

  /// [x0^2 : x0x1 : x0x2 : x1^2 : x1x2 : x2^2]; canonical because x is.
  const Sextuple& veronese(PointId p) const { return veronese_[p]; }

  /// "[x0:x1:x2]" with field literals.
  std::string format_point(PointId p) const;
  /// Parses "[a:b:c]" (brackets optional, any nonzero scaling).
  PointId parse_point(std::string_view text) const;

 private:
  Triple canonical(Triple t) const;
  std::uint32_t index_of_canonical(const Triple& t) const;
  LineId join_slow(PointId a, PointId b) const;

  Field field_;
  std::uint32_t size_ = 0;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
  std::vector<PointId> points_on_line_;
  std::vector<LineId> lines_through_point_;
  std::vector<std::uint16_t> join_;  // size_ x size_, only for q <= 32
  std::vector<Sextuple> veronese_;
};

std::vector<ProjPoint> all_points(const Plane& plane);
std::vector<ProjLine> all_lines(const Plane& plane);

/// Cross product of two triples.
Triple cross(const Field& field, const Triple& a, const Triple& b);
/// Determinant of the 3x3 matrix with rows a, b, c.
FieldElement det3(const Field& field, const Triple& a, const Triple& b, const Triple& c);

}  // namespace genarcs

#endif  // GENARCS_PLANE_HPP
