#include "genarcs/arcs.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "genarcs/conics.hpp"
#include "genarcs/linalg.hpp"

namespace genarcs {

std::string to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::Arc: return "arc";
    case ArcKind::Veronesian: return "veronesian";
    case ArcKind::Generalized: return "generalized";
  }
  return "?";
}

ArcKind parse_arc_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "arc") return ArcKind::Arc;
  if (lower == "veronesian") return ArcKind::Veronesian;
  if (lower == "generalized") return ArcKind::Generalized;
  throw std::invalid_argument("unknown arc kind '" + std::string(text) + "'");
}

namespace {

void require_distinct(std::span<const PointId> set) {
  PointSet sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("point set has repeated points");
}

// Calls fn(indices) for every k-subset of {0..n-1}, in lexicographic order,
// stopping early when fn returns false. Returns false iff stopped early.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::as_const(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool six_on_conic(const Plane& plane, std::span<const PointId, 6> six) {
  FqMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = plane.veronese(six[i])[j];
  return rank(plane.field(), m) < 6;
}

}  // namespace

bool is_arc(const Plane& plane, std::span<const PointId> set) {
  require_distinct(set);
  for (auto c : line_counts(plane, set))
    if (c >= 3) return false;
  return true;
}

bool is_generalized_arc(const Plane& plane, std::span<const PointId> set) {
  require_distinct(set);
  const std::size_t n = set.size();
  if (n < 6) return true;

  // Four collinear points plus any two others lie on a line pair, and so do
  // the points of two disjoint 3-secants.
  const auto counts = line_counts(plane, set);
  std::vector<LineId> secants3;
  for (LineId l = 0; l < counts.size(); ++l) {
    if (counts[l] >= 4) return false;
    if (counts[l] == 3) secants3.push_back(l);
  }
  for (std::size_t i = 0; i < secants3.size(); ++i)
    for (std::size_t j = i + 1; j < secants3.size(); ++j) {
      const PointId x = plane.meet(secants3[i], secants3[j]);
      if (std::find(set.begin(), set.end(), x) == set.end()) return false;
    }

  const Field& f = plane.field();
  return for_each_subset(n, 5, [&](const std::vector<std::size_t>& idx) {
    FqMatrix m(5, 6);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = plane.veronese(set[idx[i]])[j];
    auto basis = nullspace(f, m);
    // A pencil of dimension >= 2 has a member through any further point.
    if (basis.size() >= 2) return false;
    Conic c;
    std::copy(basis[0].begin(), basis[0].end(), c.coeffs.begin());
    for (std::size_t j = idx[4] + 1; j < n; ++j)
      if (evaluate(plane, c, set[j]).is_zero()) return false;
    return true;
  });
}

bool is_veronesian_arc(const Plane& plane, std::span<const PointId> set) {
  return is_arc(plane, set) && is_generalized_arc(plane, set);
}

bool is_valid(const Plane& plane, std::span<const PointId> set, ArcKind kind) {
  switch (kind) {
    case ArcKind::Arc: return is_arc(plane, set);
    case ArcKind::Veronesian: return is_veronesian_arc(plane, set);
    case ArcKind::Generalized: return is_generalized_arc(plane, set);
  }
  return false;
}

bool extends(const Plane& plane, std::span<const PointId> set, PointId p, ArcKind kind) {
  const std::size_t n = set.size();
  if (kind != ArcKind::Generalized) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (plane.collinear(set[i], set[j], p)) return false;
  }
  if (kind != ArcKind::Arc && n >= 5) {
    return for_each_subset(n, 5, [&](const std::vector<std::size_t>& idx) {
      const std::array<PointId, 6> six{set[idx[0]], set[idx[1]], set[idx[2]], set[idx[3]], set[idx[4]], p};
      return !six_on_conic(plane, six);
    });
  }
  return true;
}

bool is_complete(const Plane& plane, std::span<const PointId> set, ArcKind kind) {
  if (!is_valid(plane, set, kind))
    throw std::invalid_argument("completeness asked for a set that is not a valid " + to_string(kind));
  std::vector<bool> member(plane.size(), false);
  for (PointId p : set) member[p] = true;
  for (PointId p = 0; p < plane.size(); ++p)
    if (!member[p] && extends(plane, set, p, kind)) return false;
  return true;
}

std::vector<bool> coverage(const Plane& plane, std::span<const PointId> set, ArcKind kind) {
  std::vector<bool> covered(plane.size(), false);
  for (PointId p : set) covered[p] = true;
  const std::size_t n = set.size();
  if (kind != ArcKind::Generalized) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (PointId x : plane.points_on(plane.line_through(set[i], set[j]))) covered[x] = true;
  }
  if (kind != ArcKind::Arc) {
    for_each_subset(n, 5, [&](const std::vector<std::size_t>& idx) {
      const std::array<PointId, 5> five{set[idx[0]], set[idx[1]], set[idx[2]], set[idx[3]], set[idx[4]]};
      const ConicPencil pencil = conics_through(plane, five);
      // A point lies on some member of the pencil iff the basis values there
      // admit a nontrivial vanishing combination.
      for (PointId x = 0; x < plane.size(); ++x) {
        if (pencil.dimension() >= 2) {
          covered[x] = true;
        } else if (pencil.dimension() == 1 && evaluate(plane, pencil.basis[0], x).is_zero()) {
          covered[x] = true;
        }
      }
      return true;
    });
  }
  return covered;
}

bool is_complete_by_coverage(const Plane& plane, std::span<const PointId> set, ArcKind kind) {
  if (!is_valid(plane, set, kind))
    throw std::invalid_argument("completeness asked for a set that is not a valid " + to_string(kind));
  const auto covered = coverage(plane, set, kind);
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<std::uint32_t> line_counts(const Plane& plane, std::span<const PointId> set) {
  std::vector<std::uint32_t> counts(plane.size(), 0);
  for (PointId p : set)
    for (LineId l : plane.lines_through(p)) ++counts[l];
  return counts;
}

std::size_t count_three_secants(const Plane& plane, std::span<const PointId> set) {
  require_distinct(set);
  std::size_t t = 0;
  for (auto c : line_counts(plane, set)) {
    if (c >= 4 && set.size() >= 6)
      throw std::domain_error("a line holds " + std::to_string(c) + " points; not a generalized arc");
    if (c == 3) ++t;
  }
  return t;
}

std::optional<SecantSplit> strip_three_secant(const Plane& plane, std::span<const PointId> set) {
  require_distinct(set);
  const auto counts = line_counts(plane, set);
  for (LineId l = 0; l < counts.size(); ++l) {
    if (counts[l] != 3) continue;
    SecantSplit split;
    split.line = l;
    for (PointId p : set) (plane.incident(p, l) ? split.collinear : split.arc_part).push_back(p);
    return split;
  }
  return std::nullopt;
}

}  // namespace genarcs
