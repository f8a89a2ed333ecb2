#include "genarcs/conics.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "genarcs/linalg.hpp"

namespace genarcs {

std::string to_string(ConicClass c) {
  switch (c) {
    case ConicClass::Irreducible: return "irreducible";
    case ConicClass::TwoLines: return "two-lines";
    case ConicClass::DoubleLine: return "double-line";
    case ConicClass::ConjugatePair: return "conjugate-pair";
  }
  return "?";
}

Conic make_conic(const Field& field, Sextuple coeffs) {
  for (auto x : coeffs) {
    if (x.is_zero()) continue;
    const FieldElement s = field.inv(x);
    for (auto& y : coeffs) y = field.mul(s, y);
    return Conic{coeffs};
  }
  throw std::invalid_argument("the zero form is not a conic");
}

FieldElement evaluate(const Plane& plane, const Conic& conic, PointId p) {
  const Field& f = plane.field();
  const Sextuple& v = plane.veronese(p);
  FieldElement sum = Field::zero();
  for (std::size_t i = 0; i < 6; ++i) sum = f.add(sum, f.mul(conic.coeffs[i], v[i]));
  return sum;
}

ConicPencil conics_through(const Plane& plane, std::span<const PointId> points) {
  if (points.empty() || points.size() > 6)
    throw std::invalid_argument("conics_through takes between 1 and 6 points");
  FqMatrix m(points.size(), 6);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = plane.veronese(points[i])[j];
  ConicPencil pencil;
  for (auto& v : nullspace(plane.field(), m)) {
    Sextuple c;
    std::copy(v.begin(), v.end(), c.begin());
    pencil.basis.push_back(Conic{c});
  }
  return pencil;
}

std::vector<PointId> zero_set(const Plane& plane, const Conic& conic) {
  std::vector<PointId> out;
  for (PointId p = 0; p < plane.size(); ++p)
    if (evaluate(plane, conic, p).is_zero()) out.push_back(p);
  return out;
}

namespace {

// Line containing every point of `pts`, if any (pts.size() >= 2).
std::optional<LineId> common_line(const Plane& plane, const std::vector<PointId>& pts) {
  const LineId l = plane.line_through(pts[0], pts[1]);
  for (PointId p : pts)
    if (!plane.incident(p, l)) return std::nullopt;
  return l;
}

}  // namespace

ClassifiedConic classify(const Plane& plane, const Conic& conic) {
  if (std::all_of(conic.coeffs.begin(), conic.coeffs.end(), [](FieldElement x) { return x.is_zero(); }))
    throw std::invalid_argument("the zero form is not a conic");
  const std::uint32_t q = plane.q();
  ClassifiedConic out;
  out.points = zero_set(plane, conic);
  const std::size_t n = out.points.size();
  if (n == 1) {
    out.kind = ConicClass::ConjugatePair;
  } else if (n == 2 * q + 1) {
    out.kind = ConicClass::TwoLines;
  } else if (n == q + 1) {
    out.kind = common_line(plane, out.points) ? ConicClass::DoubleLine : ConicClass::Irreducible;
  } else {
    throw std::logic_error("conic zero set of size " + std::to_string(n) + " matches no class");
  }
  return out;
}

PointId nucleus(const Plane& plane, const Conic& conic) {
  if (plane.q() % 2 != 0) throw std::domain_error("nucleus requires even q");
  const auto cls = classify(plane, conic);
  if (cls.kind != ConicClass::Irreducible) throw std::domain_error("nucleus requires an irreducible conic");

  std::vector<bool> on_conic(plane.size(), false);
  for (PointId p : cls.points) on_conic[p] = true;
  // Tangent at P: the line through P meeting the conic only in P.
  const auto tangent = [&](PointId p) {
    for (LineId l : plane.lines_through(p)) {
      const auto pts = plane.points_on(l);
      if (std::count_if(pts.begin(), pts.end(), [&](PointId x) { return on_conic[x]; }) == 1) return l;
    }
    throw std::logic_error("irreducible conic without tangent");
  };
  const PointId n = plane.meet(tangent(cls.points[0]), tangent(cls.points[1]));
  for (PointId p : cls.points)
    if (!plane.incident(n, tangent(p))) throw std::logic_error("tangents are not concurrent");
  return n;
}

Sextuple veronese(const Plane& plane, PointId p) { return plane.veronese(p); }

bool is_5arc_in_p5(const Field& field, std::span<const Sextuple> points6) {
  if (points6.size() != 6) throw std::invalid_argument("is_5arc_in_p5 takes six points");
  for (std::size_t i = 0; i < 6; ++i) {
    if (std::all_of(points6[i].begin(), points6[i].end(), [](FieldElement x) { return x.is_zero(); }))
      throw std::invalid_argument("zero vector is not a point of PG(5,q)");
    for (std::size_t j = 0; j < i; ++j) {
      FqMatrix pair(2, 6);
      for (std::size_t c = 0; c < 6; ++c) {
        pair(0, c) = points6[i][c];
        pair(1, c) = points6[j][c];
      }
      if (rank(field, pair) < 2) throw std::invalid_argument("repeated point of PG(5,q)");
    }
  }
  FqMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = points6[i][j];
  return rank(field, m) == 6;
}

std::string format_conic(const Field& field, const Conic& conic) {
  std::string out = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out += ",";
    out += field.format(conic.coeffs[i]);
  }
  return out + ")";
}

}  // namespace genarcs
