#include "genarcs/plane.hpp"

#include <stdexcept>
#include <utility>

namespace genarcs {

Triple cross(const Field& f, const Triple& a, const Triple& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

FieldElement det3(const Field& f, const Triple& a, const Triple& b, const Triple& c) {
  const Triple bc = cross(f, b, c);
  return f.add(f.add(f.mul(a[0], bc[0]), f.mul(a[1], bc[1])), f.mul(a[2], bc[2]));
}

namespace {

FieldElement dot(const Field& f, const Triple& a, const Triple& b) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

Triple triple_at(std::uint32_t index, std::uint32_t q) {
  const std::uint32_t qq = q * q;
  if (index < qq) return {Field::one(), FieldElement{index / q}, FieldElement{index % q}};
  if (index < qq + q) return {Field::zero(), Field::one(), FieldElement{index - qq}};
  return {Field::zero(), Field::zero(), Field::one()};
}

}  // namespace

Plane::Plane(Field field) : field_(std::move(field)) {
  const std::uint32_t q = field_.q();
  if (q > kMaxPlaneOrder)
    throw std::invalid_argument("plane order " + std::to_string(q) + " exceeds " +
                                std::to_string(kMaxPlaneOrder));
  size_ = q * q + q + 1;
  points_.resize(size_);
  lines_.resize(size_);
  veronese_.resize(size_);
  for (std::uint32_t i = 0; i < size_; ++i) {
    points_[i] = {triple_at(i, q), i};
    lines_[i] = {triple_at(i, q), i};
    const Triple& x = points_[i].coords;
    veronese_[i] = {field_.mul(x[0], x[0]), field_.mul(x[0], x[1]), field_.mul(x[0], x[2]),
                    field_.mul(x[1], x[1]), field_.mul(x[1], x[2]), field_.mul(x[2], x[2])};
  }

  // Points on a line u: choose two independent solutions a, b of u.x = 0 and
  // walk a + t b, then b.
  points_on_line_.resize(std::size_t{size_} * (q + 1));
  std::vector<std::uint32_t> fill(size_, 0);
  lines_through_point_.resize(std::size_t{size_} * (q + 1));
  for (LineId l = 0; l < size_; ++l) {
    const Triple& u = lines_[l].coeffs;
    Triple a, b;
    // u is canonical: u = (1, u1, u2), (0, 1, u2) or (0, 0, 1).
    if (!u[0].is_zero()) {
      a = {field_.neg(u[1]), Field::one(), Field::zero()};
      b = {field_.neg(u[2]), Field::zero(), Field::one()};
    } else if (!u[1].is_zero()) {
      a = {Field::one(), Field::zero(), Field::zero()};
      b = {Field::zero(), field_.neg(u[2]), Field::one()};
    } else {
      a = {Field::one(), Field::zero(), Field::zero()};
      b = {Field::zero(), Field::one(), Field::zero()};
    }
    std::size_t k = std::size_t{l} * (q + 1);
    for (std::uint32_t t = 0; t < q; ++t) {
      const FieldElement s{t};
      const Triple pt = {field_.add(a[0], field_.mul(s, b[0])), field_.add(a[1], field_.mul(s, b[1])),
                         field_.add(a[2], field_.mul(s, b[2]))};
      points_on_line_[k++] = point_index(pt);
    }
    points_on_line_[k++] = point_index(b);
  }
  for (LineId l = 0; l < size_; ++l)
    for (PointId p : points_on(l)) lines_through_point_[std::size_t{p} * (q + 1) + fill[p]++] = l;

  if (q <= 32) {
    join_.assign(std::size_t{size_} * size_, 0);
    for (LineId l = 0; l < size_; ++l) {
      const auto pts = points_on(l);
      for (PointId a : pts)
        for (PointId b : pts) join_[std::size_t{a} * size_ + b] = static_cast<std::uint16_t>(l);
    }
  }
}

Triple Plane::canonical(Triple t) const {
  for (auto x : t) {
    if (x.is_zero()) continue;
    const FieldElement s = field_.inv(x);
    for (auto& y : t) y = field_.mul(s, y);
    return t;
  }
  throw std::invalid_argument("zero triple is not a projective point");
}

std::uint32_t Plane::index_of_canonical(const Triple& t) const {
  const std::uint32_t q = field_.q();
  if (!t[0].is_zero()) return t[1].value() * q + t[2].value();
  if (!t[1].is_zero()) return q * q + t[2].value();
  return q * q + q;
}

PointId Plane::point_index(const Triple& coords) const { return index_of_canonical(canonical(coords)); }
LineId Plane::line_index(const Triple& coeffs) const { return index_of_canonical(canonical(coeffs)); }

bool Plane::incident(PointId p, LineId l) const {
  return dot(field_, points_[p].coords, lines_[l].coeffs).is_zero();
}

LineId Plane::join_slow(PointId a, PointId b) const {
  if (a == b) throw std::invalid_argument("line_through needs two distinct points");
  return line_index(cross(field_, points_[a].coords, points_[b].coords));
}

PointId Plane::meet(LineId l1, LineId l2) const {
  if (l1 == l2) throw std::invalid_argument("meet needs two distinct lines");
  return point_index(cross(field_, lines_[l1].coeffs, lines_[l2].coeffs));
}

bool Plane::collinear(PointId a, PointId b, PointId c) const {
  return det3(field_, points_[a].coords, points_[b].coords, points_[c].coords).is_zero();
}

std::string Plane::format_point(PointId p) const {
  const Triple& x = points_[p].coords;
  return "[" + field_.format(x[0]) + ":" + field_.format(x[1]) + ":" + field_.format(x[2]) + "]";
}

PointId Plane::parse_point(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.starts_with("[") && text.ends_with("]")) text = text.substr(1, text.size() - 2);
  Triple t;
  std::size_t i = 0;
  while (true) {
    if (i == 3) throw std::invalid_argument("point needs exactly three coordinates");
    const auto sep = text.find_first_of(":,");
    t[i++] = field_.parse(text.substr(0, sep));
    if (sep == std::string_view::npos) break;
    text.remove_prefix(sep + 1);
  }
  if (i != 3) throw std::invalid_argument("point needs exactly three coordinates");
  return point_index(t);
}

std::vector<ProjPoint> all_points(const Plane& plane) {
  std::vector<ProjPoint> out;
  out.reserve(plane.size());
  for (PointId i = 0; i < plane.size(); ++i) out.push_back(plane.point(i));
  return out;
}

std::vector<ProjLine> all_lines(const Plane& plane) {
  std::vector<ProjLine> out;
  out.reserve(plane.size());
  for (LineId i = 0; i < plane.size(); ++i) out.push_back(plane.line(i));
  return out;
}

}  // namespace genarcs
