#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <random>

#include "genarcs/conics.hpp"

using namespace genarcs;

namespace {

Sextuple sextuple_from_index(std::uint32_t q, std::uint64_t code) {
  Sextuple s;
  for (auto& c : s) {
    c = FieldElement{static_cast<std::uint32_t>(code % q)};
    code /= q;
  }
  return s;
}

bool is_nonzero(const Sextuple& s) {
  return std::any_of(s.begin(), s.end(), [](FieldElement e) { return !e.is_zero(); });
}

}  // namespace

TEST_CASE("conic census over GF(3)") {
  // Every nonzero form: zero set sizes and class counts among the (3^6-1)/2
  // projective conics.
  const std::uint32_t q = 3;
  const Plane plane(make_field_of_order(q));
  std::map<ConicClass, int> counts;
  std::uint64_t total = 1;
  for (int i = 0; i < 6; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    const Sextuple s = sextuple_from_index(q, code);
    const Conic c = make_conic(plane.field(), s);
    if (c.coeffs != s) continue;  // count canonical forms only
    const ClassifiedConic cls = classify(plane, c);
    ++counts[cls.kind];
    switch (cls.kind) {
      case ConicClass::Irreducible:
      case ConicClass::DoubleLine:
        CHECK(cls.points.size() == q + 1);
        break;
      case ConicClass::TwoLines:
        CHECK(cls.points.size() == 2 * q + 1);
        break;
      case ConicClass::ConjugatePair:
        CHECK(cls.points.size() == 1);
        break;
    }
  }
  const int n = q * q + q + 1;
  // |PGL(3,3)| / |PGL(2,3)| irreducible conics, C(n,2) line pairs, n double
  // lines, and n * (q^2 - q)/2 conjugate pairs.
  CHECK(counts[ConicClass::Irreducible] == 5616 / 24);
  CHECK(counts[ConicClass::TwoLines] == n * (n - 1) / 2);
  CHECK(counts[ConicClass::DoubleLine] == n);
  CHECK(counts[ConicClass::ConjugatePair] == n * (q * q - q) / 2);
  CHECK(counts[ConicClass::Irreducible] + counts[ConicClass::TwoLines] +
            counts[ConicClass::DoubleLine] + counts[ConicClass::ConjugatePair] ==
        (729 - 1) / 2);
}

TEST_CASE("sampled conics over GF(5)") {
  const Plane plane(make_field_of_order(5));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> code(1, 15624);
  for (int i = 0; i < 400; ++i) {
    const Conic c = make_conic(plane.field(), sextuple_from_index(5, code(rng)));
    const ClassifiedConic cls = classify(plane, c);
    for (PointId p = 0; p < plane.size(); ++p) {
      const bool on = std::binary_search(cls.points.begin(), cls.points.end(), p);
      REQUIRE(on == evaluate(plane, c, p).is_zero());
    }
    const std::size_t sz = cls.points.size();
    CHECK((sz == 1 || sz == 6 || sz == 11));
  }
}

TEST_CASE("five points in general position lie on a unique conic") {
  const Plane plane(make_field_of_order(7));
  const std::vector<PointId> frame = {0, 8, 49, 56};
  for (PointId p = 0; p < plane.size(); ++p) {
    bool general = std::find(frame.begin(), frame.end(), p) == frame.end();
    for (std::size_t i = 0; general && i < 4; ++i)
      for (std::size_t j = i + 1; general && j < 4; ++j)
        if (plane.collinear(frame[i], frame[j], p)) general = false;
    if (!general) continue;
    std::vector<PointId> five = frame;
    five.push_back(p);
    const ConicPencil pencil = conics_through(plane, five);
    REQUIRE(pencil.dimension() == 1);
    CHECK(classify(plane, pencil.basis[0]).kind == ConicClass::Irreducible);
    for (PointId x : five) CHECK(evaluate(plane, pencil.basis[0], x).is_zero());
  }
  const std::vector<PointId> four(frame);
  CHECK(conics_through(plane, four).dimension() == 2);
  CHECK_THROWS_AS(conics_through(plane, std::vector<PointId>{}), std::invalid_argument);
}

TEST_CASE("nucleus in even characteristic") {
  for (std::uint32_t q : {2u, 4u, 8u}) {
    const Plane plane(make_field_of_order(q));
    const Field& f = plane.field();
    // x0x2 = x1^2
    const Conic c = make_conic(f, {Field::zero(), Field::zero(), Field::one(), Field::one(),
                                   Field::zero(), Field::zero()});
    const PointId n = nucleus(plane, c);
    // Every line through the nucleus meets the conic in exactly one point.
    const auto pts = zero_set(plane, c);
    for (LineId l : plane.lines_through(n)) {
      int hits = 0;
      for (PointId p : pts) hits += plane.incident(p, l);
      CHECK(hits == 1);
    }
  }
  const Plane odd(make_field_of_order(5));
  const Conic c = make_conic(odd.field(), {Field::zero(), Field::zero(), Field::one(), Field::one(),
                                           Field::zero(), Field::zero()});
  CHECK_THROWS_AS(nucleus(odd, c), std::domain_error);
}

TEST_CASE("hyperplane test in PG(5,q) against a brute-force rank") {
  const Plane plane(make_field_of_order(3));
  const Field& f = plane.field();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> code(1, 728);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<Sextuple, 6> pts;
    for (auto& s : pts) {
      do s = sextuple_from_index(3, code(rng)); while (!is_nonzero(s));
    }
    bool distinct = true;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        // projectively distinct: not a scalar multiple (scalars 1, 2)
        Sextuple neg;
        for (int k = 0; k < 6; ++k) neg[k] = f.neg(pts[i][k]);
        if (pts[i] == pts[j] || neg == pts[j]) distinct = false;
      }
    if (!distinct) continue;
    // A hyperplane holds all six iff some nonzero h kills them.
    bool in_hyperplane = false;
    for (std::uint64_t hc = 1; hc < 729 && !in_hyperplane; ++hc) {
      const Sextuple h = sextuple_from_index(3, hc);
      bool all = true;
      for (const auto& s : pts) {
        FieldElement acc = Field::zero();
        for (int k = 0; k < 6; ++k) acc = f.add(acc, f.mul(h[k], s[k]));
        if (!acc.is_zero()) {
          all = false;
          break;
        }
      }
      in_hyperplane = all;
    }
    REQUIRE(is_5arc_in_p5(f, pts) == !in_hyperplane);
  }
}
