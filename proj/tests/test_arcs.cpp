#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <functional>
#include <random>

#include "genarcs/arcs.hpp"
#include "genarcs/conics.hpp"

using namespace genarcs;

namespace {

std::vector<PointId> random_set(std::mt19937& rng, std::uint32_t n, std::size_t size) {
  std::vector<PointId> all(n);
  for (PointId i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

// Six points on a conic exactly when their Veronese images lie in a
// hyperplane of PG(5,q).
bool generalized_by_hyperplanes(const Plane& plane, const std::vector<PointId>& set) {
  const std::size_t n = set.size();
  if (n < 6) return true;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - 6, pick.end(), 1);
  do {
    std::array<Sextuple, 6> images;
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) images[j++] = plane.veronese(set[i]);
    if (!is_5arc_in_p5(plane.field(), images)) return false;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return true;
}

bool arc_by_determinants(const Plane& plane, const std::vector<PointId>& set) {
  const Field& f = plane.field();
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      for (std::size_t k = j + 1; k < set.size(); ++k)
        if (det3(f, plane.point(set[i]).coords, plane.point(set[j]).coords,
                 plane.point(set[k]).coords)
                .is_zero())
          return false;
  return true;
}

// Random valid set grown by rejection, stopped at a random size or when
// nothing more fits.
std::vector<PointId> random_valid(std::mt19937& rng, const Plane& plane, ArcKind kind) {
  std::vector<PointId> order(plane.size());
  for (PointId i = 0; i < plane.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::size_t> stop(3, plane.q() + 6);
  const std::size_t target = stop(rng);
  std::vector<PointId> set;
  for (PointId p : order) {
    if (set.size() >= target) break;
    std::vector<PointId> trial = set;
    trial.push_back(p);
    if (is_valid(plane, trial, kind)) set = std::move(trial);
  }
  std::sort(set.begin(), set.end());
  return set;
}

bool complete_by_brute_force(const Plane& plane, const std::vector<PointId>& set, ArcKind kind) {
  for (PointId p = 0; p < plane.size(); ++p) {
    if (std::find(set.begin(), set.end(), p) != set.end()) continue;
    std::vector<PointId> trial = set;
    trial.push_back(p);
    if (is_valid(plane, trial, kind)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kind names") {
  CHECK(parse_arc_kind("Generalized") == ArcKind::Generalized);
  CHECK(parse_arc_kind("arc") == ArcKind::Arc);
  CHECK(to_string(ArcKind::Veronesian) == "veronesian");
  CHECK_THROWS_AS(parse_arc_kind("oval"), std::invalid_argument);
}

TEST_CASE("generalized arcs agree with the hyperplane test in PG(5,q)") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    CAPTURE(q);
    const Plane plane(make_field_of_order(q));
    std::mt19937 rng(1000 + q);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    int valid = 0, invalid = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto set = random_set(rng, plane.size(), size(rng));
      const bool expected = generalized_by_hyperplanes(plane, set);
      REQUIRE(is_generalized_arc(plane, set) == expected);
      REQUIRE(is_arc(plane, set) == arc_by_determinants(plane, set));
      REQUIRE(is_veronesian_arc(plane, set) == (expected && arc_by_determinants(plane, set)));
      (expected ? valid : invalid)++;
    }
    CHECK(valid > 0);
    CHECK(invalid > 0);
  }
}

TEST_CASE("completeness agrees with coverage") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const Plane plane(make_field_of_order(q));
    for (ArcKind kind : {ArcKind::Arc, ArcKind::Veronesian, ArcKind::Generalized}) {
      CAPTURE(q);
      CAPTURE(to_string(kind));
      std::mt19937 rng(2000 + q * 10 + static_cast<int>(kind));
      int complete = 0;
      for (int trial = 0; trial < 200; ++trial) {
        const auto set = random_valid(rng, plane, kind);
        const bool by_search = is_complete(plane, set, kind);
        REQUIRE(by_search == is_complete_by_coverage(plane, set, kind));
        REQUIRE(by_search == complete_by_brute_force(plane, set, kind));
        complete += by_search;
      }
      CHECK(complete > 0);
    }
  }
}

TEST_CASE("extends matches revalidation") {
  const Plane plane(make_field_of_order(4));
  std::mt19937 rng(7);
  for (ArcKind kind : {ArcKind::Arc, ArcKind::Veronesian, ArcKind::Generalized}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto set = random_valid(rng, plane, kind);
      for (PointId p = 0; p < plane.size(); ++p) {
        if (std::find(set.begin(), set.end(), p) != set.end()) continue;
        std::vector<PointId> trial_set = set;
        trial_set.push_back(p);
        REQUIRE(extends(plane, set, p, kind) == is_valid(plane, trial_set, kind));
      }
    }
  }
}

TEST_CASE("stripping a 3-secant leaves an arc") {
  // Every generalized arc of PG(2,q), q <= 4, enumerated in increasing index
  // order.
  for (std::uint32_t q : {2u, 3u, 4u}) {
    CAPTURE(q);
    const Plane plane(make_field_of_order(q));
    std::size_t arcs = 0, with_secant = 0;
    std::vector<PointId> set;
    std::function<void(PointId)> grow = [&](PointId from) {
      ++arcs;
      const auto counts = line_counts(plane, set);
      for (LineId l = 0; l < plane.size(); ++l) {
        if (counts[l] != 3) continue;
        ++with_secant;
        std::vector<PointId> rest;
        for (PointId p : set)
          if (!plane.incident(p, l)) rest.push_back(p);
        REQUIRE(is_arc(plane, rest));
      }
      if (const auto split = strip_three_secant(plane, set)) {
        CHECK(split->collinear.size() == 3);
        CHECK(split->arc_part.size() + 3 == set.size());
        CHECK(is_arc(plane, split->arc_part));
      }
      for (PointId p = from; p < plane.size(); ++p) {
        if (!extends(plane, set, p, ArcKind::Generalized)) continue;
        set.push_back(p);
        grow(p + 1);
        set.pop_back();
      }
    };
    grow(0);
    CHECK(with_secant > 0);
    // Every subset of PG(2,2) qualifies.
    if (q == 2) CHECK(arcs == 128);
  }
}

TEST_CASE("3-secant counts") {
  const Plane plane(make_field_of_order(4));
  // Frame plus [1:0:1]: 3-secants x1 = 0 and, in characteristic 2, x0 = x2.
  std::vector<PointId> set = {plane.parse_point("[1:0:0]"), plane.parse_point("[0:1:0]"),
                              plane.parse_point("[0:0:1]"), plane.parse_point("[1:1:1]"),
                              plane.parse_point("[1:0:1]")};
  std::sort(set.begin(), set.end());
  CHECK(count_three_secants(plane, set) == 2);
  const auto split = strip_three_secant(plane, set);
  REQUIRE(split.has_value());
  CHECK(split->arc_part.size() == 2);
  const std::vector<PointId> repeated = {0, 0, 5};
  CHECK_THROWS_AS(is_arc(plane, repeated), std::invalid_argument);
  const std::vector<PointId> invalid = {0, 1, 2, 3};  // collinear
  CHECK_THROWS_AS(is_complete(plane, invalid, ArcKind::Arc), std::invalid_argument);
}
