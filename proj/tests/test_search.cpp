#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <functional>

#include "genarcs/search.hpp"

using namespace genarcs;

namespace {

constexpr ArcKind kKinds[] = {ArcKind::Arc, ArcKind::Veronesian, ArcKind::Generalized};

// The generalized candidates of the search have at most three points on a
// line; for six or more points that is part of validity.
bool candidate(const Plane& plane, const std::vector<PointId>& set, ArcKind kind) {
  if (!is_valid(plane, set, kind)) return false;
  if (kind != ArcKind::Generalized) return true;
  const auto counts = line_counts(plane, set);
  return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c <= 3; });
}

std::vector<PointId> frame(const Plane& plane) {
  const std::uint32_t q = plane.q();
  return {0, q + 1, q * q, q * q + q};
}

// Plain backtracking over supersets of the frame, revalidating every set from
// scratch. Returns the largest candidate size, or the smallest size of a
// candidate with no candidate extension.
std::size_t naive(const Plane& plane, ArcKind kind, SearchMode mode) {
  const std::vector<PointId> base = frame(plane);
  std::vector<PointId> set = base;
  std::size_t best = mode == SearchMode::MaxSize ? 0 : SIZE_MAX;
  std::function<void(PointId)> grow = [&](PointId from) {
    bool extendable = false;
    for (PointId p = 0; p < plane.size() && !extendable; ++p) {
      if (std::find(set.begin(), set.end(), p) != set.end()) continue;
      std::vector<PointId> trial = set;
      trial.push_back(p);
      extendable = candidate(plane, trial, kind);
    }
    if (mode == SearchMode::MaxSize) best = std::max(best, set.size());
    if (mode == SearchMode::MinComplete) {
      if (!extendable) best = std::min(best, set.size());
      if (set.size() + 1 >= best) return;
    }
    for (PointId p = from; p < plane.size(); ++p) {
      if (std::find(base.begin(), base.end(), p) != base.end()) continue;
      set.push_back(p);
      if (candidate(plane, set, kind)) grow(p + 1);
      set.pop_back();
    }
  };
  grow(0);
  return best;
}

SearchConfig config(std::uint32_t q, ArcKind kind, SearchMode mode) {
  SearchConfig cfg;
  cfg.q = q;
  cfg.kind = kind;
  cfg.mode = mode;
  return cfg;
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(parse_search_mode("min-complete") == SearchMode::MinComplete);
  CHECK(parse_search_mode("min_complete") == SearchMode::MinComplete);
  CHECK(parse_search_mode("max") == SearchMode::MaxSize);
  CHECK(to_string(SearchMode::MaxSize) == "max");
  CHECK_THROWS_AS(parse_search_mode("median"), std::invalid_argument);
}

TEST_CASE("frame collineations") {
  const Plane plane(make_field_of_order(5));
  const auto maps = frame_collineations(plane);
  REQUIRE(maps.size() == 24);
  const auto f = frame(plane);
  for (const auto& m : maps) {
    std::vector<PointId> image;
    for (PointId p : f) image.push_back(m[p]);
    std::sort(image.begin(), image.end());
    CHECK(image == f);
    // Collineations preserve collinearity.
    for (PointId a = 0; a < plane.size(); a += 5)
      for (PointId b = a + 1; b < plane.size(); b += 3)
        for (PointId c = b + 1; c < plane.size(); c += 7)
          REQUIRE(plane.collinear(a, b, c) == plane.collinear(m[a], m[b], m[c]));
  }
}

TEST_CASE("frame-fixed search agrees with unrestricted search") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Plane plane(make_field_of_order(q));
    for (ArcKind kind : kKinds)
      for (SearchMode mode : {SearchMode::MinComplete, SearchMode::MaxSize}) {
        CAPTURE(q);
        CAPTURE(to_string(kind));
        CAPTURE(to_string(mode));
        SearchConfig cfg = config(q, kind, mode);
        const SearchResult fixed = run_search(plane, cfg);
        cfg.fix_frame = false;
        const SearchResult free = run_search(plane, cfg);
        REQUIRE(fixed.answer.has_value());
        CHECK(fixed.exhaustive);
        CHECK(free.exhaustive);
        CHECK(fixed.answer == free.answer);
      }
  }
}

TEST_CASE("unrestricted node counts") {
  const Plane p2(make_field_of_order(2));
  SearchConfig cfg = config(2, ArcKind::Generalized, SearchMode::MinComplete);
  cfg.fix_frame = false;
  // Lines of PG(2,2) hold three points, so all 2^7 subsets are candidates.
  CHECK(search_unrestricted(p2, cfg).nodes_explored == 128);
  cfg.kind = ArcKind::Arc;
  CHECK(search_unrestricted(p2, cfg).nodes_explored == 64);
  const Plane p5(make_field_of_order(5));
  cfg.q = 5;
  CHECK_NOTHROW(search_unrestricted(p5, cfg));
  const Plane p7(make_field_of_order(7));
  cfg.q = 7;
  CHECK_THROWS_AS(search_unrestricted(p7, cfg), std::invalid_argument);
}

TEST_CASE("search agrees with naive backtracking") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const Plane plane(make_field_of_order(q));
    for (ArcKind kind : kKinds)
      for (SearchMode mode : {SearchMode::MinComplete, SearchMode::MaxSize}) {
        CAPTURE(q);
        CAPTURE(to_string(kind));
        CAPTURE(to_string(mode));
        SearchConfig cfg = config(q, kind, mode);
        if (mode == SearchMode::MinComplete)
          cfg.k_floor = 4;
        else
          cfg.k_ceiling = plane.size();
        const SearchResult r = run_search(plane, cfg);
        REQUIRE(r.answer.has_value());
        CHECK(*r.answer == naive(plane, kind, mode));
      }
  }
}

TEST_CASE("largest generalized arcs at q = 7 by naive backtracking") {
  const Plane plane(make_field_of_order(7));
  SearchConfig cfg = config(7, ArcKind::Generalized, SearchMode::MaxSize);
  cfg.k_ceiling = plane.size();
  const SearchResult r = run_search(plane, cfg);
  CHECK(r.answer == std::optional<std::size_t>{8});
  CHECK(naive(plane, ArcKind::Generalized, SearchMode::MaxSize) == 8);
}

TEST_CASE("witnesses verify") {
  for (SearchMode mode : {SearchMode::MinComplete, SearchMode::MaxSize}) {
    const Plane plane(make_field_of_order(5));
    SearchConfig cfg = config(5, ArcKind::Generalized, mode);
    cfg.witness_cap = 3;
    const SearchResult r = run_search(plane, cfg);
    REQUIRE(r.answer.has_value());
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses.size() <= 3);
    for (const auto& w : r.witnesses) {
      const VerificationReport v = verify_certificate(w);
      CHECK(v.passed);
      CHECK(v.k == *r.answer);
    }
  }
}

TEST_CASE("symmetry reduction and workers do not change answers") {
  for (std::uint32_t q : {5u, 7u}) {
    const Plane plane(make_field_of_order(q));
    for (ArcKind kind : kKinds)
      for (SearchMode mode : {SearchMode::MinComplete, SearchMode::MaxSize}) {
        CAPTURE(q);
        CAPTURE(to_string(kind));
        CAPTURE(to_string(mode));
        SearchConfig cfg = config(q, kind, mode);
        cfg.k_ceiling = plane.size();
        const SearchResult base = run_search(plane, cfg);
        cfg.permutation_reduction = true;
        const SearchResult reduced = run_search(plane, cfg);
        CHECK(reduced.answer == base.answer);
        if (mode == SearchMode::MaxSize) CHECK(reduced.nodes_explored <= base.nodes_explored);
        cfg.permutation_reduction = false;
        cfg.worker_count = 4;
        const SearchResult parallel = run_search(plane, cfg);
        CHECK(parallel.answer == base.answer);
        REQUIRE(parallel.witnesses.size() == base.witnesses.size());
        for (std::size_t i = 0; i < base.witnesses.size(); ++i)
          CHECK(parallel.witnesses[i].points == base.witnesses[i].points);
      }
  }
}

TEST_CASE("budgets") {
  const Plane plane(make_field_of_order(7));
  SearchConfig cfg = config(7, ArcKind::Generalized, SearchMode::MaxSize);
  cfg.k_ceiling = plane.size();
  cfg.node_budget = 50;
  const SearchResult r = run_search(plane, cfg);
  CHECK_FALSE(r.exhaustive);
  cfg.node_budget.reset();
  cfg.q_cap = 5;
  CHECK_THROWS_AS(run_search(plane, cfg), std::invalid_argument);
}

TEST_CASE("default ceilings and floors") {
  CHECK(default_ceiling(8, ArcKind::Arc).value == 10);
  CHECK(default_ceiling(9, ArcKind::Veronesian).value == 10);
  CHECK(default_ceiling(7, ArcKind::Generalized).value == 8);
  CHECK(default_ceiling(2, ArcKind::Generalized).value == 7);
  CHECK(default_floor(11, ArcKind::Arc).value == 7);
  CHECK(default_floor(7, ArcKind::Veronesian).value == 5);
  CHECK(default_floor(3, ArcKind::Generalized).value == 4);
}

TEST_CASE("csv rows") {
  SearchConfig cfg = config(4, ArcKind::Generalized, SearchMode::MaxSize);
  SearchResult r;
  r.answer = 7;
  r.nodes_explored = 12;
  r.exhaustive = true;
  CHECK(csv_header() == "q,kind,mode,answer,nodes,exhaustive,wall_time");
  CHECK(csv_row(cfg, r).rfind("4,generalized,max,7,12,true,", 0) == 0);
}
