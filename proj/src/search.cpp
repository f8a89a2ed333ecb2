#include "genarcs/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "genarcs/bounds.hpp"
#include "genarcs/linalg.hpp"

namespace genarcs {

using nlohmann::json;

std::string to_string(SearchMode mode) { return mode == SearchMode::MinComplete ? "min-complete" : "max"; }

SearchMode parse_search_mode(std::string_view text) {
  if (text == "min-complete" || text == "min_complete") return SearchMode::MinComplete;
  if (text == "max" || text == "max-size" || text == "max_size") return SearchMode::MaxSize;
  throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

Ceiling default_ceiling(std::uint32_t q, ArcKind kind) {
  const std::size_t n = std::size_t{q} * q + q + 1;
  if (kind != ArcKind::Generalized) {
    if (q % 2 == 0) return {q + 2u, "hyperoval size q+2"};
    return {q + 1u, "oval size q+1"};
  }
  Ceiling c{n, "plane size"};
  if (auto m5 = reference_m5q(q); m5 && static_cast<std::size_t>(m5->value) < c.value)
    c = {static_cast<std::size_t>(m5->value), "m(5,q) = q+1 via the Veronese embedding"};
  if (auto u = upper_mg(q); u && static_cast<std::size_t>(u->value) < c.value)
    c = {static_cast<std::size_t>(u->value), "upper_mg: " + u->source};
  return c;
}

Floor default_floor(std::uint32_t q, ArcKind kind) {
  switch (kind) {
    case ArcKind::Arc: {
      const auto v = static_cast<std::size_t>(lower_t_prop(q));
      return {std::max<std::size_t>(v, 4), "lower_t_prop"};
    }
    case ArcKind::Veronesian:
      if (q >= 5) return {std::max<std::size_t>(static_cast<std::size_t>(lower_tv(q)), 4), "ceil(t0)"};
      break;
    case ArcKind::Generalized:
      if (q >= 5) return {std::max<std::size_t>(static_cast<std::size_t>(lower_tg(q).min), 4), "min(ceil(t1), ceil(t2))"};
      break;
  }
  return {4, "frame size"};
}

std::vector<std::vector<PointId>> frame_collineations(const Plane& plane) {
  const Field& f = plane.field();
  const std::uint32_t q = plane.q();
  const std::array<PointId, 4> frame{0, q * q, q * q + q, q + 1};  // e0, e1, e2, e0+e1+e2
  std::array<int, 4> sigma{0, 1, 2, 3};
  std::vector<std::vector<PointId>> out;
  do {
    std::array<Triple, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = plane.point(frame[sigma[i]]).coords;
    FqMatrix a(3, 4);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a(r, c) = v[c][r];
      a(r, 3) = v[3][r];
    }
    row_reduce(f, a);
    std::array<FieldElement, 3> lambda{a(0, 3), a(1, 3), a(2, 3)};
    std::vector<PointId> perm(plane.size());
    for (PointId x = 0; x < plane.size(); ++x) {
      const Triple& c = plane.point(x).coords;
      Triple img{};
      for (int j = 0; j < 3; ++j) {
        const FieldElement s = f.mul(c[j], lambda[j]);
        for (int r = 0; r < 3; ++r) img[r] = f.add(img[r], f.mul(s, v[j][r]));
      }
      perm[x] = plane.point_index(img);
    }
    out.push_back(std::move(perm));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Values of the two basis forms of one pencil at one point.
struct PairValue {
  std::uint16_t a, b;
};

using Form = std::array<FieldElement, 6>;

struct Pencil {
  Form f1, f2;
};

// Forms vanishing on four points with no four collinear span a plane; returns
// false otherwise.
bool pencil_through4(const Field& f, const std::array<const Sextuple*, 4>& rows, Pencil& out) {
  std::array<std::array<FieldElement, 6>, 4> m;
  for (int i = 0; i < 4; ++i) m[i] = *rows[i];
  std::array<int, 4> pivot{};
  int rank = 0;
  for (int col = 0; col < 6 && rank < 4; ++col) {
    int r = rank;
    while (r < 4 && m[r][col].is_zero()) ++r;
    if (r == 4) continue;
    std::swap(m[r], m[rank]);
    const FieldElement inv = f.inv(m[rank][col]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (int i = 0; i < 4; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const FieldElement factor = m[i][col];
      for (int j = 0; j < 6; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
    }
    pivot[rank++] = col;
  }
  if (rank != 4) return false;
  std::array<int, 2> free{};
  int nf = 0;
  for (int c = 0, pi = 0; c < 6; ++c) {
    if (pi < 4 && pivot[pi] == c) {
      ++pi;
    } else {
      free[nf++] = c;
    }
  }
  for (int k = 0; k < 2; ++k) {
    Form& x = k == 0 ? out.f1 : out.f2;
    x.fill(Field::zero());
    x[free[k]] = Field::one();
    for (int i = 0; i < 4; ++i) x[pivot[i]] = f.neg(m[i][free[k]]);
  }
  return true;
}

FieldElement eval(const Field& f, const Form& form, const Sextuple& v) {
  FieldElement s = Field::zero();
  for (int i = 0; i < 6; ++i) s = f.add(s, f.mul(form[i], v[i]));
  return s;
}

struct Shared {
  Shared(const Plane& pl, const SearchConfig& c) : plane(pl), cfg(c) {}

  const Plane& plane;
  const SearchConfig& cfg;
  std::size_t maxcol = 2;
  bool conics = false;
  bool unrestricted = false;
  std::size_t target = 0;   // min mode: leaf size
  std::size_t ceiling = 0;  // max mode
  std::atomic<std::size_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<bool> done{false};
  Clock::time_point start = Clock::now();
  const std::vector<std::vector<PointId>>* perms = nullptr;
  std::vector<PointId> root;
};

class Worker {
 public:
  explicit Worker(Shared& sh)
      : sh_(sh), plane_(sh.plane), f_(sh.plane.field()), counts_(sh.plane.size(), 0), levels_(sh.plane.size() + 2) {
    for (PointId p : sh_.root) push(p);
    Level& root = levels_[set_.size()];
    root.open.clear();
    std::vector<bool> member(plane_.size(), false);
    for (PointId p : set_) member[p] = true;
    for (PointId r = 0; r < plane_.size(); ++r) {
      if (member[r]) continue;
      bool ok = true;
      for (LineId l : plane_.lines_through(r))
        if (counts_[l] + 1u > sh_.maxcol) ok = false;
      if (ok && sh_.conics && set_.size() >= 5) ok = extends(plane_, set_, r, sh_.cfg.kind);
      if (ok) root.open.push_back(r);
    }
    root_size_ = set_.size();
    if (sh_.conics) build_table(root_size_);
  }

  const std::vector<PointId>& root_open() const { return levels_[root_size_].open; }
  std::size_t root_size() const { return root_size_; }

  // Explores the subtree rooted at the root plus root_open()[i].
  void run_branch(std::size_t i) { expand_child(root_size_, i); }

  // Handles the root itself (size check, degenerate completeness).
  void visit_root() {
    count_node();
    const std::size_t s = root_size_;
    const Level& lv = levels_[s];
    if (sh_.cfg.mode == SearchMode::MaxSize) {
      record_max(s);
    } else if (sh_.unrestricted) {
      if (lv.open.empty()) record_min();
    } else if (s == sh_.target && lv.open.empty()) {
      record_min();
    }
  }

  std::uint64_t flush_nodes() {
    sh_.nodes.fetch_add(local_nodes_);
    const auto n = local_nodes_;
    local_nodes_ = 0;
    return n;
  }

  std::vector<PointSet> witnesses;
  PointSet best_set;

 private:
  struct Level {
    std::vector<PointId> open;
    std::vector<std::uint32_t> parent_pos;
    std::vector<PairValue> table;  // open.size() rows of `pencils` entries
    std::size_t pencils = 0;
  };

  void push(PointId p) {
    if (sh_.conics) {
      pencil_marks_.push_back(pencils_.size());
      const std::size_t n = set_.size();
      for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
          for (std::size_t k = j + 1; k < n; ++k) {
            Pencil pc;
            const std::array<const Sextuple*, 4> rows{&plane_.veronese(set_[i]), &plane_.veronese(set_[j]),
                                                      &plane_.veronese(set_[k]), &plane_.veronese(p)};
            if (!pencil_through4(f_, rows, pc)) throw std::logic_error("four collinear points in a candidate");
            pencils_.push_back(pc);
          }
    }
    set_.push_back(p);
    for (LineId l : plane_.lines_through(p)) ++counts_[l];
  }

  void pop() {
    const PointId p = set_.back();
    set_.pop_back();
    for (LineId l : plane_.lines_through(p)) --counts_[l];
    if (sh_.conics) {
      pencils_.resize(pencil_marks_.back());
      pencil_marks_.pop_back();
    }
  }

  void build_table(std::size_t s) {
    Level& lv = levels_[s];
    const std::size_t np = pencils_.size();
    const std::size_t n = lv.open.size();
    lv.pencils = np;
    lv.table.resize(n * np);
    std::size_t first_new = 0;
    const Level* parent = nullptr;
    if (s > root_size_) {
      parent = &levels_[s - 1];
      first_new = parent->pencils;
    }
    for (std::size_t i = 0; i < n; ++i) {
      PairValue* row = lv.table.data() + i * np;
      if (parent) {
        const PairValue* prow = parent->table.data() + std::size_t{lv.parent_pos[i]} * parent->pencils;
        std::copy(prow, prow + first_new, row);
      }
      const Sextuple& v = plane_.veronese(lv.open[i]);
      for (std::size_t k = first_new; k < np; ++k)
        row[k] = {static_cast<std::uint16_t>(eval(f_, pencils_[k].f1, v).value()),
                  static_cast<std::uint16_t>(eval(f_, pencils_[k].f2, v).value())};
    }
  }

  // Whether the set (of size s) plus open[i] and open[j] is still a candidate.
  bool compatible(std::size_t s, std::size_t i, std::size_t j) const {
    const Level& lv = levels_[s];
    const PointId p = lv.open[i];
    const PointId r = lv.open[j];
    if (counts_[plane_.line_through(p, r)] + 2u > sh_.maxcol) return false;
    if (!sh_.conics) return true;
    const std::size_t np = lv.pencils;
    const PairValue* a = lv.table.data() + i * np;
    const PairValue* b = lv.table.data() + j * np;
    for (std::size_t k = 0; k < np; ++k) {
      const FieldElement l = f_.mul(FieldElement{a[k].a}, FieldElement{b[k].b});
      const FieldElement rr = f_.mul(FieldElement{a[k].b}, FieldElement{b[k].a});
      if (l == rr) return false;
    }
    return true;
  }

  bool canonical(std::span<const PointId> set) const {
    if (!sh_.perms || set.size() <= 4) return true;
    const std::span<const PointId> tail = set.subspan(4);
    std::array<PointId, 64> img{};
    for (std::size_t g = 1; g < sh_.perms->size(); ++g) {
      const auto& perm = (*sh_.perms)[g];
      for (std::size_t i = 0; i < tail.size(); ++i) img[i] = perm[tail[i]];
      std::sort(img.begin(), img.begin() + tail.size());
      if (std::lexicographical_compare(img.begin(), img.begin() + tail.size(), tail.begin(), tail.end()))
        return false;
    }
    return true;
  }

  bool count_node() {
    if (++local_nodes_ >= 4096) {
      const std::uint64_t total = sh_.nodes.fetch_add(local_nodes_) + local_nodes_;
      local_nodes_ = 0;
      if (sh_.cfg.node_budget && total > *sh_.cfg.node_budget) sh_.out_of_budget = true;
      if (sh_.cfg.time_budget_seconds &&
          std::chrono::duration<double>(Clock::now() - sh_.start).count() > *sh_.cfg.time_budget_seconds)
        sh_.out_of_budget = true;
    }
    return !sh_.out_of_budget && !sh_.done;
  }

  void record_max(std::size_t s) {
    std::size_t cur = sh_.best.load();
    if (s <= cur) return;
    while (s > cur && !sh_.best.compare_exchange_weak(cur, s)) {
    }
    if (best_set.size() < s) best_set = sorted_set();
    if (s >= sh_.ceiling) sh_.done = true;
  }

  void record_min() {
    const std::size_t s = set_.size();
    if (sh_.unrestricted) {
      std::size_t cur = sh_.best.load();
      while (s < cur && !sh_.best.compare_exchange_weak(cur, s)) {
      }
      if (s > witness_size_) return;
      if (s < witness_size_) {
        witnesses.clear();
        witness_size_ = s;
      }
    }
    if (witnesses.size() < sh_.cfg.witness_cap) witnesses.push_back(sorted_set());
  }

  PointSet sorted_set() const {
    PointSet out = set_;
    std::sort(out.begin(), out.end());
    return out;
  }

  // Builds the child's open list from open[i] and descends.
  void expand_child(std::size_t s, std::size_t i) {
    Level& lv = levels_[s];
    Level& child = levels_[s + 1];
    const std::size_t n = lv.open.size();
    child.open.clear();
    child.parent_pos.clear();
    const bool forward_only = sh_.cfg.mode == SearchMode::MaxSize;
    for (std::size_t j = forward_only ? i + 1 : 0; j < n; ++j) {
      if (j == i || !compatible(s, i, j)) continue;
      child.open.push_back(lv.open[j]);
      child.parent_pos.push_back(static_cast<std::uint32_t>(j));
    }
    push(lv.open[i]);
    if (sh_.cfg.mode == SearchMode::MaxSize) {
      visit_max(s + 1);
    } else if (sh_.unrestricted) {
      visit_min_unrestricted(s + 1);
    } else {
      visit_min(s + 1);
    }
    pop();
  }

  void visit_max(std::size_t s) {
    if (!count_node()) return;
    if (!canonical(set_)) return;
    record_max(s);
    if (sh_.done) return;
    Level& lv = levels_[s];
    const std::size_t n = lv.open.size();
    if (s + n <= sh_.best.load()) return;
    if (sh_.conics) build_table(s);
    for (std::size_t i = 0; i < n; ++i) {
      if (sh_.done || sh_.out_of_budget) return;
      if (s + n - i <= sh_.best.load()) break;
      expand_child(s, i);
    }
  }

  void visit_min(std::size_t s) {
    if (!count_node()) return;
    if (!canonical(set_)) return;
    Level& lv = levels_[s];
    const std::size_t n = lv.open.size();
    if (s == sh_.target) {
      if (n == 0) record_min();
      return;
    }
    const PointId last = set_.back();
    const std::size_t start = static_cast<std::size_t>(
        std::upper_bound(lv.open.begin(), lv.open.end(), last) - lv.open.begin());
    if (n - start < sh_.target - s) return;
    if (sh_.conics) build_table(s);
    for (std::size_t i = start; i < n; ++i) {
      if (sh_.done || sh_.out_of_budget || witnesses.size() >= sh_.cfg.witness_cap) return;
      if (n - i < sh_.target - s) break;
      if (s + 1 == sh_.target) {
        // Leaf: complete iff nothing else stays compatible.
        if (!count_node()) return;
        bool complete = true;
        for (std::size_t j = 0; j < n && complete; ++j)
          if (j != i && compatible(s, i, j)) complete = false;
        if (!complete) continue;
        push(lv.open[i]);
        if (canonical(set_)) record_min();
        pop();
        continue;
      }
      expand_child(s, i);
    }
  }

  void visit_min_unrestricted(std::size_t s) {
    if (!count_node()) return;
    Level& lv = levels_[s];
    const std::size_t n = lv.open.size();
    if (n == 0) {
      record_min();
      return;
    }
    if (s >= sh_.best.load()) return;
    const PointId last = set_.back();
    const std::size_t start = static_cast<std::size_t>(
        std::upper_bound(lv.open.begin(), lv.open.end(), last) - lv.open.begin());
    if (sh_.conics) build_table(s);
    for (std::size_t i = start; i < n; ++i) {
      if (sh_.out_of_budget) return;
      expand_child(s, i);
    }
  }

  Shared& sh_;
  const Plane& plane_;
  const Field& f_;
  PointSet set_;
  std::vector<std::uint16_t> counts_;
  std::vector<Pencil> pencils_;
  std::vector<std::size_t> pencil_marks_;
  std::vector<Level> levels_;
  std::size_t root_size_ = 0;
  std::size_t witness_size_ = SIZE_MAX;
  std::uint64_t local_nodes_ = 0;
};

struct BranchOutcome {
  bool finished = false;
  std::vector<PointSet> witnesses;
  PointSet best_set;
};

// Runs every depth-1 branch of the configured tree; returns per-branch
// outcomes in branch order.
std::vector<BranchOutcome> run_tree(Shared& sh) {
  Worker probe(sh);
  probe.visit_root();
  std::vector<BranchOutcome> outcomes(probe.root_open().size());
  BranchOutcome root_outcome;
  root_outcome.finished = true;
  root_outcome.witnesses = probe.witnesses;
  root_outcome.best_set = probe.best_set;
  probe.flush_nodes();

  const bool min_frame = sh.cfg.mode == SearchMode::MinComplete && !sh.unrestricted;
  const bool root_is_leaf = min_frame && probe.root_size() >= sh.target;
  if (sh.done || root_is_leaf) {
    outcomes.clear();
    outcomes.insert(outcomes.begin(), std::move(root_outcome));
    return outcomes;
  }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto prefix_has_enough = [&](std::size_t b) {
    // Branches before b are all finished and hold enough witnesses.
    std::size_t have = root_outcome.witnesses.size();
    for (std::size_t i = 0; i < b; ++i) {
      if (!outcomes[i].finished) return false;
      have += outcomes[i].witnesses.size();
    }
    return have >= sh.cfg.witness_cap;
  };
  auto work = [&]() {
    Worker w(sh);
    while (true) {
      const std::size_t b = next.fetch_add(1);
      if (b >= outcomes.size() || sh.done || sh.out_of_budget) break;
      if (sh.cfg.mode == SearchMode::MinComplete && !sh.unrestricted) {
        std::lock_guard lock(mu);
        if (prefix_has_enough(b)) {
          outcomes[b].finished = true;
          continue;
        }
      }
      w.witnesses.clear();
      w.best_set.clear();
      w.run_branch(b);
      std::lock_guard lock(mu);
      outcomes[b].witnesses = std::move(w.witnesses);
      outcomes[b].best_set = std::move(w.best_set);
      outcomes[b].finished = !sh.out_of_budget;
    }
    w.flush_nodes();
  };
  const unsigned workers = std::max(1u, sh.cfg.worker_count);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  outcomes.insert(outcomes.begin(), std::move(root_outcome));
  return outcomes;
}

void check_config(const Plane& plane, const SearchConfig& cfg) {
  if (cfg.q != 0 && cfg.q != plane.q()) throw std::invalid_argument("config q does not match the plane");
  if (plane.q() > cfg.q_cap)
    throw std::invalid_argument("q=" + std::to_string(plane.q()) + " exceeds the search cap " +
                                std::to_string(cfg.q_cap));
  if (cfg.k_floor && cfg.k_ceiling && *cfg.k_floor > *cfg.k_ceiling)
    throw std::invalid_argument("k_floor exceeds k_ceiling");
  if (cfg.witness_cap == 0) throw std::invalid_argument("witness_cap must be positive");
}

void prepare(Shared& sh, const SearchConfig& cfg) {
  sh.maxcol = cfg.kind == ArcKind::Generalized ? 3 : 2;
  sh.conics = cfg.kind != ArcKind::Arc;
}

std::vector<PointId> frame_of(const Plane& plane) {
  const std::uint32_t q = plane.q();
  return {0, q + 1, q * q, q * q + q};
}

ArcCertificate certify(const Plane& plane, const PointSet& set, const SearchConfig& cfg, Claim claim,
                       const json& meta) {
  ArcCertificate c = make_certificate(plane, set, cfg.kind, claim);
  c.search_meta = meta;
  return c;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

json base_meta(const SearchConfig& cfg, bool fix_frame) {
  return json{{"kind", to_string(cfg.kind)},
              {"mode", to_string(cfg.mode)},
              {"fix_frame", fix_frame},
              {"permutation_reduction", fix_frame && cfg.permutation_reduction},
              {"class", cfg.kind == ArcKind::Generalized ? "at most 3 points on a line" : "no 3 points on a line"}};
}

SearchResult min_frame(const Plane& plane, const SearchConfig& cfg) {
  const auto start = Clock::now();
  SearchResult result;
  const Floor fl = cfg.k_floor ? Floor{*cfg.k_floor, "k_floor"} : default_floor(plane.q(), cfg.kind);
  const std::size_t lo = std::max<std::size_t>(fl.value, 4);
  const std::size_t hi = std::min<std::size_t>(cfg.k_ceiling.value_or(plane.size()), plane.size());
  std::vector<std::vector<PointId>> perms;
  if (cfg.permutation_reduction) perms = frame_collineations(plane);
  result.meta = base_meta(cfg, true);
  result.meta["floor"] = lo;
  result.meta["floor_source"] = fl.source;

  std::uint64_t nodes = 0;
  bool budget_hit = false;
  for (std::size_t k = lo; k <= hi && !budget_hit; ++k) {
    SearchConfig local = cfg;
    if (cfg.node_budget) local.node_budget = *cfg.node_budget > nodes ? *cfg.node_budget - nodes : 0;
    Shared sh(plane, local);
    prepare(sh, local);
    sh.target = k;
    sh.root = frame_of(plane);
    sh.start = start;
    if (!perms.empty()) sh.perms = &perms;
    const auto outcomes = run_tree(sh);
    nodes += sh.nodes.load();
    budget_hit = sh.out_of_budget;
    for (const auto& o : outcomes)
      for (const auto& w : o.witnesses)
        if (result.witnesses.size() < cfg.witness_cap)
          result.witnesses.push_back(certify(plane, w, cfg, Claim::MinimalComplete, {}));
    if (!result.witnesses.empty()) {
      result.answer = k;
      break;
    }
  }
  result.nodes_explored = nodes;
  // Sizes below the answer were all exhausted unless the budget ran out
  // before a witness turned up.
  result.exhaustive = !budget_hit || result.answer.has_value();
  result.wall_seconds = seconds_since(start);
  result.meta["nodes"] = result.nodes_explored;
  result.meta["exhaustive"] = result.exhaustive;
  for (auto& w : result.witnesses) w.search_meta = result.meta;
  return result;
}

SearchResult max_tree(const Plane& plane, const SearchConfig& cfg, bool fix_frame) {
  const auto start = Clock::now();
  SearchResult result;
  const Ceiling ceil = cfg.k_ceiling ? Ceiling{*cfg.k_ceiling, "k_ceiling"} : default_ceiling(plane.q(), cfg.kind);
  std::vector<std::vector<PointId>> perms;
  if (fix_frame && cfg.permutation_reduction) perms = frame_collineations(plane);

  Shared sh(plane, cfg);
  prepare(sh, cfg);
  sh.unrestricted = !fix_frame;
  sh.ceiling = std::min<std::size_t>(ceil.value, plane.size());
  sh.start = start;
  if (fix_frame) sh.root = frame_of(plane);
  if (!perms.empty()) sh.perms = &perms;
  const auto outcomes = run_tree(sh);

  std::size_t best = 0;
  for (const auto& o : outcomes) best = std::max(best, o.best_set.size());
  result.nodes_explored = sh.nodes.load();
  result.exhaustive = !sh.out_of_budget;
  result.wall_seconds = seconds_since(start);
  result.meta = base_meta(cfg, fix_frame);
  result.meta["ceiling"] = sh.ceiling;
  result.meta["ceiling_source"] = ceil.source;
  result.meta["stopped_at_ceiling"] = best >= sh.ceiling;
  result.meta["nodes"] = result.nodes_explored;
  result.meta["exhaustive"] = result.exhaustive;
  if (best > 0) {
    result.answer = best;
    for (const auto& o : outcomes)
      if (o.best_set.size() == best && result.witnesses.size() < cfg.witness_cap)
        result.witnesses.push_back(certify(plane, o.best_set, cfg, Claim::Maximal, result.meta));
  }
  return result;
}

}  // namespace

SearchResult search_min_complete(const Plane& plane, const SearchConfig& cfg) {
  check_config(plane, cfg);
  SearchConfig c = cfg;
  c.mode = SearchMode::MinComplete;
  return min_frame(plane, c);
}

SearchResult search_max(const Plane& plane, const SearchConfig& cfg) {
  check_config(plane, cfg);
  SearchConfig c = cfg;
  c.mode = SearchMode::MaxSize;
  return max_tree(plane, c, true);
}

SearchResult search_unrestricted(const Plane& plane, const SearchConfig& cfg) {
  check_config(plane, cfg);
  if (plane.q() > 5) throw std::invalid_argument("unrestricted search needs q <= 5");
  if (cfg.mode == SearchMode::MaxSize) {
    SearchConfig c = cfg;
    c.permutation_reduction = false;
    return max_tree(plane, c, false);
  }
  const auto start = Clock::now();
  Shared sh(plane, cfg);
  prepare(sh, cfg);
  sh.unrestricted = true;
  sh.best = plane.size() + 1;
  sh.start = start;
  const auto outcomes = run_tree(sh);

  SearchResult result;
  std::size_t best = plane.size() + 1;
  for (const auto& o : outcomes)
    for (const auto& w : o.witnesses) best = std::min(best, w.size());
  result.nodes_explored = sh.nodes.load();
  result.exhaustive = !sh.out_of_budget;
  result.wall_seconds = seconds_since(start);
  result.meta = base_meta(cfg, false);
  result.meta["nodes"] = result.nodes_explored;
  result.meta["exhaustive"] = result.exhaustive;
  if (best <= plane.size()) {
    result.answer = best;
    for (const auto& o : outcomes)
      for (const auto& w : o.witnesses)
        if (w.size() == best && result.witnesses.size() < cfg.witness_cap)
          result.witnesses.push_back(certify(plane, w, cfg, Claim::MinimalComplete, result.meta));
  }
  return result;
}

SearchResult run_search(const Plane& plane, const SearchConfig& cfg) {
  if (!cfg.fix_frame) return search_unrestricted(plane, cfg);
  return cfg.mode == SearchMode::MinComplete ? search_min_complete(plane, cfg) : search_max(plane, cfg);
}

std::string csv_header() { return "q,kind,mode,answer,nodes,exhaustive,wall_time"; }

std::string csv_row(const SearchConfig& cfg, const SearchResult& result) {
  std::ostringstream out;
  out << cfg.q << "," << to_string(cfg.kind) << "," << to_string(cfg.mode) << ",";
  if (result.answer) out << *result.answer;
  out << "," << result.nodes_explored << "," << (result.exhaustive ? "true" : "false") << ",";
  out.setf(std::ios::fixed);
  out.precision(3);
  out << result.wall_seconds;
  return out.str();
}

}  // namespace genarcs
