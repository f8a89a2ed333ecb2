#include "genarcs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "genarcs/gf.hpp"
#include "known_values_data.hpp"

namespace genarcs {

using nlohmann::json;

double binom_poly(double t, int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("binom_poly: n must be in 0..5");
  double num = 1.0;
  double den = 1.0;
  for (int i = 0; i < n; ++i) {
    num *= t - i;
    den *= i + 1;
  }
  return num / den;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  // Partial products are C(n-k+i, i), increasing in i, so the first one past
  // the int64 range decides the clamp.
  constexpr __int128 cap = std::numeric_limits<std::int64_t>::max();
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t threshold_ceiling(const std::function<std::int64_t(std::int64_t)>& f, std::int64_t rhs,
                               std::int64_t lo, std::int64_t hi) {
  std::optional<std::int64_t> found;
  std::int64_t prev = 0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const std::int64_t v = f(k);
    if (k > lo && v < prev)
      throw ThresholdError("left-hand side decreases between k=" + std::to_string(k - 1) + " and k=" +
                           std::to_string(k));
    if (!found && v >= rhs) found = k;
    prev = v;
  }
  if (!found)
    throw ThresholdError("no k in [" + std::to_string(lo) + ", " + std::to_string(hi) + "] reaches " +
                         std::to_string(rhs));
  return *found;
}

namespace {

// The scan reaches k = q^2+q+1, where the quintic terms pass 2^63 for q
// around 80; clamping keeps the sums nondecreasing.
using Wide = __int128;

std::int64_t saturate(Wide v) {
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(v > hi ? hi : v);
}

Wide wide_binom(std::int64_t n, std::int64_t k) { return binom(n, k); }

}  // namespace

std::int64_t t0_lhs(std::int64_t q, std::int64_t k) {
  return saturate(wide_binom(k, 5) * (q - 4) + wide_binom(k, 2) * (q - 1) + k);
}

std::int64_t t1_lhs(std::int64_t q, std::int64_t k) { return saturate(wide_binom(k, 5) * (q - 4) + k); }

std::int64_t t2_lhs(std::int64_t q, std::int64_t k) {
  return saturate(wide_binom(k - 3, 5) * (q - 4) + wide_binom(k - 2, 4) * (6 * q - 12) +
                  wide_binom(k - 3, 2) * (q - 2) + k);
}

std::int64_t t2_counting_lhs(std::int64_t q, std::int64_t k) {
  // Points off the arc part covered by conics through five arc points, by
  // conics using points of the 3-secant, by line pairs, then the set itself.
  const Wide five_arc = wide_binom(k - 3, 5) * (q - 4);
  const Wide with_secant = wide_binom(k - 2, 4) * (6 * q - 12);
  const Wide line_pairs = (wide_binom(k - 3, 2) + 1) * (q - 2);
  return saturate(five_arc + with_secant + line_pairs + k);
}

std::int64_t t3_lhs(std::int64_t q, std::int64_t secants, std::int64_t k) {
  // T * [(k-3)(k-4) + 1 - T] is even: (k-3)(k-4) is even and T(1-T) is even.
  const Wide bracket = Wide{k - 3} * (k - 4) + 1 - secants;
  return saturate(wide_binom(k, 5) * (q - 4) + secants * bracket / 2 * q + k);
}

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Largest n with d*n <= a - b*sqrt(q), for b >= 0, d > 0.
std::int64_t floor_minus_sqrt(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t q) {
  std::int64_t n = a >= 0 ? a / d : -((-a + d - 1) / d);
  while (true) {
    const std::int64_t rest = a - d * n;
    if (rest >= 0 && b * b * q <= rest * rest) return n;
    --n;
  }
}

// Smallest n >= 0 with (c*n - e)^2 >= m and c*n - e >= 0.
std::int64_t ceil_shifted_sqrt(std::int64_t c, std::int64_t e, std::int64_t m) {
  std::int64_t n = 0;
  while (c * n - e < 0 || (c * n - e) * (c * n - e) < m) ++n;
  return n;
}

void require_q(std::uint32_t q, std::uint32_t min, const char* what) {
  if (q < min) throw std::invalid_argument(std::string(what) + " needs q >= " + std::to_string(min));
}

// The plane size always satisfies every inequality (the trailing +k term
// alone reaches q^2+q+1), so a solution exists in range.
std::int64_t scan_hi(std::uint32_t q) {
  const std::int64_t Q = q;
  return Q * Q + Q + 1;
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::int64_t lower_t_ball_sqrt2(std::uint32_t q) { return isqrt(2 * static_cast<std::int64_t>(q)) + 2; }

std::optional<std::int64_t> lower_t_ball_sqrt3(std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp || pp->h > 2) return std::nullopt;
  // n >= sqrt(3q) + 1/2  <=>  2n - 1 >= sqrt(12q)
  return ceil_shifted_sqrt(2, 1, 12 * static_cast<std::int64_t>(q));
}

std::pair<std::int64_t, std::optional<std::int64_t>> lower_t_ball(std::uint32_t q) {
  return {lower_t_ball_sqrt2(q), lower_t_ball_sqrt3(q)};
}

std::int64_t lower_t_prop(std::uint32_t q) {
  require_q(q, 2, "lower_t_prop");
  // n >= sqrt(2q + 1/4) + 3/2  <=>  2n - 3 >= sqrt(8q + 1)
  return ceil_shifted_sqrt(2, 3, 8 * static_cast<std::int64_t>(q) + 1);
}

std::int64_t lower_tv(std::uint32_t q) {
  require_q(q, 5, "lower_tv");
  const std::int64_t Q = q;
  return threshold_ceiling([Q](std::int64_t k) { return t0_lhs(Q, k); }, Q * Q + Q + 1, 1, scan_hi(q));
}

GeneralizedLower lower_tg(std::uint32_t q) {
  require_q(q, 5, "lower_tg");
  const std::int64_t Q = q;
  GeneralizedLower g;
  g.t1 = threshold_ceiling([Q](std::int64_t k) { return t1_lhs(Q, k); }, Q * Q + Q + 1, 1, scan_hi(q));
  g.t2 = threshold_ceiling([Q](std::int64_t k) { return t2_lhs(Q, k); }, Q * Q + 3, 1, scan_hi(q));
  g.min = std::min(g.t1, g.t2);
  return g;
}

std::int64_t lower_tg_t2_counting(std::uint32_t q) {
  require_q(q, 5, "lower_tg_t2_counting");
  const std::int64_t Q = q;
  return threshold_ceiling([Q](std::int64_t k) { return t2_counting_lhs(Q, k); }, Q * Q + Q + 1, 1, scan_hi(q));
}

std::int64_t lower_tg_with_secants(std::uint32_t q, std::int64_t secants) {
  require_q(q, 5, "lower_tg_with_secants");
  if (secants < 0) throw std::invalid_argument("lower_tg_with_secants: negative secant count");
  const std::int64_t Q = q;
  // (k-3)(k-4) decreases up to k = 3, so with secants the scan starts there.
  const std::int64_t lo = secants == 0 ? 1 : 3;
  return threshold_ceiling([Q, secants](std::int64_t k) { return t3_lhs(Q, secants, k); }, Q * Q + Q + 1, lo,
                           scan_hi(q));
}

std::optional<Sourced> reference_m5q(std::uint32_t q) {
  const json& m5 = known_values().data().at("m5q");
  const auto even_from = m5.at("even_from").get<std::uint32_t>();
  const auto odd_from = m5.at("odd_from").get<std::uint32_t>();
  const auto range = m5.at("odd_open_range").get<std::vector<std::uint32_t>>();
  const std::string source = "m(5,q) = q+1, " + m5.at("source").get<std::string>();
  if (q % 2 == 0) {
    if (q >= even_from) return Sourced{q + 1, source};
    return std::nullopt;
  }
  if (q < odd_from || (q >= range.at(0) && q <= range.at(1))) return std::nullopt;
  return Sourced{q + 1, source};
}

std::vector<Sourced> m2q_prime_bounds(std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const std::int64_t Q = q;
  std::vector<Sourced> out;
  if (q >= 7) out.push_back({Q - 1, "Segre-Tallini q-1"});
  if (q % 2 == 1) out.push_back({floor_minus_sqrt(16 * Q + 25, 4, 16, Q), "Thas q-sqrt(q)/4+25/16"});
  if (pp->h == 1) out.push_back({(44 * Q + 40) / 45, "Voloch 44q/45+8/9"});
  if (pp->p >= 5) out.push_back({floor_minus_sqrt(2 * Q + 10, 1, 2, Q), "Hirschfeld-Korchmaros q-sqrt(q)/2+5"});
  return out;
}

std::optional<Sourced> reference_m2q_prime(std::uint32_t q) {
  const KnownCell cell = known_values().cell("table1", q, "m_prime");
  if (cell.present && cell.value) return Sourced{*cell.value, "exact, " + cell.source};
  const auto bounds = m2q_prime_bounds(q);
  if (bounds.empty()) return std::nullopt;
  return *std::min_element(bounds.begin(), bounds.end(),
                           [](const Sourced& a, const Sourced& b) { return a.value < b.value; });
}

std::optional<Sourced> upper_mg(std::uint32_t q) {
  if (!prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const std::int64_t Q = q;
  std::vector<Sourced> terms;
  if (q % 2 == 1 && q >= 7) {
    if (auto m5 = reference_m5q(q)) terms.push_back(*m5);
    if (auto mp = reference_m2q_prime(q)) terms.push_back({mp->value + 3, "m'(2,q)+3 [" + mp->source + "]"});
    terms.push_back({floor_minus_sqrt(4 * Q + 19, 1, 4, Q), "q-sqrt(q)/4+19/4"});
  } else if (q % 2 == 0 && q >= 16) {
    if (auto m5 = reference_m5q(q)) terms.push_back(*m5);
    terms.push_back({floor_minus_sqrt(4 * Q + 17, 2, 4, Q), "q-sqrt(q)/2+17/4"});
  } else {
    return std::nullopt;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].value < terms[best].value) best = i;
  std::ostringstream src;
  src << "min{";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) src << ", ";
    src << terms[i].value << (i == best ? "*" : "") << " " << terms[i].source;
  }
  src << "}";
  return Sourced{terms[best].value, src.str()};
}

std::optional<Sourced> upper_mg_piecewise(std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const std::int64_t Q = q;
  if (pp->p == 2) {
    if (q == 16 || q == 32) return Sourced{Q + 1, "even, q in {16,32}: q+1"};
    if (q >= 64) return Sourced{floor_minus_sqrt(4 * Q + 17, 2, 4, Q), "even, q >= 64: q-sqrt(q)/2+17/4"};
    return std::nullopt;
  }
  if (q < 7) return std::nullopt;
  if (pp->h == 1) {
    if (q <= 19) return Sourced{Q + 1, "prime, 7 <= q <= 19: q+1"};
    if (q <= 83) return Sourced{Q + 2, "prime, 23 <= q <= 83: q+2"};
    return Sourced{(44 * Q + 40) / 45 + 3, "prime, q >= 89: 44q/45+8/9, +3"};
  }
  if (pp->p >= 5) {
    if (q == 25 || q == 49) return Sourced{Q + 2, "p >= 5, q in {25,49}: q+2"};
    if (q == 121 || q == 125) return Sourced{Q + 1, "p >= 5, q in {121,125}: q+1"};
    if (q >= 169) return Sourced{floor_minus_sqrt(2 * Q + 10, 1, 2, Q) + 3, "p >= 5, q >= 169: q-sqrt(q)/2+5, +3"};
    return std::nullopt;
  }
  if (q == 9) return Sourced{10, "p = 3, q = 9: 10"};
  if (q == 27 || q == 81) return Sourced{Q + 2, "p = 3, q in {27,81}: q+2"};
  if (q >= 243) return Sourced{floor_minus_sqrt(16 * Q + 25, 4, 16, Q) + 3, "p = 3, q >= 243: q-sqrt(q)/4+25/16, +3"};
  return std::nullopt;
}

namespace {

void check_cell(BoundReport& report, std::string_view table, std::string_view column,
                std::optional<std::int64_t> computed) {
  const KnownValues& kv = known_values();
  const KnownCell cell = kv.cell(table, report.q, column);
  if (!cell.present || cell.value == computed) return;
  const std::string printed = cell.value ? format_int(*cell.value) : "-";
  const std::string got = computed ? format_int(*computed) : "-";
  const std::string what = std::string(table) + " q=" + std::to_string(report.q) + " " + std::string(column) +
                           ": printed " + printed + ", computed " + got;
  const auto d = kv.discrepancy(table, report.q, column);
  if (d && cell.value && computed && d->printed == *cell.value && d->computed == *computed) {
    report.flagged.push_back(what + " (known discrepancy: " + d->note + ")");
  } else {
    report.inconsistencies.push_back(what);
  }
}

void check_at_least(BoundReport& report, std::string_view table, std::string_view column, std::int64_t bound,
                    std::string_view bound_name) {
  const KnownCell cell = known_values().cell(table, report.q, column);
  if (cell.present && cell.value && *cell.value < bound)
    report.inconsistencies.push_back(std::string(table) + " q=" + std::to_string(report.q) + " " +
                                     std::string(column) + "=" + format_int(*cell.value) + " is below " +
                                     std::string(bound_name) + "=" + format_int(bound));
}

void check_at_most(BoundReport& report, std::string_view table, std::string_view column, std::int64_t bound,
                   std::string_view bound_name) {
  const KnownCell cell = known_values().cell(table, report.q, column);
  if (cell.present && cell.value && *cell.value > bound)
    report.inconsistencies.push_back(std::string(table) + " q=" + std::to_string(report.q) + " " +
                                     std::string(column) + "=" + format_int(*cell.value) + " exceeds " +
                                     std::string(bound_name) + "=" + format_int(bound));
}

}  // namespace

BoundReport full_report(std::uint32_t q) {
  if (!prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  BoundReport r;
  r.q = q;
  r.lower_t_ball_sqrt2 = lower_t_ball_sqrt2(q);
  r.lower_t_ball_sqrt3 = lower_t_ball_sqrt3(q);
  r.lower_t_prop = lower_t_prop(q);
  if (q >= 5) {
    r.lower_tv_t0 = lower_tv(q);
    const auto g = lower_tg(q);
    r.lower_tg_t1 = g.t1;
    r.lower_tg_t2 = g.t2;
    r.lower_tg_min = g.min;
  }
  r.upper_mg = upper_mg(q);
  r.reference_m5q = reference_m5q(q);
  r.reference_m2q_prime = reference_m2q_prime(q);

  for (const char* table : {"table2", "table3"}) {
    check_cell(r, table, "ball_sqrt2", r.lower_t_ball_sqrt2);
    check_cell(r, table, "ball_sqrt3", r.lower_t_ball_sqrt3);
    check_cell(r, table, "prop", r.lower_t_prop);
    check_at_least(r, table, "t", r.lower_t_prop, "lower_t_prop");
    check_at_least(r, table, "t", r.lower_t_ball_sqrt2, "lower_t_ball_sqrt2");
    if (r.lower_t_ball_sqrt3) check_at_least(r, table, "t", *r.lower_t_ball_sqrt3, "lower_t_ball_sqrt3");
  }
  if (q >= 5) {
    check_cell(r, "table4", "t0", r.lower_tv_t0);
    check_at_least(r, "table4", "t_v", *r.lower_tv_t0, "ceil(t0)");
    check_cell(r, "table5", "t1", r.lower_tg_t1);
    check_cell(r, "table5", "t2", r.lower_tg_t2);
    check_at_least(r, "table5", "t_g", *r.lower_tg_min, "min(ceil(t1), ceil(t2))");
    check_cell(r, "table6", "t1", r.lower_tg_t1);
    check_cell(r, "table6", "t2", r.lower_tg_t2);
  }
  if (r.upper_mg) {
    check_at_most(r, "table1", "m_g", r.upper_mg->value, "upper_mg");
    check_cell(r, "corollary", "upper_mg", r.upper_mg->value);
    const auto piecewise = upper_mg_piecewise(q);
    if (piecewise && piecewise->value != r.upper_mg->value)
      r.inconsistencies.push_back("q=" + std::to_string(q) + " piecewise upper_mg " + format_int(piecewise->value) +
                                  " differs from the minimum " + format_int(r.upper_mg->value));
  }
  // t <= m for the classical sizes, where both are tabulated.
  const KnownCell t = known_values().cell("table2", q, "t");
  const KnownCell m = known_values().cell("table1", q, "m");
  if (t.value && m.value && *t.value > *m.value)
    r.inconsistencies.push_back("q=" + std::to_string(q) + " tabulated t(2,q) exceeds m(2,q)");
  return r;
}

json to_json(const BoundReport& r) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); };
  auto src = [](const std::optional<Sourced>& v) {
    return v ? json{{"value", v->value}, {"source", v->source}} : json(nullptr);
  };
  return json{{"q", r.q},
              {"lower_t_ball_sqrt2", r.lower_t_ball_sqrt2},
              {"lower_t_ball_sqrt3", opt(r.lower_t_ball_sqrt3)},
              {"lower_t_prop", r.lower_t_prop},
              {"lower_tv_t0", opt(r.lower_tv_t0)},
              {"lower_tg_t1", opt(r.lower_tg_t1)},
              {"lower_tg_t2", opt(r.lower_tg_t2)},
              {"lower_tg_min", opt(r.lower_tg_min)},
              {"upper_mg", src(r.upper_mg)},
              {"reference_m5q", src(r.reference_m5q)},
              {"reference_m2q_prime", src(r.reference_m2q_prime)},
              {"inconsistencies", r.inconsistencies},
              {"flagged", r.flagged}};
}

KnownValues::KnownValues(json data) : data_(std::move(data)) {
  for (const auto& d : data_.at("discrepancies")) {
    KnownDiscrepancy k;
    k.table = d.at("table").get<std::string>();
    k.q = d.at("q").get<std::uint32_t>();
    k.column = d.at("column").get<std::string>();
    k.printed = d.at("printed").get<std::int64_t>();
    k.computed = d.at("computed").get<std::int64_t>();
    k.note = d.value("note", "");
    discrepancies_.push_back(std::move(k));
  }
}

KnownCell KnownValues::cell(std::string_view table, std::uint32_t q, std::string_view column) const {
  KnownCell out;
  const json& tables = data_.at("tables");
  const auto t = tables.find(std::string(table));
  if (t == tables.end()) return out;
  const auto& cols = t->at("columns");
  const auto c = std::find(cols.begin(), cols.end(), std::string(column));
  if (c == cols.end()) return out;
  const auto row = t->at("rows").find(std::to_string(q));
  if (row == t->at("rows").end()) return out;
  const json& v = row->at(static_cast<std::size_t>(c - cols.begin()));
  out.present = true;
  if (!v.is_null()) out.value = v.get<std::int64_t>();
  out.source = t->at("source").get<std::string>();
  return out;
}

std::vector<std::uint32_t> KnownValues::rows(std::string_view table) const {
  std::vector<std::uint32_t> out;
  const json& tables = data_.at("tables");
  const auto t = tables.find(std::string(table));
  if (t == tables.end()) return out;
  for (const auto& [key, value] : t->at("rows").items()) out.push_back(static_cast<std::uint32_t>(std::stoul(key)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> KnownValues::columns(std::string_view table) const {
  const json& tables = data_.at("tables");
  const auto t = tables.find(std::string(table));
  if (t == tables.end()) return {};
  return t->at("columns").get<std::vector<std::string>>();
}

std::optional<KnownDiscrepancy> KnownValues::discrepancy(std::string_view table, std::uint32_t q,
                                                         std::string_view column) const {
  for (const auto& d : discrepancies_)
    if (d.table == table && d.q == q && d.column == column) return d;
  return std::nullopt;
}

const KnownValues& known_values() {
  static const KnownValues kv(json::parse(kKnownValuesJson));
  return kv;
}

}  // namespace genarcs
