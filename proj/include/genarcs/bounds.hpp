// Closed-form bounds on the sizes of complete arcs, evaluated exactly.
//
// Square roots never reach floating point: every comparison against sqrt(n)
// is squared into an integer inequality first. Threshold quantities ("the
// smallest real solution t of f(t) >= rhs") are returned as ceil(t), i.e. the
// smallest integer k with f(k) >= rhs, with f checked to be nondecreasing
// over the scanned range.

#ifndef GENARCS_BOUNDS_HPP
#define GENARCS_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace genarcs {

/// t(t-1)...(t-n+1)/n!, the binomial polynomial; n in 0..5.
double binom_poly(double t, int n);

/// Number of k-subsets of an n-set; 0 when n < k (also for negative n),
/// clamped to the int64 maximum.
std::int64_t binom(std::int64_t n, std::int64_t k);

class ThresholdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest k in [lo, hi] with f(k) >= rhs. Evaluates f over the whole range
/// and throws ThresholdError when f decreases somewhere or never reaches rhs.
std::int64_t threshold_ceiling(const std::function<std::int64_t(std::int64_t)>& f, std::int64_t rhs,
                               std::int64_t lo, std::int64_t hi);

/// Left-hand sides of the threshold inequalities at integer k, with their
/// right-hand sides.
std::int64_t t0_lhs(std::int64_t q, std::int64_t k);  // >= q^2+q+1
std::int64_t t1_lhs(std::int64_t q, std::int64_t k);  // >= q^2+q+1
std::int64_t t2_lhs(std::int64_t q, std::int64_t k);  // >= q^2+3
/// t2 in counting form: the same sum with the constant (q-2) kept on the
/// left, compared against q^2+q+1.
std::int64_t t2_counting_lhs(std::int64_t q, std::int64_t k);
std::int64_t t3_lhs(std::int64_t q, std::int64_t secants, std::int64_t k);  // >= q^2+q+1

/// floor(sqrt(2q) + 2).
std::int64_t lower_t_ball_sqrt2(std::uint32_t q);
/// ceil(sqrt(3q) + 1/2), only for q = p or p^2.
std::optional<std::int64_t> lower_t_ball_sqrt3(std::uint32_t q);
std::pair<std::int64_t, std::optional<std::int64_t>> lower_t_ball(std::uint32_t q);

/// ceil(sqrt(2q + 1/4) + 3/2), a lower bound on complete arcs for q >= 2.
std::int64_t lower_t_prop(std::uint32_t q);

/// ceil(t0), lower bound on complete Veronesian arcs; q >= 5.
std::int64_t lower_tv(std::uint32_t q);

struct GeneralizedLower {
  std::int64_t t1;
  std::int64_t t2;
  std::int64_t min;
};
/// ceil(t1), ceil(t2) and their minimum, lower bounds on complete generalized
/// arcs; q >= 5.
GeneralizedLower lower_tg(std::uint32_t q);
/// ceil(t2) from the counting form; equals lower_tg(q).t2.
std::int64_t lower_tg_t2_counting(std::uint32_t q);

/// ceil(t3) for complete generalized arcs with exactly `secants` 3-secants;
/// q >= 5.
std::int64_t lower_tg_with_secants(std::uint32_t q, std::int64_t secants);

/// An integer bound together with the formula or table it came from.
struct Sourced {
  std::int64_t value;
  std::string source;
};

/// Largest size of an arc in PG(5,q) where it is known (even q >= 8; odd
/// q >= 7 outside the open range recorded in the known values).
std::optional<Sourced> reference_m5q(std::uint32_t q);

/// Every applicable literature upper bound on the second largest complete
/// arc size, floored.
std::vector<Sourced> m2q_prime_bounds(std::uint32_t q);
/// Exact value from the known values when tabulated, else the smallest of
/// m2q_prime_bounds; nullopt when nothing applies.
std::optional<Sourced> reference_m2q_prime(std::uint32_t q);

/// Upper bound on the largest generalized arc, for odd q >= 7 and even
/// q >= 16; nullopt elsewhere. The source names every term of the minimum
/// and marks the one attaining it.
std::optional<Sourced> upper_mg(std::uint32_t q);

/// The piecewise closed form for the same bound by case analysis on q
/// (prime, power of a prime >= 5, power of 3, even); nullopt outside it.
std::optional<Sourced> upper_mg_piecewise(std::uint32_t q);

struct BoundReport {
  std::uint32_t q = 0;
  std::int64_t lower_t_ball_sqrt2 = 0;
  std::optional<std::int64_t> lower_t_ball_sqrt3;
  std::int64_t lower_t_prop = 0;
  std::optional<std::int64_t> lower_tv_t0;
  std::optional<std::int64_t> lower_tg_t1;
  std::optional<std::int64_t> lower_tg_t2;
  std::optional<std::int64_t> lower_tg_min;
  std::optional<Sourced> upper_mg;
  std::optional<Sourced> reference_m5q;
  std::optional<Sourced> reference_m2q_prime;
  std::vector<std::string> inconsistencies;  // against the known values
  std::vector<std::string> flagged;          // allowlisted misprints
};

/// Throws std::invalid_argument when q is not a prime power.
BoundReport full_report(std::uint32_t q);

nlohmann::json to_json(const BoundReport& report);

// Reference data: table cells, literature constants and the allowlist of
// known misprints, loaded from data/known_values.json (embedded at build
// time).

struct KnownCell {
  bool present = false;               // the table has this row and column
  std::optional<std::int64_t> value;  // nullopt for a "-" cell
  std::string source;
};

struct KnownDiscrepancy {
  std::string table;
  std::uint32_t q = 0;
  std::string column;
  std::int64_t printed = 0;
  std::int64_t computed = 0;
  std::string note;
};

class KnownValues {
 public:
  explicit KnownValues(nlohmann::json data);
  KnownCell cell(std::string_view table, std::uint32_t q, std::string_view column) const;
  /// q values with a row in the table, ascending.
  std::vector<std::uint32_t> rows(std::string_view table) const;
  std::vector<std::string> columns(std::string_view table) const;
  std::optional<KnownDiscrepancy> discrepancy(std::string_view table, std::uint32_t q,
                                              std::string_view column) const;
  const std::vector<KnownDiscrepancy>& discrepancies() const { return discrepancies_; }
  const nlohmann::json& data() const { return data_; }

 private:
  nlohmann::json data_;
  std::vector<KnownDiscrepancy> discrepancies_;
};

/// The embedded data set.
const KnownValues& known_values();

}  // namespace genarcs

#endif  // GENARCS_BOUNDS_HPP
