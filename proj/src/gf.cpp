#include "genarcs/gf.hpp"

#include <charconv>
#include <stdexcept>

namespace genarcs {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    result *= base;
    if (result > (1ull << 32)) throw std::invalid_argument("field order overflow");
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  throw std::domain_error("no inverse mod p");
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - (factor * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

Poly encoding_to_poly(std::uint32_t value, std::uint32_t p, std::uint32_t r) {
  Poly digits(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    digits[i] = value % p;
    value /= p;
  }
  return digits;
}

std::uint32_t poly_to_encoding(const Poly& digits, std::uint32_t p, std::uint32_t r) {
  std::uint32_t value = 0;
  for (std::uint32_t i = r; i-- > 0;) value = value * p + (i < digits.size() ? digits[i] : 0);
  return value;
}

// Product of two encodings modulo the modulus, without tables.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const FieldSpec& spec) {
  const Poly pa = encoding_to_poly(a, spec.p, spec.r);
  const Poly pb = encoding_to_poly(b, spec.p, spec.r);
  Poly prod(2 * spec.r, 0);
  for (std::uint32_t i = 0; i < spec.r; ++i)
    for (std::uint32_t j = 0; j < spec.r; ++j)
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % spec.p;
  return poly_to_encoding(poly_mod(prod, spec.modulus, spec.p), spec.p, spec.r);
}

std::uint32_t slow_add(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t r) {
  if (p == 2) return a ^ b;
  std::uint32_t result = 0, scale = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    result += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return result;
}

std::uint32_t order_slow(std::uint32_t a, const FieldSpec& spec) {
  std::uint32_t x = a, n = 1;
  while (x != 1) {
    x = slow_mul(x, a, spec);
    ++n;
    if (n > spec.q) return 0;
  }
  return n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), h};
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::size_t degree = monic.size() - 1;
  if (degree == 0) return false;
  if (degree == 1) return true;
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly divisor = encoding_to_poly(low, p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

Field make_field(std::uint32_t p, std::uint32_t r, std::optional<std::vector<std::uint32_t>> modulus,
                 std::optional<std::uint32_t> alpha) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (r == 0) throw std::invalid_argument("extension degree must be at least 1");
  const std::uint32_t q = ipow(p, r);
  if (q > kMaxFieldOrder)
    throw std::invalid_argument("field order " + std::to_string(q) + " exceeds the table cap " +
                                std::to_string(kMaxFieldOrder));

  FieldSpec spec;
  spec.p = p;
  spec.r = r;
  spec.q = q;
  if (modulus) {
    if (modulus->size() != r + 1 || modulus->back() != 1)
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(r));
    for (auto c : *modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(p, *modulus)) throw std::invalid_argument("modulus is reducible");
    spec.modulus = *modulus;
  } else {
    for (std::uint32_t low = 0; low < q; ++low) {
      Poly candidate = encoding_to_poly(low, p, r);
      candidate.push_back(1);
      if (is_irreducible(p, candidate)) {
        spec.modulus = candidate;
        break;
      }
    }
  }

  if (q == 2) {
    spec.alpha = 1;
  } else if (alpha) {
    if (*alpha == 0 || *alpha >= q || order_slow(*alpha, spec) != q - 1)
      throw std::invalid_argument("alpha " + std::to_string(*alpha) + " is not a primitive element");
    spec.alpha = *alpha;
  } else {
    for (std::uint32_t a = 2; a < q; ++a) {
      if (order_slow(a, spec) == q - 1) {
        spec.alpha = a;
        break;
      }
    }
  }
  if (alpha && q == 2 && *alpha != 1) throw std::invalid_argument("alpha of GF(2) must be 1");

  Field field;
  field.spec_ = spec;
  field.log_table_.assign(q, 0);
  field.exp_table_.assign(2 * (q - 1), 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    field.exp_table_[k] = static_cast<std::uint16_t>(x);
    field.exp_table_[k + q - 1] = static_cast<std::uint16_t>(x);
    field.log_table_[x] = k;
    x = slow_mul(x, spec.alpha, spec);
  }
  if (x != 1) throw std::logic_error("alpha does not have order q-1");

  field.neg_table_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t n = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < r; ++i) {
      n += ((p - v % p) % p) * scale;
      v /= p;
      scale *= p;
    }
    field.neg_table_[a] = static_cast<std::uint16_t>(n);
  }
  field.inv_table_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a)
    field.inv_table_[a] = field.exp_table_[(q - 1 - field.log_table_[a]) % (q - 1)];
  if (q <= 256) {
    field.add_table_.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        field.add_table_[a * q + b] = static_cast<std::uint16_t>(slow_add(a, b, p, r));
  }
  return field;
}

Field make_field_of_order(std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pp->p, pp->h);
}

FieldElement Field::slow_add(FieldElement a, FieldElement b) const {
  return FieldElement{genarcs::slow_add(a.value(), b.value(), spec_.p, spec_.r)};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return FieldElement{inv_table_[a.value()]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const {
  if (n == 0) return one();
  if (a.is_zero()) return zero();
  return alpha_pow((static_cast<std::uint64_t>(log_table_[a.value()]) * (n % (spec_.q - 1))));
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("log of zero");
  return log_table_[a.value()];
}

std::uint32_t Field::order(FieldElement a) const {
  const std::uint32_t k = log(a);
  const std::uint32_t n = spec_.q - 1;
  std::uint32_t g = n, m = k;
  while (m != 0) {
    const std::uint32_t t = g % m;
    g = m;
    m = t;
  }
  return n / g;
}

std::vector<std::uint32_t> Field::digits(FieldElement a) const {
  return encoding_to_poly(a.value(), spec_.p, spec_.r);
}

std::string Field::format(FieldElement a) const {
  if (spec_.r == 1 || a.value() <= 1) return std::to_string(a.value());
  const std::uint32_t k = log(a);
  return k == 1 ? std::string("a") : "a^" + std::to_string(k);
}

FieldElement Field::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty field literal");

  const auto parse_int = [&](std::string_view digits) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw std::invalid_argument("bad field literal '" + std::string(text) + "'");
    return value;
  };

  std::string_view rest;
  if (text.front() == 'a') {
    rest = text.substr(1);
  } else if (text.starts_with("α")) {
    rest = text.substr(std::string_view("α").size());
  } else {
    const long long value = parse_int(text);
    if (spec_.r == 1) {
      const long long p = spec_.p;
      return FieldElement{static_cast<std::uint32_t>(((value % p) + p) % p)};
    }
    if (value < 0 || value >= static_cast<long long>(spec_.q))
      throw std::invalid_argument("encoding '" + std::string(text) + "' out of range");
    return FieldElement{static_cast<std::uint32_t>(value)};
  }
  if (rest.empty()) return alpha();
  if (rest.front() != '^') throw std::invalid_argument("bad field literal '" + std::string(text) + "'");
  const long long k = parse_int(rest.substr(1));
  if (k < 0) throw std::invalid_argument("negative exponent in '" + std::string(text) + "'");
  return alpha_pow(static_cast<std::uint64_t>(k));
}

std::vector<FieldElement> elements(const Field& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (std::uint32_t v = 0; v < field.q(); ++v) out.emplace_back(v);
  return out;
}

}  // namespace genarcs
