#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "space.hpp"

namespace ultratree {

namespace detail {

using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are exact below 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

/// |t|_p, kept in exponent form: zero, or p^(-exponent) for t = p^exponent * m/n.
struct PAdicNorm {
  std::uint64_t prime = 2;
  std::optional<std::int64_t> exponent;

  bool is_zero() const { return !exponent.has_value(); }

  Rational value() const {
    if (!exponent) return Rational(0);
    const BigInt power = boost::multiprecision::pow(BigInt(prime), static_cast<unsigned>(*exponent < 0 ? -*exponent : *exponent));
    return *exponent >= 0 ? Rational(BigInt(1), power) : Rational(power, BigInt(1));
  }

  friend bool operator==(const PAdicNorm&, const PAdicNorm&) = default;
};

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

inline PAdicNorm valuation(const Rational& t, std::uint64_t p) {
  require_prime(p);
  PAdicNorm out{p, std::nullopt};
  if (t.is_zero()) return out;
  const BigInt prime(p);
  std::int64_t gamma = 0;
  BigInt num = boost::multiprecision::abs(t.numerator());
  BigInt den = t.denominator();
  while (num % prime == 0) {
    num /= prime;
    ++gamma;
  }
  while (den % prime == 0) {
    den /= prime;
    --gamma;
  }
  out.exponent = gamma;
  return out;
}

/// d_p(t, w) = |t - w|_p.
inline Rational dp(const Rational& t, const Rational& w, std::uint64_t p) { return valuation(t - w, p).value(); }

/// d+(a, b) = max(a, b) when a != b, else 0.
inline Rational dplus(const Rational& a, const Rational& b) {
  if (a.sign() < 0 || b.sign() < 0)
    throw Error(ErrorKind::NegativeInput, "d+ is defined on non-negative values only");
  if (a == b) return Rational(0);
  return std::max(a, b);
}

struct PAdicMetric {
  std::uint64_t prime;
};
struct DPlusMetric {};
using SampleMetric = std::variant<PAdicMetric, DPlusMetric>;

/// Finite subspace of (Q, d_p) or (R+, d+) on the given values; points are
/// named by the values' rational strings.
inline FiniteUltrametricSpace sample_space(const std::vector<Rational>& values, const SampleMetric& metric) {
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "a sample needs at least one value");
  if (const auto* pm = std::get_if<PAdicMetric>(&metric)) require_prime(pm->prime);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::holds_alternative<DPlusMetric>(metric) && values[i].sign() < 0)
      throw Error(ErrorKind::NegativeInput, "value " + values[i].str() + " is negative");
    for (std::size_t j = 0; j < i; ++j)
      if (values[j] == values[i]) throw Error(ErrorKind::DuplicateValue, "value " + values[i].str() + " repeats");
    ids.push_back(values[i].str());
  }
  const std::size_t n = values.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m[i][j] = m[j][i] = std::visit(
          [&](const auto& metric_kind) {
            if constexpr (std::is_same_v<std::decay_t<decltype(metric_kind)>, PAdicMetric>)
              return dp(values[i], values[j], metric_kind.prime);
            else
              return dplus(values[i], values[j]);
          },
          metric);
  return validate_ultrametric(std::move(ids), m);
}

}  // namespace ultratree
