#pragma once

// Exact scalar fields. A field is a small value object that owns the
// arithmetic; elements are plain values (mpq_class, uint64_t, ...) that only
// make sense together with the field that produced them. Containers such as
// Matrix<F> carry their field and refuse to mix fields.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "quivkit/error.hpp"

namespace quivkit {

template <class F>
concept Field = std::equality_comparable<F> &&
    requires(const F& f, const typename F::value_type& a, const typename F::value_type& b, long long n,
             const mpq_class& q, std::string_view s) {
      typename F::value_type;
      { f.zero() } -> std::same_as<typename F::value_type>;
      { f.one() } -> std::same_as<typename F::value_type>;
      { f.from_int(n) } -> std::same_as<typename F::value_type>;
      { f.from_rational(q) } -> std::same_as<typename F::value_type>;
      { f.add(a, b) } -> std::same_as<typename F::value_type>;
      { f.sub(a, b) } -> std::same_as<typename F::value_type>;
      { f.mul(a, b) } -> std::same_as<typename F::value_type>;
      { f.neg(a) } -> std::same_as<typename F::value_type>;
      { f.inv(a) } -> std::same_as<typename F::value_type>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.equal(a, b) } -> std::same_as<bool>;
      { f.to_string(a) } -> std::same_as<std::string>;
      { f.parse(s) } -> std::same_as<typename F::value_type>;
      { f.tag() } -> std::same_as<std::string>;
      { f.characteristic() } -> std::same_as<std::uint64_t>;
    };

inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) fail(ErrorKind::parse, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(ErrorKind::parse, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) fail(ErrorKind::parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const { return mpq_class(mpz_class(std::to_string(n))); }
  value_type from_rational(const mpq_class& q) const { return q; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) fail(ErrorKind::internal, "inverse of zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return rational_to_string(a); }
  value_type parse(std::string_view s) const { return parse_rational(s); }
  std::string tag() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }

  bool operator==(const RationalField&) const = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Z/pZ for a prime p < 2^62.
class PrimeField {
 public:
  using value_type = std::uint64_t;

  static constexpr std::uint64_t max_modulus = (1ULL << 62);

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= max_modulus || !is_prime(p)) fail(ErrorKind::parse, "modulus " + std::to_string(p) + " is not a supported prime");
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<value_type>(r);
  }
  value_type from_rational(const mpq_class& q) const {
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p_);
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p_);
    if (den == 0) fail(ErrorKind::parse, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
    return detail::mulmod(num, inv(den), p_);
  }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return detail::mulmod(a, b, p_); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) fail(ErrorKind::internal, "inverse of zero");
    return detail::powmod(a, p_ - 2, p_);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(std::string_view s) const { return from_rational(parse_rational(s)); }
  std::string tag() const { return "Fp:" + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }

  /// Elements enumerate as 0, 1, ..., p-1.
  std::uint64_t size() const { return p_; }
  value_type element(std::uint64_t index) const { return index % p_; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// Exact complex parameter with rational real and imaginary parts.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  bool operator==(const GaussianRational&) const = default;
};

template <Field F>
typename F::value_type pow(const F& field, typename F::value_type base, std::uint64_t exp) {
  auto result = field.one();
  while (exp > 0) {
    if (exp & 1U) result = field.mul(result, base);
    base = field.mul(base, base);
    exp >>= 1U;
  }
  return result;
}

}  // namespace quivkit
