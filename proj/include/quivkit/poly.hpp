#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "quivkit/field.hpp"

namespace quivkit {

// Dense univariate polynomial, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree -1.
template <Field F>
class Poly {
 public:
  using value_type = typename F::value_type;

  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, value_type v) { return Poly(field, {std::move(v)}); }
  static Poly x(const F& field) { return Poly(field, {field.zero(), field.one()}); }
  static Poly monomial(const F& field, int deg, value_type v) {
    std::vector<value_type> c(static_cast<std::size_t>(deg) + 1, field.zero());
    c.back() = std::move(v);
    return Poly(field, std::move(c));
  }

  const F& field() const { return field_; }
  const std::vector<value_type>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  value_type coeff(int k) const {
    if (k < 0 || k > degree()) return field_.zero();
    return c_[static_cast<std::size_t>(k)];
  }
  value_type lead() const { return c_.empty() ? field_.zero() : c_.back(); }

  Poly operator+(const Poly& o) const {
    std::vector<value_type> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = field_.add(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
    return Poly(field_, std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<value_type> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = field_.sub(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
    return Poly(field_, std::move(r));
  }
  Poly operator-() const {
    std::vector<value_type> r = c_;
    for (auto& v : r) v = field_.neg(v);
    return Poly(field_, std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<value_type> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(r));
  }
  Poly scale(const value_type& s) const {
    std::vector<value_type> r = c_;
    for (auto& v : r) v = field_.mul(v, s);
    return Poly(field_, std::move(r));
  }
  Poly monic() const { return is_zero() ? *this : scale(field_.inv(lead())); }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!field_.equal(c_[k], o.c_[k])) return false;
    return true;
  }

  // (quotient, remainder)
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) fail(ErrorKind::internal, "polynomial division by zero");
    std::vector<value_type> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {Poly(field_), *this};
    std::vector<value_type> q(static_cast<std::size_t>(degree() - dd) + 1, field_.zero());
    value_type li = field_.inv(d.lead());
    for (int k = degree(); k >= dd; --k) {
      value_type t = field_.mul(rem[static_cast<std::size_t>(k)], li);
      q[static_cast<std::size_t>(k - dd)] = t;
      if (field_.is_zero(t)) continue;
      for (int i = 0; i <= dd; ++i) {
        auto& slot = rem[static_cast<std::size_t>(k - dd + i)];
        slot = field_.sub(slot, field_.mul(t, d.c_[static_cast<std::size_t>(i)]));
      }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(field_, std::move(q)), Poly(field_, std::move(rem))};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<value_type> r(c_.size() - 1, field_.zero());
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = field_.mul(field_.from_int(static_cast<long long>(k)), c_[k]);
    return Poly(field_, std::move(r));
  }

  value_type eval(const value_type& t) const {
    value_type acc = field_.zero();
    for (std::size_t k = c_.size(); k-- > 0;) acc = field_.add(field_.mul(acc, t), c_[k]);
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const value_type& v = c_[static_cast<std::size_t>(k)];
      if (field_.is_zero(v)) continue;
      std::string s = field_.to_string(v);
      bool neg = !s.empty() && s[0] == '-';
      if (neg) s.erase(s.begin());
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      if (k == 0) {
        out += s;
        continue;
      }
      if (s != "1") out += s + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  // Accepts sums of terms like "3", "-1/2*x^3", "x", "2x^2".
  static Poly parse(const F& field, std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(ErrorKind::parse, "empty polynomial");
    Poly acc(field);
    std::size_t pos = 0;
    while (pos < s.size()) {
      bool neg = false;
      if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
      }
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') {
        if (s[end] == '^') ++end;  // exponent digits follow
        ++end;
      }
      std::string term = s.substr(pos, end - pos);
      pos = end;
      if (term.empty()) fail(ErrorKind::parse, "bad polynomial '" + std::string(text) + "'");
      auto xp = term.find('x');
      value_type coef = field.one();
      int deg = 0;
      if (xp == std::string::npos) {
        coef = field.parse(term);
      } else {
        std::string cs = term.substr(0, xp);
        if (!cs.empty() && cs.back() == '*') cs.pop_back();
        if (!cs.empty()) coef = field.parse(cs);
        std::string rest = term.substr(xp + 1);
        if (rest.empty()) {
          deg = 1;
        } else {
          if (rest[0] != '^' || rest.size() < 2) fail(ErrorKind::parse, "bad exponent in '" + term + "'");
          for (std::size_t k = 1; k < rest.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(rest[k]))) fail(ErrorKind::parse, "bad exponent in '" + term + "'");
          deg = std::stoi(rest.substr(1));
        }
      }
      if (neg) coef = field.neg(coef);
      acc = acc + monomial(field, deg, coef);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<value_type> c_;
};

template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  const F& K = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(K, K.one()), s1(K);
  Poly<F> t0(K), t1 = Poly<F>::constant(K, K.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = K.inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

template <Field F, class Exp>
Poly<F> powmod(Poly<F> base, Exp exp, const Poly<F>& mod) {
  const F& K = base.field();
  Poly<F> result = Poly<F>::constant(K, K.one()) % mod;
  base = base % mod;
  while (exp > 0) {
    if ((exp & 1) != 0) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace quivkit
