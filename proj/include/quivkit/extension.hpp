#pragma once

#include <memory>
#include <type_traits>
#include <string>
#include <vector>

#include "quivkit/poly.hpp"

namespace quivkit {

// Simple extension Base[x]/(f) with f monic irreducible of degree >= 1.
// Elements are coefficient vectors of length deg(f) in the power basis.
// Irreducibility is the caller's responsibility (see factor.hpp for the
// checked constructor used when parsing).
template <Field Base>
class ExtensionField {
 public:
  using base_value = typename Base::value_type;
  using value_type = std::vector<base_value>;

  explicit ExtensionField(Poly<Base> modulus) : base_(modulus.field()), mod_(std::make_shared<Poly<Base>>(modulus.monic())) {
    if (mod_->degree() < 1) fail(ErrorKind::parse, "extension modulus must have positive degree");
  }

  const Base& base() const { return base_; }
  const Poly<Base>& modulus() const { return *mod_; }
  int degree() const { return mod_->degree(); }

  value_type zero() const { return value_type(static_cast<std::size_t>(degree()), base_.zero()); }
  value_type one() const { return embed(base_.one()); }
  value_type embed(const base_value& v) const {
    value_type r = zero();
    r[0] = v;
    return r;
  }
  // The class of x, i.e. the adjoined root.
  value_type generator() const { return reduce(Poly<Base>::x(base_)); }
  value_type from_int(long long n) const { return embed(base_.from_int(n)); }
  value_type from_rational(const mpq_class& q) const { return embed(base_.from_rational(q)); }
  value_type add(const value_type& a, const value_type& b) const {
    value_type r(a.size(), base_.zero());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = base_.add(a[k], b[k]);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r(a.size(), base_.zero());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = base_.sub(a[k], b[k]);
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r(a.size(), base_.zero());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = base_.neg(a[k]);
    return r;
  }
  value_type mul(const value_type& a, const value_type& b) const { return reduce(lift(a) * lift(b)); }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) fail(ErrorKind::internal, "inverse of zero");
    auto [g, s, t] = ext_gcd(lift(a), *mod_);
    if (g.degree() != 0) fail(ErrorKind::internal, "extension modulus " + mod_->to_string() + " is reducible");
    return reduce(s);
  }
  bool is_zero(const value_type& a) const {
    for (const auto& v : a)
      if (!base_.is_zero(v)) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!base_.equal(a[k], b[k])) return false;
    return true;
  }
  std::string to_string(const value_type& a) const {
    std::string s = lift(a).to_string();
    return s;
  }
  // Elements are written as polynomials in x, e.g. "1/2*x+3".
  value_type parse(std::string_view s) const { return reduce(Poly<Base>::parse(base_, s)); }
  std::string tag() const {
    if constexpr (std::is_same_v<Base, RationalField>) return "ext:" + mod_->to_string();
    else return "ext[" + base_.tag() + "]:" + mod_->to_string();
  }
  std::uint64_t characteristic() const { return base_.characteristic(); }

  Poly<Base> lift(const value_type& a) const { return Poly<Base>(base_, a); }
  value_type reduce(const Poly<Base>& p) const {
    Poly<Base> r = p % *mod_;
    value_type out = zero();
    for (int k = 0; k <= r.degree(); ++k) out[static_cast<std::size_t>(k)] = r.coeff(k);
    return out;
  }

  bool operator==(const ExtensionField& o) const { return base_ == o.base_ && *mod_ == *o.mod_; }

 private:
  Base base_;
  std::shared_ptr<const Poly<Base>> mod_;
};

}  // namespace quivkit
