#pragma once

#include "barth/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace barth {

/// An element of Q[H]/(H^{n+1}), the rational cohomology of P^n.
///
/// Coefficients are stored densely: index k holds the coefficient of H^k,
/// and there are always exactly n+1 of them. Every constructor and
/// operation drops whatever would land above degree n.
class TruncatedClassPoly {
public:
  /// The zero class on P^n.
  explicit TruncatedClassPoly(int ambient_dim);

  /// Coefficients beyond degree n are discarded; missing ones are zero.
  TruncatedClassPoly(int ambient_dim, std::vector<Rational> coeffs);

  static TruncatedClassPoly constant(int ambient_dim, const Rational& value);
  static TruncatedClassPoly one(int ambient_dim) { return constant(ambient_dim, 1); }
  /// value * H^degree (zero when degree > n).
  static TruncatedClassPoly monomial(int ambient_dim, int degree, const Rational& value);
  /// 1 + a H.
  static TruncatedClassPoly linear(int ambient_dim, const Rational& a);

  int ambient_dim() const noexcept { return ambient_dim_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of H^k. Throws IndexError unless 0 <= k <= n.
  const Rational& coefficient(int k) const;

  /// Highest k with a nonzero coefficient, or -1 for the zero class.
  int degree() const;
  bool is_zero() const;

  friend bool operator==(const TruncatedClassPoly&, const TruncatedClassPoly&) = default;

private:
  int ambient_dim_;
  std::vector<Rational> coeffs_;
};

TruncatedClassPoly operator+(const TruncatedClassPoly& a, const TruncatedClassPoly& b);
TruncatedClassPoly operator-(const TruncatedClassPoly& a, const TruncatedClassPoly& b);
TruncatedClassPoly operator-(const TruncatedClassPoly& a);
TruncatedClassPoly operator*(const TruncatedClassPoly& a, const TruncatedClassPoly& b);
TruncatedClassPoly operator*(const Rational& s, const TruncatedClassPoly& a);

TruncatedClassPoly pow(const TruncatedClassPoly& a, unsigned exponent);

/// Multiplicative inverse in the truncated ring. Throws NonUnitError when the
/// constant term vanishes.
TruncatedClassPoly invert_unit(const TruncatedClassPoly& a);

/// Drops coefficients above degree new_dim (new_dim <= ambient_dim) or pads
/// with zeros.
TruncatedClassPoly reembed(const TruncatedClassPoly& a, int new_dim);

/// Human-readable form, e.g. "1+3H+3H^2".
std::string to_string(const TruncatedClassPoly& a);

} // namespace barth
