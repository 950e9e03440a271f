#include "barth/exact_poly.hpp"

#include "barth/errors.hpp"

#include <fmt/format.h>

namespace barth {

namespace {

void require_same_dim(const TruncatedClassPoly& a, const TruncatedClassPoly& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(fmt::format("classes live on P^{} and P^{}",
                                        a.ambient_dim(), b.ambient_dim()));
}

} // namespace

TruncatedClassPoly::TruncatedClassPoly(int ambient_dim)
    : TruncatedClassPoly(ambient_dim, {}) {}

TruncatedClassPoly::TruncatedClassPoly(int ambient_dim, std::vector<Rational> coeffs)
    : ambient_dim_(ambient_dim), coeffs_(std::move(coeffs)) {
  if (ambient_dim < 0)
    throw DomainError(fmt::format("ambient dimension {} is negative", ambient_dim));
  coeffs_.resize(static_cast<std::size_t>(ambient_dim) + 1);
}

TruncatedClassPoly TruncatedClassPoly::constant(int ambient_dim, const Rational& value) {
  return TruncatedClassPoly(ambient_dim, {value});
}

TruncatedClassPoly TruncatedClassPoly::monomial(int ambient_dim, int degree,
                                                const Rational& value) {
  TruncatedClassPoly p(ambient_dim);
  if (degree < 0)
    throw IndexError(fmt::format("negative degree {}", degree));
  if (degree <= ambient_dim)
    p.coeffs_[degree] = value;
  return p;
}

TruncatedClassPoly TruncatedClassPoly::linear(int ambient_dim, const Rational& a) {
  return TruncatedClassPoly(ambient_dim, {1, a});
}

const Rational& TruncatedClassPoly::coefficient(int k) const {
  if (k < 0 || k > ambient_dim_)
    throw IndexError(fmt::format("coefficient index {} outside 0..{}", k, ambient_dim_));
  return coeffs_[k];
}

int TruncatedClassPoly::degree() const {
  for (int k = ambient_dim_; k >= 0; --k) {
    if (coeffs_[k] != 0)
      return k;
  }
  return -1;
}

bool TruncatedClassPoly::is_zero() const { return degree() < 0; }

TruncatedClassPoly operator+(const TruncatedClassPoly& a, const TruncatedClassPoly& b) {
  require_same_dim(a, b);
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] += b.coeffs()[k];
  return TruncatedClassPoly(a.ambient_dim(), std::move(c));
}

TruncatedClassPoly operator-(const TruncatedClassPoly& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c)
    x = -x;
  return TruncatedClassPoly(a.ambient_dim(), std::move(c));
}

TruncatedClassPoly operator-(const TruncatedClassPoly& a, const TruncatedClassPoly& b) {
  return a + (-b);
}

TruncatedClassPoly operator*(const TruncatedClassPoly& a, const TruncatedClassPoly& b) {
  require_same_dim(a, b);
  const int n = a.ambient_dim();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs()[i] == 0)
      continue;
    for (int j = 0; i + j <= n; ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return TruncatedClassPoly(n, std::move(c));
}

TruncatedClassPoly operator*(const Rational& s, const TruncatedClassPoly& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c)
    x *= s;
  return TruncatedClassPoly(a.ambient_dim(), std::move(c));
}

TruncatedClassPoly pow(const TruncatedClassPoly& a, unsigned exponent) {
  TruncatedClassPoly result = TruncatedClassPoly::one(a.ambient_dim());
  TruncatedClassPoly base = a;
  while (exponent != 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1;
    if (exponent != 0)
      base = base * base;
  }
  return result;
}

TruncatedClassPoly invert_unit(const TruncatedClassPoly& a) {
  const auto& c = a.coeffs();
  if (c[0] == 0)
    throw NonUnitError("class with vanishing constant term is not invertible");
  const int n = a.ambient_dim();
  // b_0 = 1/a_0, b_k = -(sum_{i=1..k} a_i b_{k-i}) / a_0
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1 / c[0];
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i)
      acc += c[i] * b[k - i];
    b[k] = -acc / c[0];
  }
  return TruncatedClassPoly(n, std::move(b));
}

TruncatedClassPoly reembed(const TruncatedClassPoly& a, int new_dim) {
  return TruncatedClassPoly(new_dim, {a.coeffs().begin(), a.coeffs().end()});
}

std::string to_string(const TruncatedClassPoly& a) {
  std::string out;
  for (int k = 0; k <= a.ambient_dim(); ++k) {
    const Rational& c = a.coeffs()[k];
    if (c == 0)
      continue;
    std::string magnitude = to_string(Rational(abs(c)));
    if (!out.empty() || c < 0)
      out += c < 0 ? "-" : "+";
    if (k == 0) {
      out += magnitude;
      continue;
    }
    if (magnitude != "1")
      out += magnitude.find('/') == std::string::npos ? magnitude : "(" + magnitude + ")";
    out += k == 1 ? "H" : fmt::format("H^{}", k);
  }
  return out.empty() ? "0" : out;
}

} // namespace barth
