#include "barth/bundles.hpp"

#include "barth/combinat.hpp"
#include "barth/errors.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace barth {

BundleSpec::BundleSpec(int ambient_dim, int rank, TruncatedClassPoly total_chern)
    : ambient_dim_(ambient_dim), rank_(rank), total_chern_(std::move(total_chern)) {
  if (ambient_dim < 1)
    throw DomainError(fmt::format("bundles live on P^n with n >= 1, got n = {}", ambient_dim));
  if (rank < 1)
    throw DomainError(fmt::format("bundle rank must be positive, got {}", rank));
  if (total_chern_.ambient_dim() != ambient_dim)
    throw DimensionMismatch(fmt::format("Chern class on P^{} for a bundle on P^{}",
                                        total_chern_.ambient_dim(), ambient_dim));
  if (total_chern_.coeffs()[0] != 1)
    throw DomainError("total Chern class must have constant term 1");
  if (total_chern_.degree() > rank)
    throw DomainError(fmt::format("rank {} bundle has nonzero c_{}", rank, total_chern_.degree()));
}

Rational BundleSpec::chern(int k) const {
  if (k < 0)
    throw IndexError(fmt::format("negative Chern index {}", k));
  if (k > ambient_dim_)
    return 0;
  return total_chern_.coeffs()[k];
}

BundleSpec line_bundle(int ambient_dim, long degree) {
  if (ambient_dim < 1)
    throw DomainError(fmt::format("O({}) needs n >= 1, got {}", degree, ambient_dim));
  return BundleSpec(ambient_dim, 1, TruncatedClassPoly::linear(ambient_dim, degree));
}

BundleSpec tangent_bundle(int ambient_dim) {
  if (ambient_dim < 1)
    throw DomainError(fmt::format("tangent bundle needs n >= 1, got {}", ambient_dim));
  // Euler sequence: c(TP^n) = (1+H)^{n+1}.
  const auto c = pow(TruncatedClassPoly::linear(ambient_dim, 1),
                     static_cast<unsigned>(ambient_dim + 1));
  return BundleSpec(ambient_dim, ambient_dim, c);
}

BundleSpec direct_sum(const BundleSpec& a, const BundleSpec& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(fmt::format("cannot sum bundles on P^{} and P^{}",
                                        a.ambient_dim(), b.ambient_dim()));
  return BundleSpec(a.ambient_dim(), a.rank() + b.rank(), a.total_chern() * b.total_chern());
}

BundleSpec twist(const BundleSpec& e, long t) {
  const int n = e.ambient_dim();
  const int r = e.rank();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= std::min(r, n); ++k) {
    Rational acc = 0;
    for (int i = 0; i <= k; ++i)
      acc += Rational(binomial(r - i, k - i) * int_pow(t, k - i)) * e.chern(i);
    c[k] = acc;
  }
  return BundleSpec(n, r, TruncatedClassPoly(n, std::move(c)));
}

ChernVector::ChernVector(int ambient_dim, std::vector<Integer> c)
    : ChernVector(ambient_dim, c, c.empty() ? Integer(0) : c.back()) {}

ChernVector::ChernVector(int ambient_dim, std::vector<Integer> c, Integer degree,
                         DegreeCheck check)
    : ambient_dim_(ambient_dim), c_(std::move(c)), degree_(std::move(degree)) {
  if (ambient_dim < 0)
    throw DomainError(fmt::format("ambient dimension {} is negative", ambient_dim));
  if (c_.size() < 2)
    throw ShapeError(fmt::format("Chern vector needs c_0..c_r with r >= 1, got {} entries",
                                 c_.size()));
  if (c_[0] != 1)
    throw ShapeError(fmt::format("c_0 must be 1, got {}", c_[0].get_str()));
  if (check == DegreeCheck::enforce && degree_ != c_.back())
    throw DomainError(fmt::format("degree {} differs from c_r = {}", degree_.get_str(),
                                  c_.back().get_str()));
}

Integer ChernVector::c(int i) const {
  if (i < 0)
    throw IndexError(fmt::format("negative Chern index {}", i));
  return i < static_cast<int>(c_.size()) ? c_[i] : Integer(0);
}

TruncatedClassPoly ChernVector::total_chern() const {
  return TruncatedClassPoly(ambient_dim_, {c_.begin(), c_.end()});
}

ChernData::ChernData(const BundleSpec& e)
    : ambient_dim_(e.ambient_dim()), top_vanishes_(e.rank() > e.ambient_dim()) {
  c_.reserve(static_cast<std::size_t>(e.rank()) + 1);
  for (int i = 0; i <= e.rank(); ++i) {
    const Rational ci = e.chern(i);
    if (!is_integral(ci))
      throw DomainError(fmt::format("c_{} = {} is not integral", i, to_string(ci)));
    c_.push_back(ci.get_num());
  }
}

ChernData::ChernData(const ChernVector& cv)
    : ambient_dim_(cv.ambient_dim()), c_(cv.c()), top_vanishes_(false) {}

Integer top_chern_twisted(const ChernData& e, long t) {
  if (e.top_class_vanishes())
    return 0;
  const int r = e.rank();
  Integer acc = 0;
  for (int i = 0; i <= r; ++i)
    acc += e.c()[i] * int_pow(t, r - i);
  return acc;
}

std::vector<Integer> twisted_chern(const ChernVector& cv, long t) {
  const int r = cv.codim();
  std::vector<Integer> out(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    for (int i = 0; i <= k; ++i)
      out[k] += binomial(r - i, k - i) * int_pow(t, k - i) * cv.c(i);
  }
  return out;
}

Integer segre_coefficient_formal(const ChernVector& cv, int k) {
  if (k < 0)
    return 0;
  const long n = cv.ambient_dim();
  Integer acc = 0;
  for (int i = 0; i <= std::min(cv.codim(), k); ++i)
    acc += sign_power(k - i) * binomial(n + k - i, k - i) * cv.c(i);
  return acc;
}

Integer segre_coefficient(const ChernVector& cv, int k) {
  if (k < 0 || k > cv.ambient_dim())
    throw IndexError(fmt::format("Segre index {} outside 0..{}", k, cv.ambient_dim()));
  return segre_coefficient_formal(cv, k);
}

} // namespace barth
