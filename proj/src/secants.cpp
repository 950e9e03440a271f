#include "barth/secants.hpp"

#include "barth/combinat.hpp"
#include "barth/errors.hpp"

#include <fmt/format.h>

namespace barth {

namespace {

Integer factorial(long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

} // namespace

SecantDegree multisecant_degree(const ChernData& e, int j) {
  if (j < 0)
    throw DomainError(fmt::format("multisecant order j = {} must be nonnegative", j));
  Integer product = 1;
  for (long i = 0; i <= j && product != 0; ++i)
    product *= top_chern_twisted(e, -i);
  Rational value(product, factorial(j + 1));
  value.canonicalize();
  return {value, value == 0, !is_integral(value)};
}

Rational bisecant_degree(const ChernVector& cv) {
  Rational v(top_chern_twisted(cv, 0) * top_chern_twisted(cv, -1), 2);
  v.canonicalize();
  return v;
}

Rational double_point_expansion(const ChernVector& cv) {
  const int r = cv.codim();
  Integer acc = cv.degree();
  for (int i = 0; i < r; ++i)
    acc += sign_power(r - i) * cv.c(i);
  return Rational(acc);
}

Rational trisecant_closed(const ChernVector& cv) {
  Rational v(top_chern_twisted(cv, -1) * top_chern_twisted(cv, -2), 2);
  v.canonicalize();
  return v;
}

Rational trisecant_double_sum(const ChernVector& cv) {
  const int r = cv.codim();
  Integer acc = 0;
  for (int m = 0; m <= r; ++m) {
    for (int i = 0; i <= r; ++i)
      acc += sign_power(m + i) * int_pow(2, r - m) * cv.c(m) * cv.c(i);
  }
  Rational v(acc, 2);
  v.canonicalize();
  return v;
}

Rational goettsche_b_term(const ChernVector& cv) {
  const long n = cv.ambient_dim();
  const int r = cv.codim();
  if (n < 1)
    throw DomainError(fmt::format("(b) term needs n >= 1, got {}", n));
  const int top = 2 * r - 2;
  std::vector<Integer> sigma(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k)
    sigma[k] = segre_coefficient_formal(cv, k);

  Integer acc = 0;
  for (int k = 0; k <= top; ++k) {
    for (long t = 0; t <= n - 1; ++t) {
      if (k - t < 0)
        break;
      const Integer outer = binomial(n, t) * binomial(n + 1, k - t);
      if (outer == 0)
        continue;
      // Segre classes of negative index vanish, so the sum effectively
      // starts at max(r-t-1, 0); the power of two stays nonnegative.
      for (long j = std::max<long>(r - t - 1, 0); j <= top - k; ++j)
        acc += outer * int_pow(2, j + t - r + 1) * sigma[j] * sigma[top - k - j];
    }
  }
  return Rational(acc);
}

Rational goettsche_b_eq4(const ChernVector& cv) {
  const int r = cv.codim();
  Integer acc = 0;
  for (int m = 0; m <= r - 1; ++m) {
    for (int i = 0; i <= 2 * r - 2 - m; ++i)
      acc += sign_power(m + i) * int_pow(2, r - 1 - m) * cv.c(m) * cv.c(i);
  }
  return Rational(acc);
}

Rational goettsche_c_term(const ChernVector& cv) {
  const long n = cv.ambient_dim();
  const int r = cv.codim();
  const int top = 2 * r - 2;
  if (top > n)
    throw IndexError(fmt::format("(c) term needs Segre index {} but n = {}", top, n));
  Integer acc = 0;
  for (int k = 0; k <= top; ++k)
    acc += binomial(n + r, k) * segre_coefficient(cv, top - k);
  return Rational(cv.degree() * acc);
}

Rational goettsche_c_eq5(const ChernVector& cv) {
  const Integer& d = cv.degree();
  return Rational(d * cv.c(cv.codim() - 1) + d * d * (cv.codim() - 1));
}

Rational goettsche_a_derived(const ChernVector& cv) {
  return trisecant_closed(cv) + goettsche_c_eq5(cv) - goettsche_b_eq4(cv);
}

} // namespace barth
