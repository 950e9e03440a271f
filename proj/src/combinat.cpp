#include "barth/combinat.hpp"

#include "barth/errors.hpp"

#include <fmt/format.h>

namespace barth {

Integer binomial(long top, long bottom) {
  if (top < 0)
    throw DomainError(fmt::format("binomial({}, {}): negative upper argument", top, bottom));
  if (bottom < 0 || bottom > top)
    return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return result;
}

Integer symmetric_power_dim(long p, long i) {
  if (p < 0 || i < 0)
    throw DomainError(fmt::format("dim S^{}(C^{}) undefined", i, p));
  if (p == 0)
    return i == 0 ? 1 : 0;
  return binomial(p - 1 + i, i);
}

std::pair<Integer, Integer> lemma51_first_lhs_rhs(long l, long p, long t) {
  if (l < 0 || p < 0 || t < 0)
    throw DomainError(fmt::format("lemma51_first({}, {}, {}): arguments must be nonnegative",
                                  l, p, t));
  Integer rhs = 0;
  for (long i = 0; i <= t; ++i) {
    Integer term = binomial(l + p, t - i) * symmetric_power_dim(p, i);
    rhs += sign_power(i) * term;
  }
  return {binomial(l, t), rhs};
}

namespace {

Integer alternating_sum(long n, long t, long shift) {
  if (n < 0 || t < 0)
    throw DomainError(fmt::format("arguments ({}, {}) must be nonnegative", n, t));
  Integer acc = 0;
  for (long i = 0; i <= t; ++i)
    acc += sign_power(i) * binomial(n, t - i) * binomial(n + shift + i, i);
  return acc;
}

} // namespace

Integer lemma51_second_printed(long n, long t) { return alternating_sum(n, t, 1); }

Integer lemma51_second_corrected(long n, long t) { return alternating_sum(n, t, 0); }

} // namespace barth
