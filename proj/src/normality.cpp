#include "barth/normality.hpp"

#include "barth/errors.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace barth {

std::string_view to_string(Outcome o) {
  switch (o) {
  case Outcome::holds:
    return "holds";
  case Outcome::fails:
    return "fails";
  case Outcome::inapplicable:
    return "inapplicable";
  }
  return "?";
}

namespace {

void require_positive(std::string_view name, long value) {
  if (value < 1)
    throw DomainError(fmt::format("{} must be positive, got {}", name, value));
}

Hypothesis at_most(std::string name, std::string condition, long lhs, long rhs,
                   bool gate = false) {
  return {std::move(name), std::move(condition), lhs, rhs, lhs <= rhs, gate};
}

Hypothesis nonzero(std::string name, std::string condition, const Integer& value) {
  return {std::move(name), std::move(condition), Rational(value), 0, value != 0, false};
}

Verdict decide(std::vector<Hypothesis> hyps, std::string citation) {
  Verdict v{Outcome::holds, std::move(hyps), std::move(citation)};
  const bool gate_unmet = std::any_of(v.hypotheses.begin(), v.hypotheses.end(),
                                      [](const Hypothesis& h) { return h.gate && !h.satisfied; });
  const bool any_unmet = std::any_of(v.hypotheses.begin(), v.hypotheses.end(),
                                     [](const Hypothesis& h) { return !h.satisfied; });
  if (gate_unmet)
    v.outcome = Outcome::inapplicable;
  else if (any_unmet)
    v.outcome = Outcome::fails;
  return v;
}

std::vector<Hypothesis> secant_bounds(long m, long r, long j) {
  std::vector<Hypothesis> h;
  h.push_back(at_most("secant-span", "2(r+1)j <= m-r", 2 * (r + 1) * j, m - r));
  h.push_back(at_most("barth-intersection", "(j+1)((r+1)j-1) <= m-1",
                      (j + 1) * ((r + 1) * j - 1), m - 1));
  return h;
}

} // namespace

Verdict check_jnormal_general(long m, long r, long j, bool secants_nonempty) {
  require_positive("m", m);
  require_positive("r", r);
  require_positive("j", j);
  std::vector<Hypothesis> h;
  h.push_back({"secants-exist", fmt::format("Sigma_{} nonempty", j + 1),
               secants_nonempty ? 1 : 0, 1, secants_nonempty, true});
  for (auto& b : secant_bounds(m, r, j))
    h.push_back(std::move(b));
  return decide(std::move(h), "j-normality-from-secants");
}

Verdict check_jnormal_bundle(const BundleSpec& e, long j) {
  require_positive("j", j);
  const long r = e.rank();
  const long m = e.ambient_dim() - r;
  if (m < 1)
    throw DomainError(fmt::format("zero locus of a rank {} bundle on P^{} has dimension {}",
                                  r, e.ambient_dim(), m));
  std::vector<Hypothesis> h;
  h.push_back(nonzero("top-chern-untwisted", "c_r(E) != 0", top_chern_twisted(e, 0)));
  for (long i = 1; i <= j; ++i)
    h.push_back(nonzero(fmt::format("top-chern-twist-{}", i), fmt::format("c_r(E(-{})) != 0", i),
                        top_chern_twisted(e, -i)));
  for (auto& b : secant_bounds(m, r, j))
    h.push_back(std::move(b));
  return decide(std::move(h), "j-normality-for-zero-loci");
}

Verdict check_2normal(long m, long r, const ChernVector& cv) {
  require_positive("m", m);
  require_positive("r", r);
  if (r != cv.codim())
    throw DomainError(fmt::format("r = {} but the Chern vector has codimension {}", r,
                                  cv.codim()));
  std::vector<Hypothesis> h;
  h.push_back(nonzero("top-chern-twist-2", "c_r(N(-2)) != 0", top_chern_twisted(cv, -2)));
  h.push_back(at_most("codimension-bound", "6r <= m-4", 6 * r, m - 4));
  return decide(std::move(h), "quadratic-normality");
}

Verdict check_linear_normality_zak(long n, long r) {
  require_positive("r", r);
  if (n <= r)
    throw DomainError(fmt::format("need n > r, got n = {}, r = {}", n, r));
  std::vector<Hypothesis> h;
  h.push_back(at_most("barth-range", "4r <= n", 4 * r, n, true));
  return decide(std::move(h), "zak-linear-normality");
}

long ran_minimal_n(long j) {
  require_positive("j", j);
  return 3 * j * j + 2 * j + 2;
}

long thm11_minimal_n(long r, long j) {
  require_positive("r", r);
  require_positive("j", j);
  const long from_span = 2 * (r + 1) * j + r;
  const long from_intersection = (j + 1) * ((r + 1) * j - 1) + 1;
  return r + std::max(from_span, from_intersection);
}

LinesThroughPoint lines_in_hypersurface_through_point(long n, long j) {
  if (j < 1 || j > n - 1)
    throw DomainError(fmt::format("hypersurface degree j = {} outside 1..{}", j, n - 1));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j));
  return {n - 1 - j, fact};
}

bool gaffney_lazarsfeld_condition(long n, long r, long k) {
  require_positive("n", n);
  require_positive("r", r);
  require_positive("k", k);
  return r * k >= n;
}

} // namespace barth
