#include "barth/bundles.hpp"
#include "barth/errors.hpp"
#include "barth/normality.hpp"

#include <doctest.h>

using namespace barth;

namespace {

BundleSpec split(int n, std::vector<long> degrees) {
  BundleSpec e = line_bundle(n, degrees.front());
  for (std::size_t i = 1; i < degrees.size(); ++i)
    e = direct_sum(e, line_bundle(n, degrees[i]));
  return e;
}

const Hypothesis& find(const Verdict& v, std::string_view name) {
  for (const auto& h : v.hypotheses)
    if (h.name == name)
      return h;
  FAIL("no hypothesis named " << name);
  return v.hypotheses.front();
}

} // namespace

TEST_CASE("general j-normality criterion") {
  const auto holds = check_jnormal_general(16, 2, 2, true);
  CHECK(holds.outcome == Outcome::holds);
  CHECK(find(holds, "secant-span").lhs == 12);
  CHECK(find(holds, "secant-span").rhs == 14);
  CHECK(find(holds, "barth-intersection").lhs == 15);
  CHECK(find(holds, "barth-intersection").rhs == 15);
  CHECK(check_jnormal_general(15, 2, 2, true).outcome == Outcome::fails);
  CHECK(check_jnormal_general(100, 2, 2, false).outcome == Outcome::inapplicable);
  CHECK_THROWS_AS(check_jnormal_general(0, 2, 2, true), DomainError);
  CHECK_THROWS_AS(check_jnormal_general(5, 2, -1, true), DomainError);
}

TEST_CASE("j-normality of zero loci") {
  const auto v = check_jnormal_bundle(split(18, {3, 3}), 2);
  CHECK(v.outcome == Outcome::holds);
  CHECK(find(v, "top-chern-twist-1").lhs == 4);
  CHECK(find(v, "top-chern-twist-2").lhs == 1);
  CHECK(check_jnormal_bundle(split(18, {2, 2}), 2).outcome == Outcome::fails);
  CHECK(check_jnormal_bundle(split(10, {3, 3}), 2).outcome == Outcome::fails);
  CHECK(find(check_jnormal_bundle(split(10, {3, 3}), 2), "barth-intersection").lhs == 15);
}

TEST_CASE("quadratic normality") {
  CHECK(check_2normal(16, 2, ChernVector(18, {1, 6, 9})).outcome == Outcome::holds);
  CHECK(check_2normal(15, 2, ChernVector(17, {1, 6, 9})).outcome == Outcome::fails);
  CHECK(check_2normal(16, 2, ChernVector(18, {1, 4, 4})).outcome == Outcome::fails);
  CHECK_THROWS_AS(check_2normal(16, 3, ChernVector(18, {1, 4, 4})), DomainError);
}

TEST_CASE("Zak's linear normality") {
  CHECK(check_linear_normality_zak(8, 2).outcome == Outcome::holds);
  CHECK(check_linear_normality_zak(7, 2).outcome == Outcome::inapplicable);
  CHECK(check_linear_normality_zak(12, 3).outcome == Outcome::holds);
  CHECK_THROWS_AS(check_linear_normality_zak(2, 2), DomainError);
}

TEST_CASE("minimal ambient dimensions") {
  CHECK(ran_minimal_n(1) == 7);
  CHECK(ran_minimal_n(2) == 18);
  CHECK(ran_minimal_n(3) == 35);
  CHECK(thm11_minimal_n(2, 2) == 18);
  CHECK(thm11_minimal_n(2, 1) == 10);
  CHECK(thm11_minimal_n(3, 1) == 14);
}

TEST_CASE("the codimension-two bound recovers Ran's bound for j >= 2") {
  for (long j = 2; j <= 30; ++j)
    CHECK(thm11_minimal_n(2, j) == ran_minimal_n(j));
  CHECK(thm11_minimal_n(2, 1) != ran_minimal_n(1));
}

TEST_CASE("the minimal dimension is where the criterion starts to hold") {
  for (long r = 1; r <= 5; ++r)
    for (long j = 1; j <= 5; ++j) {
      const long n = thm11_minimal_n(r, j);
      CHECK(check_jnormal_general(n - r, r, j, true).outcome == Outcome::holds);
      if (n - r - 1 >= 1)
        CHECK(check_jnormal_general(n - r - 1, r, j, true).outcome == Outcome::fails);
      CHECK(thm11_minimal_n(r, j + 1) > n);
      CHECK(thm11_minimal_n(r + 1, j) > n);
    }
}

TEST_CASE("verdicts report every hypothesis") {
  for (long m = 1; m <= 40; ++m)
    for (long j = 1; j <= 3; ++j) {
      const auto v = check_jnormal_general(m, 2, j, m % 2 == 0);
      CHECK(v.hypotheses.size() == 3);
      CHECK_FALSE(v.citation.empty());
      bool all = true, gates = true;
      for (const auto& h : v.hypotheses) {
        if (!h.gate)
          CHECK(h.satisfied == (h.lhs <= h.rhs));
        all = all && h.satisfied;
        gates = gates && (h.satisfied || !h.gate);
      }
      const auto expected = !gates ? Outcome::inapplicable : all ? Outcome::holds : Outcome::fails;
      CHECK(v.outcome == expected);
    }
}

TEST_CASE("lines through a point of a hypersurface") {
  for (long n = 2; n <= 9; ++n)
    CHECK(lines_in_hypersurface_through_point(n, 1) == LinesThroughPoint{n - 2, 1});
  CHECK(lines_in_hypersurface_through_point(3, 2) == LinesThroughPoint{0, 2});
  CHECK(lines_in_hypersurface_through_point(4, 3) == LinesThroughPoint{0, 6});
  CHECK_THROWS_AS(lines_in_hypersurface_through_point(4, 4), DomainError);
}

TEST_CASE("coincident secant condition") {
  CHECK(gaffney_lazarsfeld_condition(10, 2, 5));
  CHECK_FALSE(gaffney_lazarsfeld_condition(10, 2, 4));
  CHECK(gaffney_lazarsfeld_condition(9, 3, 3));
}

TEST_CASE("outcome names") {
  CHECK(to_string(Outcome::holds) == "holds");
  CHECK(to_string(Outcome::fails) == "fails");
  CHECK(to_string(Outcome::inapplicable) == "inapplicable");
}
