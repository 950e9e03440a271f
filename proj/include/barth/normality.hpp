#pragma once

#include "barth/bundles.hpp"
#include "barth/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace barth {

/// These are sufficient criteria. `fails` means the criterion does not
/// certify normality; `inapplicable` means a gating hypothesis (one the
/// criterion is silent without) is unmet. Neither asserts non-normality.
enum class Outcome { holds, fails, inapplicable };

std::string_view to_string(Outcome o);

struct Hypothesis {
  std::string name;
  /// Human-readable condition, e.g. "2(r+1)j <= m-r".
  std::string condition;
  Rational lhs;
  Rational rhs;
  bool satisfied = false;
  /// An unmet gating hypothesis makes the verdict inapplicable rather than
  /// failed.
  bool gate = false;
};

struct Verdict {
  Outcome outcome = Outcome::inapplicable;
  std::vector<Hypothesis> hypotheses;
  std::string citation;
};

/// j-normality of a codimension r subvariety of P^{m+r} from the existence
/// of (j+1)-secants through a general point and two numerical bounds.
Verdict check_jnormal_general(long m, long r, long j, bool secants_nonempty);

/// The same criterion for a zero locus of E, with the secant hypothesis
/// replaced by nonvanishing of the twisted top Chern classes. Both the
/// i = 1..j range and the extra i = 0 factor are reported.
Verdict check_jnormal_bundle(const BundleSpec& e, long j);

/// Quadratic normality from c_r(N(-2)) != 0 and 6r <= m-4.
Verdict check_2normal(long m, long r, const ChernVector& cv);

/// Linear normality for n >= 4r; silent below that.
Verdict check_linear_normality_zak(long n, long r);

/// Ran's codimension-two bound 3j^2 + 2j + 2.
long ran_minimal_n(long j);

/// Smallest n = m + r meeting both numerical bounds of the secant criterion.
long thm11_minimal_n(long r, long j);

struct LinesThroughPoint {
  long dimension;
  Integer degree;
  friend bool operator==(const LinesThroughPoint&, const LinesThroughPoint&) = default;
};

/// Lines through a point of a general degree j hypersurface in P^n form a
/// complete intersection of dimension n-1-j and degree j!.
LinesThroughPoint lines_in_hypersurface_through_point(long n, long j);

/// r k >= n: the numerical hypothesis under which a nonempty family of
/// k-secants through a point contains one where all k points coincide.
bool gaffney_lazarsfeld_condition(long n, long r, long k);

} // namespace barth
