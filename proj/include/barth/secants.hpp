#pragma once

#include "barth/bundles.hpp"
#include "barth/rational.hpp"

namespace barth {

/// A secant-locus degree together with the caveats that travel with it.
struct SecantDegree {
  Rational value;
  /// Zero class: either no secants, or a locus of smaller than expected
  /// dimension.
  bool degenerate = false;
  /// The virtual count is not an integer; the inputs are not geometric.
  bool non_integral = false;
};

/// Degree of the (j+1)-secant lines through a general point of a zero locus
/// of E: (1/(j+1)!) prod_{i=0}^{j} c_r(E(-i)).
SecantDegree multisecant_degree(const ChernData& e, int j);

/// Bisecants through a general point: (1/2) c_r(N) c_r(N(-1)).
Rational bisecant_degree(const ChernVector& cv);

/// Double-point route to c_r(N(-1)): d - c_{r-1} + c_{r-2} - ... with the
/// degree d standing in for c_r.
Rational double_point_expansion(const ChernVector& cv);

/// (1/2) c_r(N(-1)) c_r(N(-2)), the coefficient of H^{2r-2}.
Rational trisecant_closed(const ChernVector& cv);

/// (1/2) sum_{m,i=0}^{r} (-1)^{m+i} 2^{r-m} c_m c_i.
Rational trisecant_double_sum(const ChernVector& cv);

/// The (b) contribution of the trisecant formula, evaluated term by term from
/// its triple sum with Segre coefficients in place of Segre classes. Segre
/// indices above n are treated formally.
Rational goettsche_b_term(const ChernVector& cv);

/// The simplified double sum for (b):
/// sum_{m=0}^{r-1} sum_{i=0}^{2r-2-m} (-1)^{m+i} 2^{r-1-m} c_m c_i.
Rational goettsche_b_eq4(const ChernVector& cv);

/// (c) = d sum_{k=0}^{2r-2} C(n+r, k) sigma_{2r-2-k}. Requires 2r-2 <= n.
Rational goettsche_c_term(const ChernVector& cv);

/// Simplified (c): d c_{r-1} + d^2 (r-1).
Rational goettsche_c_eq5(const ChernVector& cv);

/// The (a) contribution implied by the other pieces:
/// trisecant_closed + (c) - (b), using the simplified (b) and (c).
/// Not an evaluation of any printed expression for (a).
Rational goettsche_a_derived(const ChernVector& cv);

} // namespace barth
