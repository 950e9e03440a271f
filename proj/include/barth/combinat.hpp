#pragma once

#include "barth/rational.hpp"

#include <utility>

namespace barth {

/// Exact binomial coefficient C(top, bottom). Zero when bottom < 0 or
/// bottom > top. Throws DomainError for a negative top argument.
Integer binomial(long top, long bottom);

/// Dimension of the i-th symmetric power of a p-dimensional space,
/// C(p-1+i, i), with the p = 0 case giving [i == 0].
Integer symmetric_power_dim(long p, long i);

/// Both sides of C(l, t) = sum_{i=0}^{t} (-1)^i C(l+p, t-i) dim S^i(C^p).
std::pair<Integer, Integer> lemma51_first_lhs_rhs(long l, long p, long t);

/// sum_{i=0}^{t} (-1)^i C(n, t-i) C(n+1+i, i). Its value is (-1)^t (t+1),
/// not (-1)^t.
Integer lemma51_second_printed(long n, long t);

/// sum_{i=0}^{t} (-1)^i C(n, t-i) C(n+i, i); equals (-1)^t.
Integer lemma51_second_corrected(long n, long t);

} // namespace barth
