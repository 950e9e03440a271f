#pragma once

#include "barth/bundles.hpp"
#include "barth/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace barth {

/// Shape of the cohomology ring of the (k+1)-fold fibre power of the blow-up
/// of P^n at a point, fibred over the P^{n-1} of lines through that point.
///
/// The ring is Q[D_1..D_f, L] / (D_i^2 + L D_i, L^n), where f = k+1 is the
/// number of factors, D_i is the exceptional class pulled back from the i-th
/// factor and L is the hyperplane class of the base P^{n-1}.
struct FiberShape {
  int ambient_dim;
  int factors;

  friend bool operator==(const FiberShape&, const FiberShape&) = default;
};

/// L^l_exponent * prod_{i in d_mask} D_{i+1}. In normal form every D appears
/// at most once and l_exponent < n.
struct Monomial {
  int l_exponent;
  std::uint32_t d_mask;

  int degree() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class FiberRingElement {
public:
  static constexpr int max_factors = 12;

  /// The zero element. Throws DomainError for n < 1 or a factor count
  /// outside 1..max_factors.
  explicit FiberRingElement(FiberShape shape);

  static FiberRingElement constant(FiberShape shape, const Rational& value);
  static FiberRingElement base_class(FiberShape shape);                  // L
  static FiberRingElement exceptional_class(FiberShape shape, int index); // D_index, 1-based
  /// Reduces a single monomial L^l * prod D^{e_i} (arbitrary exponents).
  static FiberRingElement monomial(FiberShape shape, int l_exponent,
                                   std::span<const int> d_exponents,
                                   const Rational& coefficient = 1);

  FiberShape shape() const noexcept { return shape_; }

  /// Nonzero terms in increasing monomial order.
  std::vector<std::pair<Monomial, Rational>> terms() const;
  Rational coefficient(Monomial m) const;
  bool is_zero() const;

  friend bool operator==(const FiberRingElement&, const FiberRingElement&) = default;

  friend FiberRingElement operator+(const FiberRingElement& a, const FiberRingElement& b);
  friend FiberRingElement operator-(const FiberRingElement& a, const FiberRingElement& b);
  friend FiberRingElement operator-(const FiberRingElement& a);
  friend FiberRingElement operator*(const FiberRingElement& a, const FiberRingElement& b);
  friend FiberRingElement operator*(const Rational& s, const FiberRingElement& a);

private:
  std::size_t slot(Monomial m) const;
  Monomial monomial_at(std::size_t slot) const;
  void require_same_shape(const FiberRingElement& other) const;

  FiberShape shape_;
  // Dense over normal-form monomials: slot = l_exponent * 2^factors + d_mask.
  std::vector<Rational> coeffs_;
};

FiberRingElement pow(const FiberRingElement& a, unsigned exponent);

/// H_i = D_i + L, the pullback of the hyperplane class of P^n along factor i.
FiberRingElement hyperplane_class(FiberShape shape, int i);

/// Delta_{i,j} = D_i + D_j + L, the locus where factors i and j coincide.
FiberRingElement diagonal_class(FiberShape shape, int i, int j);

/// Coefficient of the fundamental monomial L^{n-1} D_1 ... D_f.
Rational integrate(const FiberRingElement& x);

/// Renames D_i to D_{perm[i-1]+1}; perm must be a permutation of 0..f-1.
FiberRingElement relabel(const FiberRingElement& x, std::span<const int> perm);

/// c_{(k+1)r}(E^{(k+1)}) by iterating the exact-sequence recursion
///   c(E^{(s)}) = c(E^{(s-1)}) * c_r(q_s^* E (x) O(-Delta_{1,s} - ... - Delta_{s-1,s}))
/// from the single-factor base c_r(E) H_1^r.
FiberRingElement recursion_top_chern(const ChernData& e, int k);

/// c_r(E) c_r(E(-1)) ... c_r(E(-k)) H_1^r ... H_{k+1}^r.
FiberRingElement closed_form_top_chern(const ChernData& e, int k);

/// integrate(recursion * L^{n+k-(k+1)r}) / (k+1)!. Throws HypothesisError when
/// n + k < (k+1) r.
Rational secant_count_via_ring(const ChernData& e, int k);

std::string to_string(const FiberRingElement& x);

} // namespace barth
