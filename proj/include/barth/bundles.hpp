#pragma once

#include "barth/exact_poly.hpp"
#include "barth/rational.hpp"

#include <vector>

namespace barth {

/// A vector bundle on P^n described by its rank and total Chern class.
class BundleSpec {
public:
  /// Throws DomainError if the Chern class does not start with 1, has terms
  /// above the rank, or lives on a different P^n.
  BundleSpec(int ambient_dim, int rank, TruncatedClassPoly total_chern);

  int ambient_dim() const noexcept { return ambient_dim_; }
  int rank() const noexcept { return rank_; }
  const TruncatedClassPoly& total_chern() const noexcept { return total_chern_; }

  /// c_k(E) as a rational multiple of H^k; zero for k above min(rank, n).
  Rational chern(int k) const;

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

private:
  int ambient_dim_;
  int rank_;
  TruncatedClassPoly total_chern_;
};

BundleSpec line_bundle(int ambient_dim, long degree);
BundleSpec tangent_bundle(int ambient_dim);
BundleSpec direct_sum(const BundleSpec& a, const BundleSpec& b);
/// E(t) = E (x) O(t): c_k(E(t)) = sum_i C(r-i, k-i) c_i(E) t^{k-i}.
BundleSpec twist(const BundleSpec& e, long t);

enum class DegreeCheck { enforce, forensic_override };

/// Integer Chern data c_i(N) = c_i H^i of a codimension r subvariety of P^n
/// in the Barth range, together with its degree d.
///
/// Self-intersection forces d = c_r; the constructor rejects anything else
/// unless DegreeCheck::forensic_override is passed.
class ChernVector {
public:
  /// d defaults to c_r.
  ChernVector(int ambient_dim, std::vector<Integer> c);
  ChernVector(int ambient_dim, std::vector<Integer> c, Integer degree,
              DegreeCheck check = DegreeCheck::enforce);

  int ambient_dim() const noexcept { return ambient_dim_; }
  int codim() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& c() const noexcept { return c_; }
  /// c_i, zero for i > r.
  Integer c(int i) const;
  const Integer& degree() const noexcept { return degree_; }
  bool degree_consistent() const { return degree_ == c_.back(); }

  /// c(N) as a class on P^n (terms above n dropped).
  TruncatedClassPoly total_chern() const;

  friend bool operator==(const ChernVector&, const ChernVector&) = default;

private:
  int ambient_dim_;
  std::vector<Integer> c_;
  Integer degree_;
};

/// The view shared by bundles and abstract normal data: rank r and integer
/// coefficients c_0..c_r on a given P^n. Implicitly built from either.
class ChernData {
public:
  ChernData(const BundleSpec& e);
  ChernData(const ChernVector& cv);

  int ambient_dim() const noexcept { return ambient_dim_; }
  int rank() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& c() const noexcept { return c_; }
  /// True when H^r = 0 on the ambient space, so every rank-r top class dies.
  bool top_class_vanishes() const noexcept { return top_vanishes_; }

private:
  int ambient_dim_;
  std::vector<Integer> c_;
  bool top_vanishes_;
};

/// Coefficient of H^r in c_r(E(t)), i.e. sum_i c_i t^{r-i}.
Integer top_chern_twisted(const ChernData& e, long t);

/// c_0..c_r of N(t) under the rank-r twist rule.
std::vector<Integer> twisted_chern(const ChernVector& cv, long t);

/// sigma_k with s_k(X) = sigma_k H^k: the H^k coefficient of
/// (1+H)^{-(n+1)} c(N). Throws IndexError unless 0 <= k <= n.
Integer segre_coefficient(const ChernVector& cv, int k);

/// Same expansion without the k <= n guard; used where a formula is
/// evaluated as a formal power series in H.
Integer segre_coefficient_formal(const ChernVector& cv, int k);

} // namespace barth
