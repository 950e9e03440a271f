#include "barth/fiber_ring.hpp"

#include "barth/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <fmt/format.h>

namespace barth {

int Monomial::degree() const { return l_exponent + std::popcount(d_mask); }

FiberRingElement::FiberRingElement(FiberShape shape) : shape_(shape) {
  if (shape.ambient_dim < 1)
    throw DomainError(fmt::format("fibre ring needs n >= 1, got {}", shape.ambient_dim));
  if (shape.factors < 1 || shape.factors > max_factors)
    throw DomainError(fmt::format("fibre power with {} factors outside 1..{}", shape.factors,
                                  max_factors));
  coeffs_.resize(static_cast<std::size_t>(shape.ambient_dim) << shape.factors);
}

std::size_t FiberRingElement::slot(Monomial m) const {
  return (static_cast<std::size_t>(m.l_exponent) << shape_.factors) | m.d_mask;
}

Monomial FiberRingElement::monomial_at(std::size_t s) const {
  const std::size_t mask = (std::size_t{1} << shape_.factors) - 1;
  return {static_cast<int>(s >> shape_.factors), static_cast<std::uint32_t>(s & mask)};
}

void FiberRingElement::require_same_shape(const FiberRingElement& other) const {
  if (shape_ != other.shape_)
    throw DimensionMismatch(fmt::format("fibre ring shapes (n={}, f={}) and (n={}, f={})",
                                        shape_.ambient_dim, shape_.factors,
                                        other.shape_.ambient_dim, other.shape_.factors));
}

FiberRingElement FiberRingElement::constant(FiberShape shape, const Rational& value) {
  FiberRingElement x(shape);
  x.coeffs_[0] = value;
  return x;
}

FiberRingElement FiberRingElement::base_class(FiberShape shape) {
  FiberRingElement x(shape);
  if (shape.ambient_dim > 1)
    x.coeffs_[x.slot({1, 0})] = 1;
  return x;
}

FiberRingElement FiberRingElement::exceptional_class(FiberShape shape, int index) {
  FiberRingElement x(shape);
  if (index < 1 || index > shape.factors)
    throw IndexError(fmt::format("D_{} outside 1..{}", index, shape.factors));
  x.coeffs_[x.slot({0, std::uint32_t{1} << (index - 1)})] = 1;
  return x;
}

FiberRingElement FiberRingElement::monomial(FiberShape shape, int l_exponent,
                                            std::span<const int> d_exponents,
                                            const Rational& coefficient) {
  FiberRingElement x(shape);
  if (l_exponent < 0)
    throw DomainError("negative exponent of L");
  if (static_cast<int>(d_exponents.size()) > shape.factors)
    throw IndexError(fmt::format("{} D-exponents for {} factors", d_exponents.size(),
                                 shape.factors));
  // D^e = (-L)^{e-1} D for e >= 1.
  int l = l_exponent;
  int sign = 1;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < d_exponents.size(); ++i) {
    const int e = d_exponents[i];
    if (e < 0)
      throw DomainError("negative exponent of D");
    if (e == 0)
      continue;
    mask |= std::uint32_t{1} << i;
    l += e - 1;
    sign *= sign_power(e - 1);
  }
  if (l < shape.ambient_dim)
    x.coeffs_[x.slot({l, mask})] = sign * coefficient;
  return x;
}

std::vector<std::pair<Monomial, Rational>> FiberRingElement::terms() const {
  std::vector<std::pair<Monomial, Rational>> out;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s] != 0)
      out.emplace_back(monomial_at(s), coeffs_[s]);
  }
  return out;
}

Rational FiberRingElement::coefficient(Monomial m) const {
  if (m.l_exponent < 0 || m.l_exponent >= shape_.ambient_dim ||
      m.d_mask >= (std::uint32_t{1} << shape_.factors))
    return 0;
  return coeffs_[slot(m)];
}

bool FiberRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

FiberRingElement operator+(const FiberRingElement& a, const FiberRingElement& b) {
  a.require_same_shape(b);
  FiberRingElement out = a;
  for (std::size_t s = 0; s < out.coeffs_.size(); ++s)
    out.coeffs_[s] += b.coeffs_[s];
  return out;
}

FiberRingElement operator-(const FiberRingElement& a) {
  FiberRingElement out = a;
  for (auto& c : out.coeffs_)
    c = -c;
  return out;
}

FiberRingElement operator-(const FiberRingElement& a, const FiberRingElement& b) {
  return a + (-b);
}

FiberRingElement operator*(const Rational& s, const FiberRingElement& a) {
  FiberRingElement out = a;
  for (auto& c : out.coeffs_)
    c *= s;
  return out;
}

FiberRingElement operator*(const FiberRingElement& a, const FiberRingElement& b) {
  a.require_same_shape(b);
  const int n = a.shape_.ambient_dim;
  FiberRingElement out(a.shape_);
  std::vector<std::size_t> rhs;
  for (std::size_t s = 0; s < b.coeffs_.size(); ++s) {
    if (b.coeffs_[s] != 0)
      rhs.push_back(s);
  }
  Rational product;
  for (std::size_t sa = 0; sa < a.coeffs_.size(); ++sa) {
    if (a.coeffs_[sa] == 0)
      continue;
    const Monomial ma = a.monomial_at(sa);
    for (const std::size_t sb : rhs) {
      const Monomial mb = b.monomial_at(sb);
      // Each shared D_i contributes D_i^2 = -L D_i.
      const int overlap = std::popcount(ma.d_mask & mb.d_mask);
      const int l = ma.l_exponent + mb.l_exponent + overlap;
      if (l >= n)
        continue;
      product = a.coeffs_[sa] * b.coeffs_[sb];
      auto& target = out.coeffs_[out.slot({l, ma.d_mask | mb.d_mask})];
      if (overlap % 2 == 0)
        target += product;
      else
        target -= product;
    }
  }
  return out;
}

FiberRingElement pow(const FiberRingElement& a, unsigned exponent) {
  FiberRingElement result = FiberRingElement::constant(a.shape(), 1);
  FiberRingElement base = a;
  while (exponent != 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1;
    if (exponent != 0)
      base = base * base;
  }
  return result;
}

FiberRingElement hyperplane_class(FiberShape shape, int i) {
  return FiberRingElement::exceptional_class(shape, i) + FiberRingElement::base_class(shape);
}

FiberRingElement diagonal_class(FiberShape shape, int i, int j) {
  if (i == j)
    throw IndexError(fmt::format("diagonal Delta_{{{},{}}} needs distinct factors", i, j));
  return FiberRingElement::exceptional_class(shape, i) +
         FiberRingElement::exceptional_class(shape, j) + FiberRingElement::base_class(shape);
}

Rational integrate(const FiberRingElement& x) {
  const FiberShape shape = x.shape();
  const std::uint32_t all = (std::uint32_t{1} << shape.factors) - 1;
  return x.coefficient({shape.ambient_dim - 1, all});
}

FiberRingElement relabel(const FiberRingElement& x, std::span<const int> perm) {
  const FiberShape shape = x.shape();
  if (static_cast<int>(perm.size()) != shape.factors)
    throw DomainError("relabelling must name every factor");
  std::vector<bool> seen(perm.size());
  for (int p : perm) {
    if (p < 0 || p >= shape.factors || seen[p])
      throw DomainError("relabelling is not a permutation");
    seen[p] = true;
  }
  FiberRingElement out(shape);
  for (const auto& [m, c] : x.terms()) {
    std::uint32_t mask = 0;
    for (int i = 0; i < shape.factors; ++i) {
      if (m.d_mask & (std::uint32_t{1} << i))
        mask |= std::uint32_t{1} << perm[i];
    }
    std::vector<int> exps(shape.factors);
    for (int i = 0; i < shape.factors; ++i)
      exps[i] = (mask >> i) & 1u;
    out = out + FiberRingElement::monomial(shape, m.l_exponent, exps, c);
  }
  return out;
}

namespace {

FiberShape shape_for(const ChernData& e, int k) {
  if (k < 0)
    throw DomainError(fmt::format("secant index k = {} must be nonnegative", k));
  return {e.ambient_dim(), k + 1};
}

/// sum_i c_{r-i} H_s^{r-i} M^i: top Chern class of q_s^*E twisted by the line
/// bundle with first Chern class M.
FiberRingElement twisted_top_pullback(const ChernData& e, FiberShape shape, int s,
                                      const FiberRingElement& twist_class) {
  const int r = e.rank();
  const FiberRingElement h = hyperplane_class(shape, s);
  FiberRingElement acc(shape);
  FiberRingElement twist_power = FiberRingElement::constant(shape, 1);
  for (int i = 0; i <= r; ++i) {
    const Integer& c = e.c()[r - i];
    if (c != 0)
      acc = acc + Rational(c) * (pow(h, static_cast<unsigned>(r - i)) * twist_power);
    if (i < r)
      twist_power = twist_power * twist_class;
  }
  return acc;
}

} // namespace

FiberRingElement recursion_top_chern(const ChernData& e, int k) {
  const FiberShape shape = shape_for(e, k);
  const int r = e.rank();
  FiberRingElement result =
      Rational(e.c()[r]) * pow(hyperplane_class(shape, 1), static_cast<unsigned>(r));
  for (int s = 2; s <= k + 1; ++s) {
    FiberRingElement twist_class(shape);
    for (int i = 1; i < s; ++i)
      twist_class = twist_class - diagonal_class(shape, i, s);
    result = result * twisted_top_pullback(e, shape, s, twist_class);
  }
  return result;
}

FiberRingElement closed_form_top_chern(const ChernData& e, int k) {
  const FiberShape shape = shape_for(e, k);
  Integer scalar = 1;
  for (long i = 0; i <= k; ++i)
    scalar *= top_chern_twisted(e, -i);
  FiberRingElement result = FiberRingElement::constant(shape, Rational(scalar));
  for (int s = 1; s <= k + 1; ++s)
    result = result * pow(hyperplane_class(shape, s), static_cast<unsigned>(e.rank()));
  return result;
}

Rational secant_count_via_ring(const ChernData& e, int k) {
  const FiberShape shape = shape_for(e, k);
  const long excess = static_cast<long>(e.ambient_dim()) + k - static_cast<long>(k + 1) * e.rank();
  if (excess < 0)
    throw HypothesisError(fmt::format(
        "n + k = {} is below (k+1) r = {}: the secant locus is not expected to exist",
        e.ambient_dim() + k, (k + 1) * e.rank()));
  const FiberRingElement cut =
      recursion_top_chern(e, k) * pow(FiberRingElement::base_class(shape),
                                      static_cast<unsigned>(excess));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k + 1));
  return integrate(cut) / Rational(fact);
}

std::string to_string(const FiberRingElement& x) {
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string mono;
    if (m.l_exponent > 0)
      mono += m.l_exponent == 1 ? "L" : fmt::format("L^{}", m.l_exponent);
    for (int i = 0; i < x.shape().factors; ++i) {
      if (m.d_mask & (std::uint32_t{1} << i))
        mono += (mono.empty() ? "" : "*") + fmt::format("D{}", i + 1);
    }
    const bool neg = c < 0;
    const std::string mag = to_string(Rational(abs(c)));
    if (!out.empty() || neg)
      out += neg ? "-" : "+";
    if (mono.empty())
      out += mag;
    else
      out += (mag == "1" ? "" : mag + "*") + mono;
  }
  return out.empty() ? "0" : out;
}

} // namespace barth
