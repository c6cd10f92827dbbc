#pragma once

#include <string>
#include <vector>

#include "dslice/rational.hpp"

namespace dslice {

/// The Seifert fibered space S²(e; p₁/q₁, …, p_k/q_k): surgery on an
/// e-framed unknot with k meridional p_i/q_i-framed components.
class SeifertInvariants {
 public:
  SeifertInvariants() = default;
  /// Throws PreconditionError if some coefficient has |numerator| <= 1.
  SeifertInvariants(Integer e, std::vector<Rational> coeffs);

  const Integer& e() const { return e_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t fiber_count() const { return coeffs_.size(); }

  friend bool operator==(const SeifertInvariants& a, const SeifertInvariants& b) {
    return a.e_ == b.e_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Integer e_ = 0;
  std::vector<Rational> coeffs_;
};

/// Finite abelian group Z^free_rank ⊕ Z/D₁ ⊕ … with D_i > 1 and D_i | D_{i+1}.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  /// Invariant-factor form of Z^free ⊕ ⊕ Z/orders[i]; an order of 0 is a free
  /// summand and orders of 1 vanish.
  static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);

  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// ε(Y) = e − Σ q_i/p_i.
Rational euler_number(const SeifertInvariants& y);

/// 1 when ε(Y) = 0, otherwise 0.
int first_betti(const SeifertInvariants& y);

/// H₁(Y) from the closed formula: d₁ = d₂ = 1, d_j = gcd of the (j−2)-fold
/// products of the p_i, d_{k+1} = (p₁⋯p_k)ε(Y), D_i = d_{i+1}/d_i.
AbelianGroup homology(const SeifertInvariants& y);

/// H₁(Y) from the Smith normal form of the surgery presentation matrix on
/// meridians μ₀, …, μ_k: row (e, 1, …, 1) and rows q_i μ₀ + p_i μ_i.
AbelianGroup homology_oracle(const SeifertInvariants& y);

/// Every q_i/p_i replaced by its representative in (0, 1) (so each
/// coefficient becomes p/q > 1 with p > 0), e shifted to keep ε, order kept.
/// Requires ε(Y) >= 0.
SeifertInvariants normalize_positive(const SeifertInvariants& y);

/// Same reduction as normalize_positive without the sign requirement, with
/// coefficients sorted ascending. Two spaces with equal canonical forms are
/// homeomorphic (orientation preserving).
SeifertInvariants canonical_form(const SeifertInvariants& y);

bool is_homeomorphic(const SeifertInvariants& a, const SeifertInvariants& b);

/// −Y: negate e and every coefficient.
SeifertInvariants reverse_orientation(const SeifertInvariants& y);

/// "S2(e; c1, c2, ...)", the same syntax the expression parser accepts.
std::string to_string(const SeifertInvariants& y);

}  // namespace dslice
