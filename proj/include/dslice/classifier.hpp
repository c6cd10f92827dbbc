#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dslice/rational.hpp"
#include "dslice/seifert.hpp"

namespace dslice {

/// A class {r, −r} of exceptional fibers, identified mod 1 through q/p, so
/// the pair exchange r, −r ↔ −p/(p−q), p/(p−q) stays inside one class.
/// The representative is the member p/q with p/q >= 2.
struct PairClass {
  Rational representative;
  std::size_t multiplicity = 0;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Representative (>= 2) of the class of a single coefficient.
Rational pair_class_representative(const Rational& coefficient);

/// Orders classes by numerator, then by representative.
bool pair_class_less(const Rational& a, const Rational& b);

struct PairUp {
  bool complete = false;
  std::vector<PairClass> classes;
  /// Coefficients (as p/q > 1 in the mod-1 reduced form) left without a partner.
  std::vector<Rational> unmatched;
};

/// Matches coefficients into {x, 1 − x} pairs mod 1. Throws
/// PreconditionError when ε(Y) ≠ 0.
PairUp pair_up(const SeifertInvariants& y);

enum class Answer { Yes, No };

enum class NoReason { None, EulerNonzero, Unpaired, CommonFactor };

struct CommonFactorWitness {
  Rational first;
  Rational second;
  Integer gcd;
};

/// Decision for "Y embeds in an integer homology S¹×S³ with H₁ surjective".
struct EmbedVerdict {
  Answer answer = Answer::No;
  NoReason reason = NoReason::None;
  Rational euler;
  /// Pair classes with pairwise coprime numerators (YES only).
  std::vector<PairClass> certificate;
  std::optional<CommonFactorWitness> common_factor;
  std::vector<Rational> unmatched;

  std::string describe() const;
};

EmbedVerdict embeds_in_zhs1xs3(const SeifertInvariants& y);

/// Y bounds a rational homology S¹×B³: ε = 0 and every fiber is paired.
bool bounds_qhs1xb3(const SeifertInvariants& y);

/// S²(0; r₁, −r₁, …) with each class repeated by its multiplicity.
SeifertInvariants paired_form(const std::vector<PairClass>& classes);

struct ExpansionReduction {
  SeifertInvariants base;
  std::size_t steps = 0;
};

/// Removes cancelling pairs while keeping one pair per class. The base is
/// written with pairs as r, −r (classes in pair_class_less order) followed
/// by the unmatched coefficients.
ExpansionReduction expansion_reduce(const SeifertInvariants& y);

}  // namespace dslice
