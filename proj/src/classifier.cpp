#include "dslice/classifier.hpp"

#include <algorithm>
#include <map>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

const Rational kHalf(Integer(1), Integer(2));

struct ClassTally {
  std::size_t low = 0;   // x = c
  std::size_t high = 0;  // x = 1 − c
};

// Keyed by c = min(x, 1 − x) where x is q/p mod 1.
std::map<Rational, ClassTally> tally(const SeifertInvariants& canonical) {
  std::map<Rational, ClassTally> counts;
  for (const auto& c : canonical.coeffs()) {
    const Rational x = c.reciprocal();
    const Rational complement = Rational(1) - x;
    if (x <= complement) {
      ++counts[x].low;
    } else {
      ++counts[complement].high;
    }
  }
  return counts;
}

std::size_t matched_pairs(const Rational& key, const ClassTally& t) {
  if (key == kHalf) return t.low / 2;
  return std::min(t.low, t.high);
}

void append_unmatched(const Rational& key, const ClassTally& t, std::vector<Rational>& out) {
  const std::size_t pairs = matched_pairs(key, t);
  if (key == kHalf) {
    if (t.low % 2) out.push_back(key.reciprocal());
    return;
  }
  for (std::size_t i = pairs; i < t.low; ++i) out.push_back(key.reciprocal());
  for (std::size_t i = pairs; i < t.high; ++i) out.push_back((Rational(1) - key).reciprocal());
}

}  // namespace

Rational pair_class_representative(const Rational& coefficient) {
  const Rational x = coefficient.reciprocal().fractional_part();
  if (x == Rational(0)) throw PreconditionError("integral coefficient has no pair class");
  const Rational complement = Rational(1) - x;
  return (x <= complement ? x : complement).reciprocal();
}

bool pair_class_less(const Rational& a, const Rational& b) {
  if (a.num() != b.num()) return a.num() < b.num();
  return a < b;
}

PairUp pair_up(const SeifertInvariants& y) {
  if (euler_number(y) != Rational(0)) throw PreconditionError("pair_up needs euler number 0");
  PairUp result;
  for (const auto& [key, t] : tally(canonical_form(y))) {
    const std::size_t pairs = matched_pairs(key, t);
    if (pairs > 0) result.classes.push_back({key.reciprocal(), pairs});
    append_unmatched(key, t, result.unmatched);
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const PairClass& a, const PairClass& b) { return pair_class_less(a.representative, b.representative); });
  std::sort(result.unmatched.begin(), result.unmatched.end());
  result.complete = result.unmatched.empty();
  return result;
}

std::string EmbedVerdict::describe() const {
  if (answer == Answer::Yes) return "embeds";
  switch (reason) {
    case NoReason::EulerNonzero:
      return "euler number " + euler.to_string() + " != 0, so b1 = 0 and H1 cannot surject onto Z";
    case NoReason::Unpaired:
      return "some exceptional fiber has no cancelling partner";
    case NoReason::CommonFactor:
      return "classes " + common_factor->first.to_string() + " and " + common_factor->second.to_string() +
             " share the factor " + common_factor->gcd.get_str();
    case NoReason::None:
      break;
  }
  return "no";
}

EmbedVerdict embeds_in_zhs1xs3(const SeifertInvariants& y) {
  EmbedVerdict verdict;
  verdict.euler = euler_number(y);
  if (verdict.euler != Rational(0)) {
    verdict.reason = NoReason::EulerNonzero;
    return verdict;
  }
  PairUp paired = pair_up(y);
  if (!paired.complete) {
    verdict.reason = NoReason::Unpaired;
    verdict.unmatched = paired.unmatched;
    return verdict;
  }
  for (std::size_t i = 0; i < paired.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < paired.classes.size(); ++j) {
      const Integer g = gcd(paired.classes[i].representative.num(), paired.classes[j].representative.num());
      if (g > 1) {
        verdict.reason = NoReason::CommonFactor;
        verdict.common_factor =
            CommonFactorWitness{paired.classes[i].representative, paired.classes[j].representative, g};
        return verdict;
      }
    }
  }
  verdict.answer = Answer::Yes;
  verdict.certificate = std::move(paired.classes);
  return verdict;
}

bool bounds_qhs1xb3(const SeifertInvariants& y) {
  if (euler_number(y) != Rational(0)) return false;
  return pair_up(y).complete;
}

SeifertInvariants paired_form(const std::vector<PairClass>& classes) {
  std::vector<Rational> coeffs;
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < c.multiplicity; ++i) {
      coeffs.push_back(c.representative);
      coeffs.push_back(-c.representative);
    }
  }
  return SeifertInvariants(0, std::move(coeffs));
}

ExpansionReduction expansion_reduce(const SeifertInvariants& y) {
  const SeifertInvariants canonical = canonical_form(y);
  std::vector<PairClass> kept;
  std::vector<Rational> unmatched;
  std::size_t total_pairs = 0;
  std::size_t steps = 0;
  for (const auto& [key, t] : tally(canonical)) {
    const std::size_t pairs = matched_pairs(key, t);
    total_pairs += pairs;
    if (pairs > 0) {
      kept.push_back({key.reciprocal(), 1});
      steps += pairs - 1;
    }
    append_unmatched(key, t, unmatched);
  }
  std::sort(kept.begin(), kept.end(),
            [](const PairClass& a, const PairClass& b) { return pair_class_less(a.representative, b.representative); });
  std::sort(unmatched.begin(), unmatched.end());

  // In the canonical form each matched pair x, 1 − x contributes 1 to e;
  // written as r, −r it contributes nothing.
  std::vector<Rational> coeffs = paired_form(kept).coeffs();
  coeffs.insert(coeffs.end(), unmatched.begin(), unmatched.end());
  return {SeifertInvariants(canonical.e() - Integer(static_cast<unsigned long>(total_pairs)), std::move(coeffs)),
          steps};
}

}  // namespace dslice
