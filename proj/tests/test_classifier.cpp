#include <doctest.h>

#include "dslice/classifier.hpp"
#include "dslice/errors.hpp"
#include "dslice/expression.hpp"

using namespace dslice;

namespace {

SeifertInvariants sfs(const char* text) { return std::get<SeifertInvariants>(parse_expression(text)); }

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

}  // namespace

TEST_CASE("pairing up fibers") {
  const PairUp a = pair_up(sfs("S2(0; 5/2, -5/2, 5, -5)"));
  CHECK(a.complete);
  CHECK(a.classes == std::vector<PairClass>{{frac(5, 2), 1}, {Rational(5), 1}});

  CHECK(pair_up(sfs("S2(0;)")).classes.empty());
  CHECK(pair_up(sfs("S2(0;)")).complete);

  const PairUp b = pair_up(sfs("S2(0; 5/2, -5/2, 5/2, -5/2)"));
  CHECK(b.classes == std::vector<PairClass>{{frac(5, 2), 2}});

  // The exchange r, −r ↔ −p/(p−q), p/(p−q) stays in one class.
  const PairUp c = pair_up(sfs("S2(0; 5/2, -5/2, -5/3, 5/3)"));
  CHECK(c.classes == std::vector<PairClass>{{frac(5, 2), 2}});

  const PairUp d = pair_up(sfs("S2(1; 2, 2, 3, -3)"));
  CHECK(d.complete);
  CHECK(d.classes == std::vector<PairClass>{{Rational(2), 1}, {Rational(3), 1}});

  CHECK_THROWS_AS(pair_up(sfs("S2(1; 2)")), PreconditionError);
}

TEST_CASE("embedding verdicts") {
  const EmbedVerdict no = embeds_in_zhs1xs3(sfs("S2(0; 5/2, -5/2, 5, -5)"));
  CHECK(no.answer == Answer::No);
  CHECK(no.reason == NoReason::CommonFactor);
  REQUIRE(no.common_factor.has_value());
  CHECK(no.common_factor->gcd == 5);

  const EmbedVerdict yes = embeds_in_zhs1xs3(sfs("S2(0; 2, -2, 3, -3)"));
  CHECK(yes.answer == Answer::Yes);
  CHECK(yes.certificate == std::vector<PairClass>{{Rational(2), 1}, {Rational(3), 1}});
  CHECK(paired_form(yes.certificate) == sfs("S2(0; 2, -2, 3, -3)"));

  const EmbedVerdict euler = embeds_in_zhs1xs3(sfs("S2(1; 2)"));
  CHECK(euler.answer == Answer::No);
  CHECK(euler.reason == NoReason::EulerNonzero);
  CHECK(euler.euler == frac(1, 2));

  CHECK(embeds_in_zhs1xs3(sfs("S2(0; 5/2, -5/2, 5/2, -5/2)")).answer == Answer::Yes);
  CHECK(embeds_in_zhs1xs3(sfs("S2(2; 2, 2, 8/3, 8/5)")).reason == NoReason::CommonFactor);
}

TEST_CASE("unpaired fibers") {
  const auto y = sfs("S2(1; 2, 3, 6)");
  CHECK(euler_number(y) == Rational(0));
  const EmbedVerdict v = embeds_in_zhs1xs3(y);
  CHECK(v.reason == NoReason::Unpaired);
  CHECK(v.unmatched.size() == 3);
  CHECK_FALSE(bounds_qhs1xb3(y));
}

TEST_CASE("bounding a rational homology S1 x B3") {
  CHECK(bounds_qhs1xb3(sfs("S2(0; 5/2, -5/2, 5, -5)")));
  CHECK(bounds_qhs1xb3(sfs("S2(0;)")));
  CHECK_FALSE(bounds_qhs1xb3(sfs("S2(0; 5/2, 5/2, -5/2)")));
  // q/p = 2/5 and -3/5 agree mod 1 but do not sum to an integer.
  CHECK_FALSE(bounds_qhs1xb3(sfs("S2(0; 5/2, -5/3)")));
  CHECK_FALSE(bounds_qhs1xb3(sfs("S2(1; 5/2, -5/3)")));
}

TEST_CASE("a yes answer implies bounding") {
  for (long p = 2; p <= 9; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd(Integer(p), Integer(q)) != 1) continue;
      const SeifertInvariants y(0, {frac(p, q), frac(-p, q), Rational(7), Rational(-7)});
      const EmbedVerdict v = embeds_in_zhs1xs3(y);
      if (v.answer == Answer::Yes) CHECK(bounds_qhs1xb3(y));
      CHECK((v.answer == Answer::Yes) == (p != 7 || q == 1 || q == 6));
      CHECK(embeds_in_zhs1xs3(canonical_form(y)).answer == v.answer);
    }
  }
}

TEST_CASE("expansion reduction") {
  const auto a = expansion_reduce(sfs("S2(0; 5/2, -5/2, 5/2, -5/2)"));
  CHECK(a.base == sfs("S2(0; 5/2, -5/2)"));
  CHECK(a.steps == 1);
  const auto b = expansion_reduce(sfs("S2(0; 2, -2)"));
  CHECK(b.base == sfs("S2(0; 2, -2)"));
  CHECK(b.steps == 0);
  const auto c = expansion_reduce(sfs("S2(0; 5/2, -5/2, 3, -3, 3, -3)"));
  CHECK(c.base == sfs("S2(0; 3, -3, 5/2, -5/2)"));
  CHECK(c.steps == 1);
  const auto d = expansion_reduce(sfs("S2(1; 2, 2, 2, 2, 7)"));
  CHECK(is_homeomorphic(d.base, sfs("S2(-1; 2, -2, 7)")));
  CHECK(d.steps == 1);
}
