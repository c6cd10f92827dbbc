#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dslice/montesinos.hpp"
#include "dslice/rational.hpp"
#include "dslice/seifert.hpp"

namespace dslice {

struct PretzelParams {
  std::vector<Integer> strands;

  MontesinosLink link() const { return pretzel(strands); }
  friend bool operator==(const PretzelParams&, const PretzelParams&) = default;
};

using Expression = std::variant<SeifertInvariants, MontesinosLink, PretzelParams>;

/// Parses
///   S2(e; r, …)   (also written S²)
///   M(e; r, …)
///   P(a, …)
/// where r is n or n/d. Whitespace is ignored. Fractions must be reduced and
/// S2/M coefficients need |p| > 1. Throws ParseError with a byte offset.
Expression parse_expression(std::string_view text);

std::string to_string(const PretzelParams& p);
std::string to_string(const Expression& e);

}  // namespace dslice
