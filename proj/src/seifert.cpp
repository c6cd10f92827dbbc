#include "dslice/seifert.hpp"

#include <algorithm>
#include <sstream>

#include "dslice/errors.hpp"
#include "dslice/integer_linalg.hpp"

namespace dslice {

SeifertInvariants::SeifertInvariants(Integer e, std::vector<Rational> coeffs)
    : e_(std::move(e)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (abs(c.num()) <= 1) {
      throw PreconditionError("Seifert coefficient " + c.to_string() + " needs |p| > 1");
    }
  }
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  BigMatrix diag(orders.size(), BigVector(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) diag[i][i] = orders[i];
  AbelianGroup g;
  for (auto& d : smith_diagonal(diag)) {
    if (d == 0) {
      ++g.free_rank;
    } else if (d > 1) {
      g.torsion.push_back(d);
    }
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

Rational euler_number(const SeifertInvariants& y) {
  Rational eps(y.e());
  for (const auto& c : y.coeffs()) eps -= c.reciprocal();
  return eps;
}

int first_betti(const SeifertInvariants& y) { return euler_number(y) == Rational(0) ? 1 : 0; }

namespace {

// gcd over all products of `size` distinct entries.
Integer subset_product_gcd(const std::vector<Integer>& ps, std::size_t size) {
  Integer g = 0;
  std::vector<bool> chosen(ps.size(), false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    Integer product = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (chosen[i]) product *= ps[i];
    }
    g = gcd(g, product);
    if (g == 1) break;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return g;
}

}  // namespace

AbelianGroup homology(const SeifertInvariants& y) {
  const std::size_t k = y.fiber_count();
  std::vector<Integer> ps;
  for (const auto& c : y.coeffs()) ps.push_back(abs(c.num()));

  Rational top = euler_number(y);
  for (const auto& p : ps) top *= Rational(p);
  // (p₁⋯p_k)ε(Y) is always an integer.
  const Integer last = abs(top.num());

  if (k == 0) return AbelianGroup::from_cyclic_orders({last});

  std::vector<Integer> d(k + 2);  // 1-based d[1..k+1]
  for (std::size_t j = 1; j <= k; ++j) d[j] = j <= 2 ? Integer(1) : subset_product_gcd(ps, j - 2);
  d[k + 1] = last;

  std::vector<Integer> orders;
  for (std::size_t i = 1; i <= k; ++i) orders.push_back(d[i + 1] / d[i]);
  return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup homology_oracle(const SeifertInvariants& y) {
  const std::size_t k = y.fiber_count();
  BigMatrix presentation(k + 1, BigVector(k + 1, 0));
  presentation[0][0] = y.e();
  for (std::size_t i = 0; i < k; ++i) {
    presentation[0][i + 1] = 1;
    presentation[i + 1][0] = y.coeffs()[i].den();
    presentation[i + 1][i + 1] = y.coeffs()[i].num();
  }
  AbelianGroup g;
  for (auto& d : smith_diagonal(presentation)) {
    if (d == 0) {
      ++g.free_rank;
    } else if (d > 1) {
      g.torsion.push_back(d);
    }
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

namespace {

SeifertInvariants reduce_mod_one(const SeifertInvariants& y) {
  Integer e = y.e();
  std::vector<Rational> coeffs;
  for (const auto& c : y.coeffs()) {
    const Rational x = c.reciprocal();
    const Integer whole = x.floor();
    const Rational frac = x - Rational(whole);
    e -= whole;
    if (frac == Rational(0)) continue;
    coeffs.push_back(frac.reciprocal());
  }
  return SeifertInvariants(e, std::move(coeffs));
}

}  // namespace

SeifertInvariants normalize_positive(const SeifertInvariants& y) {
  if (euler_number(y) < Rational(0)) {
    throw PreconditionError("normalize_positive needs euler number >= 0; reverse the orientation first");
  }
  return reduce_mod_one(y);
}

SeifertInvariants canonical_form(const SeifertInvariants& y) {
  SeifertInvariants reduced = reduce_mod_one(y);
  std::vector<Rational> coeffs = reduced.coeffs();
  std::sort(coeffs.begin(), coeffs.end());
  return SeifertInvariants(reduced.e(), std::move(coeffs));
}

bool is_homeomorphic(const SeifertInvariants& a, const SeifertInvariants& b) {
  return canonical_form(a) == canonical_form(b);
}

SeifertInvariants reverse_orientation(const SeifertInvariants& y) {
  std::vector<Rational> coeffs;
  for (const auto& c : y.coeffs()) coeffs.push_back(-c);
  return SeifertInvariants(-y.e(), std::move(coeffs));
}

std::string to_string(const SeifertInvariants& y) {
  std::ostringstream out;
  out << "S2(" << y.e().get_str() << ";";
  for (std::size_t i = 0; i < y.coeffs().size(); ++i) out << (i ? ", " : " ") << y.coeffs()[i].to_string();
  out << ")";
  return out.str();
}

}  // namespace dslice
