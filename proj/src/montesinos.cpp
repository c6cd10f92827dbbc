#include "dslice/montesinos.hpp"

#include <algorithm>
#include <numeric>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

bool is_even(const Integer& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

bool alternating_pairs(const MontesinosLink& link) {
  const auto& t = link.tangles();
  if (link.e() != 0 || t.empty() || t.size() % 2) return false;
  if (is_even(t[0].num())) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != (i % 2 ? -t[0] : t[0])) return false;
  return true;
}

}  // namespace

MontesinosLink::MontesinosLink(Integer e, std::vector<Rational> tangles) : e_(std::move(e)), tangles_(std::move(tangles)) {
  for (const auto& t : tangles_)
    if (t.num() == 0) throw PreconditionError("tangle 0 is not allowed");
}

MontesinosLink pretzel(const std::vector<Integer>& strands) {
  std::vector<Rational> tangles;
  for (const auto& a : strands) tangles.emplace_back(a);
  return MontesinosLink(0, std::move(tangles));
}

std::string to_string(const MontesinosLink& link) {
  std::string out = "M(" + link.e().get_str() + ";";
  for (std::size_t i = 0; i < link.tangles().size(); ++i) out += (i ? ", " : " ") + link.tangles()[i].to_string();
  return out + ")";
}

EndpointPairing tangle_pairing(const Integer& p, const Integer& q) {
  using E = Endpoint;
  using K = EndpointPairing::Kind;
  if (is_even(p) && is_even(q)) throw PreconditionError("tangle p/q with p and q both even");
  if (gcd(p, q) != 1) throw PreconditionError("tangle p/q must be reduced");
  if (is_even(p)) return {K::Horizontal, {{{E::NW, E::NE}, {E::SW, E::SE}}}};
  if (is_even(q)) return {K::Vertical, {{{E::NW, E::SW}, {E::NE, E::SE}}}};
  return {K::Diagonal, {{{E::NW, E::SE}, {E::NE, E::SW}}}};
}

int component_count(const MontesinosLink& link) {
  std::vector<EndpointPairing> pieces{tangle_pairing(link.e(), 1)};
  for (const auto& t : link.tangles()) pieces.push_back(tangle_pairing(t.den(), t.num()));
  const std::size_t k = pieces.size();
  UnionFind uf(4 * k);
  auto at = [](std::size_t piece, Endpoint e) { return 4 * piece + static_cast<std::size_t>(e); };
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& pair : pieces[i].pairs) uf.unite(at(i, pair[0]), at(i, pair[1]));
    const std::size_t next = (i + 1) % k;
    uf.unite(at(i, Endpoint::NE), at(next, Endpoint::NW));
    uf.unite(at(i, Endpoint::SE), at(next, Endpoint::SW));
  }
  int count = 0;
  for (std::size_t v = 0; v < 4 * k; ++v) count += uf.find(v) == v;
  return count;
}

SeifertInvariants double_branched_cover(const MontesinosLink& link) {
  Integer e = link.e();
  std::vector<Rational> coeffs;
  for (const auto& t : link.tangles()) {
    if (abs(t.num()) == 1) {
      e -= t.den() * t.num();
    } else {
      coeffs.push_back(t);
    }
  }
  return SeifertInvariants(e, std::move(coeffs));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes:
      return "YES";
    case Status::No:
      return "NO";
    case Status::Unknown:
      break;
  }
  return "UNKNOWN";
}

Status weak_ds_certificate(const MontesinosLink& link) {
  const auto& t = link.tangles();
  if (link.e() != 0 || t.empty() || t.size() % 2) return Status::Unknown;
  const std::size_t k = t.size() / 2;
  int even = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (t[t.size() - 1 - i] != -t[i]) return Status::Unknown;
    even += is_even(t[i].num());
  }
  return even <= 1 ? Status::Yes : Status::Unknown;
}

Status mutant_weak_ds(const MontesinosLink& link) {
  const auto& t = link.tangles();
  if (link.e() != 0 || t.empty() || t.size() % 2) return Status::Unknown;
  const Rational r = t[0] > Rational(0) ? t[0] : -t[0];
  if (is_even(r.num())) return Status::Unknown;
  const auto plus = std::count(t.begin(), t.end(), r);
  const auto minus = std::count(t.begin(), t.end(), -r);
  if (plus != minus || static_cast<std::size_t>(plus + minus) != t.size()) return Status::Unknown;
  return Status::Yes;
}

StrongVerdict strong_ds_verdict(const MontesinosLink& link) {
  StrongVerdict v;
  if (component_count(link) == 2) {
    EmbedVerdict embed = embeds_in_zhs1xs3(double_branched_cover(link));
    if (embed.answer == Answer::No) {
      v.status = Status::No;
      v.reason = "two components and the double branched cover does not embed: " + embed.describe();
      v.witness = std::move(embed);
      return v;
    }
  }
  if (alternating_pairs(link)) {
    v.status = Status::Yes;
    v.reason = "alternating r, -r tangles with odd numerator";
    return v;
  }
  v.reason = "no obstruction or construction applies";
  return v;
}

SliceVerdict slice_verdict(const MontesinosLink& link) {
  SliceVerdict out;
  out.components = component_count(link);
  out.strong = strong_ds_verdict(link);
  Status weak = Status::Unknown;
  if (weak_ds_certificate(link) == Status::Yes) {
    weak = Status::Yes;
    out.reasons.emplace_back("palindromic tangles t, -t reversed with at most one even numerator");
  }
  if (mutant_weak_ds(link) == Status::Yes) {
    weak = Status::Yes;
    out.reasons.emplace_back("balanced r, -r tangles with odd numerator (mutants included)");
  }
  if (out.strong.status == Status::Yes) weak = Status::Yes;
  out.reasons.push_back(out.strong.reason);
  if (out.components == 2) {
    out.weak_ds = {{"(+,+)", weak}, {"(+,-)", weak}};
  } else {
    out.weak_ds = {{"all", weak}};
  }
  return out;
}

PretzelClass classify_4strand_pretzel(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  const std::vector<Integer> strands{a, b, c, d};
  if (component_count(pretzel(strands)) != 2) throw PreconditionError("pretzel link does not have two components");
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < 4; ++shift) {
      std::array<Integer, 4> s;
      for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t j = (shift + i) % 4;
        s[i] = strands[reflect ? 3 - j : j];
      }
      if (s[2] == -s[1] && s[3] == -s[0] && (!is_even(s[0]) || !is_even(s[1])))
        return PretzelClass::SliceAndWeaklyDoublySlice;
    }
  }
  return PretzelClass::NotSlice;
}

}  // namespace dslice
