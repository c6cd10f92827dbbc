// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "dslice/classifier.hpp"
#include "dslice/commands.hpp"
#include "dslice/lattice.hpp"
#include "dslice/montesinos.hpp"
#include "dslice/partitions.hpp"
#include "dslice/plumbing.hpp"
#include "support/seed_spaces.hpp"

using namespace dslice;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

SeifertInvariants sfs(const std::string& text) { return std::get<SeifertInvariants>(parse_expression(text)); }

PlumbingGraph plumbing_of(const std::string& text) { return star_plumbing(normalize_positive(sfs(text))); }

std::vector<Factorization> search(const PlumbingGraph& g) {
  SearchOptions opts;
  opts.plumbing = &g;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  return enumerate_factorizations(gram_matrix(g), g.vertex_count() - 1, opts);
}

Integer dot(const BigVector& a, const BigVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Check worked_example() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const PlumbingGraph g = plumbing_of("S2(2; 2, 2, 8/3, 8/5)");
  const IntMatrix q_printed{
      {2, -1, -1, -1, 0, -1, 0, 0}, {-1, 2, 0, 0, 0, 0, 0, 0}, {-1, 0, 2, 0, 0, 0, 0, 0},
      {-1, 0, 0, 3, -1, 0, 0, 0},   {0, 0, 0, -1, 3, 0, 0, 0},  {-1, 0, 0, 0, 0, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, 3, -1},   {0, 0, 0, 0, 0, 0, -1, 2},
  };
  const IntMatrix at_printed{
      {1, 1, 0, 0, 0, 0, 0},  {-1, 0, 1, 0, 0, 0, 0}, {-1, 0, -1, 0, 0, 0, 0}, {0, -1, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, -1, 1, 1}, {0, -1, 0, -1, 0, 0, 0}, {0, 0, 0, 1, -1, -1, 0}, {0, 0, 0, 0, 0, 1, -1},
  };
  c.require(gram_matrix(g) == q_printed, "gram matrix differs from the printed Q");
  const BigVector v0 = kernel_vector(g).entries;
  c.require(v0 == BigVector{8, 4, 4, 3, 1, 5, 2, 1}, "kernel vector");
  const auto found = enumerate_factorizations(gram_matrix(g), 7);
  c.require(found.size() == 1, "expected exactly one factorization class, got " + std::to_string(found.size()));
  c.require(!found.empty() && found[0].matrix == canonical_factorization(at_printed.transpose()),
            "factorization differs from the printed one");
  const BigVector wbar = image_detection_vector(g, 0);
  c.require(wbar == BigVector{0, 1, 1, 0, 0, 0, 0, 0}, "image detection vector");
  const BigVector x{0, 1, 0, 0, -4, 0, 0, 0};
  c.require(dot(v0, x) == 0, "v0 . x != 0");
  c.require(dot(wbar, x) == 1, "wbar . x != 1");
  const auto w = coprimality_obstruction(g);
  c.require(w && w->x == x && w->wbar == wbar, "obstruction witness");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 60, "took too long");
  return c;
}

Check homology_equivalence() {
  Check c;
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> pick_k(0, 5), pick_p(2, 20), pick_e(-5, 5), coin(0, 1);
  std::vector<SeifertInvariants> spaces;
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> coeffs;
    const long k = pick_k(rng);
    for (long j = 0; j < k; ++j) {
      const long p = pick_p(rng);
      std::uniform_int_distribution<long> pick_q(1, p - 1);
      long q = pick_q(rng);
      while (gcd(Integer(p), Integer(q)) != 1) q = pick_q(rng);
      coeffs.emplace_back(Integer(coin(rng) ? p : -p), Integer(q));
    }
    spaces.emplace_back(pick_e(rng), coeffs);
  }
  for (const char* text : {"S2(2; 2, 2, 8/3, 8/5)", "S2(0; 5/2, -5/2, 5, -5)", "S2(0; 5, 5/2, -5/2, -5)",
                           "S2(0; 2, -2, 3, -3)", "S2(0; 3, -3, 3, -3)", "S2(1; 2)", "S2(0;)",
                           "S2(2; 5/2, 5/3, 5, 5/4)", "S2(0; 2, -2)", "S2(1; 2, 2)"})
    spaces.push_back(sfs(text));
  for (const auto& y : spaces) c.require(homology(y) == homology_oracle(y), to_string(y));
  return c;
}

Check continued_fractions() {
  Check c;
  for (long p = 2; p <= 200; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd(Integer(p), Integer(q)) != 1) continue;
      const Rational r{Integer(p), Integer(q)};
      const NegCF cf = neg_cf_expand(r);
      const std::string tag = r.to_string();
      c.require(neg_cf_eval(cf) == r, "round trip " + tag);
      for (const auto& t : cf.terms) c.require(t >= 2, "term below 2 in " + tag);
      c.require(denominator_sequence(cf).front() == q, "b1 != q for " + tag);
    }
  }
  return c;
}

struct SeedReport {
  Check cross;
  Check structure;
};

SeedReport seed_suite() {
  SeedReport out;
  std::vector<std::string> all = seeds::kCoprime;
  all.insert(all.end(), seeds::kCommonFactor.begin(), seeds::kCommonFactor.end());
  out.cross.require(all.size() >= 20, "seed list too short");
  const auto start = std::chrono::steady_clock::now();
  for (const auto& text : all) {
    const SeifertInvariants y = sfs(text);
    const PlumbingGraph g = plumbing_of(text);
    out.cross.require(g.vertex_count() <= 9, text + " has more than nine vertices");
    const bool no = embeds_in_zhs1xs3(y).answer == Answer::No;
    const auto witness = coprimality_obstruction(g);
    const auto found = search(g);
    const BigVector v0 = kernel_vector(g).entries;

    bool refuted = witness.has_value();
    if (witness) {
      refuted = dot(v0, witness->x) == 0;
      for (std::size_t i = 0; i < found.size() && refuted; ++i)
        for (std::size_t j = i; j < found.size() && refuted; ++j)
          refuted = !torsion_image_test(found[i].matrix, found[j].matrix, v0, witness->x);
    }
    out.cross.require(no == refuted, text + ": classifier and obstruction disagree");
    out.cross.require(!no == !witness.has_value(), text + ": witness presence");
    out.structure.require(no || !found.empty(), text + ": no factorization found");

    const auto classes = arm_classes(g);
    const std::size_t ell = g.arms.size() / 2;
    for (const auto& f : found) {
      CentralRowStructure s;
      try {
        s = central_row_structure(f.matrix, g);
      } catch (const std::exception& e) {
        out.structure.require(false, text + ": " + e.what());
        continue;
      }
      for (std::size_t r = 0; r < s.normalized.rows(); ++r)
        out.structure.require(s.normalized(r, 0) == (r < ell ? 1 : 0), text + ": central row not 1..1 0..0");
      for (const auto& pair : s.partition.classes)
        out.structure.require(
            g.arm_fraction(pair[0]).reciprocal() + g.arm_fraction(pair[1]).reciprocal() == Rational(1),
            text + ": reciprocal sum");
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const BigVector w = image_detection_vector(g, k);
        const Integer p = classes[k].representative.num();
        for (std::size_t r = 0; r < f.matrix.rows(); ++r) {
          Integer d = 0;
          for (std::size_t v = 0; v < w.size(); ++v) d += w[v] * f.matrix(r, v);
          out.structure.require(d % p == 0, text + ": wbar A^T not 0 mod p");
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.cross.require(secs < 600, "seed suite took too long");
  return out;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(DSLICE_CLI_PATH) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

Check cli_pipeline() {
  Check c;
  int status = 0;
  const Json a = Json::parse(run_cli("montesinos \"M(0; 5, 5/2, -5/2, -5)\"", status), nullptr, false);
  c.require(status == 0 && !a.is_discarded(), "CLI failed on the first link");
  if (!c.ok) return c;
  c.require(a["components"] == 2, "components");
  c.require(a["weak_ds"] == "YES-both", "weak_ds");
  c.require(a["strong_ds"] == "NO", "strong_ds");
  c.require(a["strong_ds_witness"]["gcd"] == 5, "gcd witness");
  const Json b = Json::parse(run_cli("montesinos \"M(0; 3, -3, 3, -3)\"", status), nullptr, false);
  c.require(status == 0 && !b.is_discarded() && b["strong_ds"] == "YES", "second link strong_ds");
  return c;
}

Check pretzel_table() {
  Check c;
  std::set<std::array<long, 4>> conforming;
  for (long a = 2; a <= 9; ++a) {
    for (long b = 2; b <= 9; ++b) {
      if (a % 2 == 0 && b % 2 == 0) continue;
      try {
        c.require(classify_4strand_pretzel(a, b, -b, -a) == PretzelClass::SliceAndWeaklyDoublySlice,
                  "P(" + std::to_string(a) + "," + std::to_string(b) + ",...) not classified slice");
      } catch (const std::exception& e) {
        c.require(false, e.what());
      }
    }
  }
  // Every rotation and reversal of (a, b, −b, −a), signs included.
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0 || (a % 2 == 0 && b % 2 == 0)) continue;
      const std::array<long, 4> s{a, b, -b, -a};
      for (int shift = 0; shift < 4; ++shift) {
        std::array<long, 4> rot, rev;
        for (int i = 0; i < 4; ++i) {
          rot[i] = s[(shift + i) % 4];
          rev[3 - i] = rot[i];
        }
        conforming.insert(rot);
        conforming.insert(rev);
      }
    }
  }
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> pick(-9, 9);
  int sampled = 0;
  while (sampled < 50) {
    std::array<long, 4> s{};
    for (auto& v : s)
      do v = pick(rng);
      while (v == 0 || v == 1 || v == -1);
    if (conforming.count(s)) continue;
    if (component_count(pretzel({s[0], s[1], s[2], s[3]})) != 2) continue;
    ++sampled;
    c.require(classify_4strand_pretzel(s[0], s[1], s[2], s[3]) == PretzelClass::NotSlice,
              "a non-conforming pretzel was classified slice");
  }
  return c;
}

Check orientation_filter() {
  Check c;
  for (std::int64_t n = 1; n <= 3; ++n) {
    // Components T, U1, U2; |lk| = n for every pair, sign product negative.
    const LinkData d{3, {{0, n, n}, {n, 0, -n}, {n, -n, 0}}, {false, true, true}};
    c.require(weak_ds_orientation_filter(d).size() == 1, "n = " + std::to_string(n));
  }
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Check()>& run) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
    if (!c.ok) std::cout << " (" << c.detail << ")";
    std::cout << std::endl;
    failures += !c.ok;
  };
  report(1, "worked example S2(2; 2, 2, 8/3, 8/5)", worked_example);
  report(2, "closed-form homology equals Smith normal form", homology_equivalence);
  report(3, "negative continued fractions up to p = 200", continued_fractions);
  SeedReport seeds;
  bool seeds_ran = false;
  auto seed_once = [&] {
    if (!seeds_ran) seeds = seed_suite();
    seeds_ran = true;
    return seeds;
  };
  report(4, "classifier agrees with the lattice obstruction on the seed list", [&] { return seed_once().cross; });
  report(5, "montesinos command on M(0; 5, 5/2, -5/2, -5) and M(0; 3, -3, 3, -3)", cli_pipeline);
  report(6, "four strand pretzel table", pretzel_table);
  report(7, "one quasi-orientation for P(2n+1, -2n, 2n, -2n), n = 1, 2, 3", orientation_filter);
  report(8, "factorization structure on the seed list", [&] { return seed_once().structure; });
  return failures;
}
