#include "dslice/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "dslice/classifier.hpp"
#include "dslice/errors.hpp"

namespace dslice {

namespace {

using Column = std::vector<std::int64_t>;

std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Start at the largest diagonal entry, then repeatedly take the column
// with the most nonzero entries against the placed ones.
std::vector<std::size_t> column_order(const IntMatrix& q) {
  const std::size_t n = q.rows();
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t best = n;
    std::size_t best_links = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (placed[j]) continue;
      std::size_t links = 0;
      for (std::size_t i : order) links += q(i, j) != 0;
      if (best == n || links > best_links || (links == best_links && q(j, j) > q(best, best))) {
        best = j;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

// Exact q/p for every contiguous subchain of every arm, read from either end.
class ChainBound {
 public:
  ChainBound(const PlumbingGraph& graph, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> depth_of(graph.vertex_count());
    for (std::size_t d = 0; d < order.size(); ++d) depth_of[order[d]] = d;
    for (std::size_t arm = 0; arm < graph.arms.size(); ++arm) {
      const auto& terms = graph.arms[arm].terms;
      Arm a;
      a.len = terms.size();
      for (std::size_t k = 0; k < a.len; ++k) a.depth.push_back(depth_of[graph.arm_start(arm) + k]);
      a.forward.assign(a.len * a.len, Rational(0));
      a.backward.assign(a.len * a.len, Rational(0));
      for (std::size_t s = 0; s < a.len; ++s) {
        for (std::size_t e = s; e < a.len; ++e) {
          NegCF fwd{{terms.begin() + static_cast<long>(s), terms.begin() + static_cast<long>(e) + 1}};
          NegCF bwd{{fwd.terms.rbegin(), fwd.terms.rend()}};
          a.forward[s * a.len + e] = neg_cf_eval(fwd).reciprocal();
          a.backward[s * a.len + e] = neg_cf_eval(bwd).reciprocal();
        }
      }
      arms_.push_back(std::move(a));
    }
  }

  // cols holds the columns placed at depths 0..placed-1.
  bool admissible(const std::vector<Column>& cols, std::size_t placed, std::size_t m) const {
    const Rational one(1);
    for (std::size_t t = 0; t < m; ++t) {
      Rational total(0);
      for (const auto& a : arms_) {
        Rational best(0);
        for (std::size_t s = 0; s < a.len; ++s) {
          if (a.depth[s] >= placed) continue;
          for (std::size_t e = s; e < a.len && a.depth[e] < placed; ++e) {
            if (cols[a.depth[s]][t] != 0 && a.forward[s * a.len + e] > best) best = a.forward[s * a.len + e];
            if (cols[a.depth[e]][t] != 0 && a.backward[s * a.len + e] > best) best = a.backward[s * a.len + e];
          }
        }
        total += best;
      }
      if (total > one) return false;
    }
    return true;
  }

 private:
  struct Arm {
    std::size_t len = 0;
    std::vector<std::size_t> depth;
    std::vector<Rational> forward;
    std::vector<Rational> backward;
  };
  std::vector<Arm> arms_;
};

struct Partial {
  std::vector<Column> cols;
  std::size_t used = 0;  // coordinates [0, used) carry every nonzero entry so far
};

class Search {
 public:
  Search(const IntMatrix& q, std::size_t m, const PlumbingGraph* plumbing)
      : q_(q), m_(m), n_(q.rows()), order_(column_order(q)) {
    if (plumbing) bound_.emplace(*plumbing, order_);
  }

  std::size_t columns() const { return n_; }

  // Calls visit for every admissible extension of p by one column.
  void extend(const Partial& p, const std::function<void(Partial&&)>& visit) const {
    const std::size_t depth = p.cols.size();
    const std::size_t j = order_[depth];
    std::vector<std::int64_t> residual(depth);
    for (std::size_t i = 0; i < depth; ++i) residual[i] = q_(order_[i], j);
    // tail[i][k] = Σ_{k' >= k} cols[i][k']².
    std::vector<std::vector<std::int64_t>> tail(depth, std::vector<std::int64_t>(p.used + 1, 0));
    for (std::size_t i = 0; i < depth; ++i)
      for (std::size_t k = p.used; k-- > 0;) tail[i][k] = tail[i][k + 1] + p.cols[i][k] * p.cols[i][k];

    Column a(m_, 0);
    std::function<void(std::size_t, std::int64_t, std::int64_t)> fresh =
        [&](std::size_t pos, std::int64_t rem, std::int64_t cap) {
          if (rem == 0) {
            Partial next{p.cols, std::max(p.used, pos)};
            next.cols.push_back(a);
            if (!bound_ || bound_->admissible(next.cols, next.cols.size(), m_)) visit(std::move(next));
            return;
          }
          if (pos == m_) return;
          for (std::int64_t v = std::min(cap, isqrt(rem)); v >= 1; --v) {
            a[pos] = v;
            fresh(pos + 1, rem - v * v, v);
            a[pos] = 0;
          }
        };
    std::function<void(std::size_t, std::int64_t)> used = [&](std::size_t k, std::int64_t rem) {
      if (k == p.used) {
        for (auto r : residual)
          if (r != 0) return;
        fresh(p.used, rem, rem);
        return;
      }
      const std::int64_t s = isqrt(rem);
      for (std::int64_t v = -s; v <= s; ++v) {
        const std::int64_t next_rem = rem - v * v;
        bool ok = true;
        for (std::size_t i = 0; i < depth; ++i) {
          residual[i] -= v * p.cols[i][k];
          const __int128 r = residual[i];
          if (r * r > static_cast<__int128>(next_rem) * tail[i][k + 1]) ok = false;
        }
        if (ok) {
          a[k] = v;
          used(k + 1, next_rem);
          a[k] = 0;
        }
        for (std::size_t i = 0; i < depth; ++i) residual[i] += v * p.cols[i][k];
      }
    };
    used(0, q_(j, j));
  }

  void run(Partial p, std::set<IntMatrix>& out) const {
    if (p.cols.size() == n_) {
      out.insert(assemble(p));
      return;
    }
    extend(p, [&](Partial&& next) { run(std::move(next), out); });
  }

 private:
  IntMatrix assemble(const Partial& p) const {
    IntMatrix a(m_, n_);
    for (std::size_t d = 0; d < n_; ++d)
      for (std::size_t r = 0; r < m_; ++r) a(r, order_[d]) = p.cols[d][r];
    if (!(a.gram() == q_)) throw InternalInconsistency("factorization search produced AᵀA != Q");
    return canonical_factorization(a);
  }

  const IntMatrix& q_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::optional<ChainBound> bound_;
};

void require_paired(const PlumbingGraph& graph) {
  const SeifertInvariants y = boundary(graph);
  if (euler_number(y) != Rational(0)) throw PreconditionError("plumbing boundary must have euler number 0");
  if (!pair_up(y).complete) throw PreconditionError("plumbing boundary must pair every fiber");
  for (std::size_t arm = 0; arm < graph.arms.size(); ++arm)
    if (graph.arm_fraction(arm) <= Rational(1)) throw PreconditionError("arm fractions must exceed 1");
  if (graph.central_weight * 2 != Integer(static_cast<unsigned long>(graph.arms.size())))
    throw PreconditionError("central weight must equal the number of fiber pairs");
}

}  // namespace

IntMatrix canonical_factorization(const IntMatrix& a) {
  std::vector<std::vector<std::int64_t>> rows(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
    auto lead = std::find_if(rows[r].begin(), rows[r].end(), [](std::int64_t v) { return v != 0; });
    if (lead != rows[r].end() && *lead > 0)
      for (auto& v : rows[r]) v = -v;
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::int64_t> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return IntMatrix::from_row_major(a.rows(), a.cols(), std::move(flat));
}

std::vector<Factorization> enumerate_factorizations(const IntMatrix& q, std::size_t m, const SearchOptions& options) {
  if (!q.is_square() || !q.is_symmetric()) throw PreconditionError("Q must be square and symmetric");
  const Inertia in = inertia(q);
  if (in.negative != 0) throw PreconditionError("Q must be positive semidefinite");
  if (m < in.positive) throw PreconditionError("m is smaller than rank Q, no factorization exists");
  if (options.plumbing && !(gram_matrix(*options.plumbing) == q))
    throw PreconditionError("Q is not the Gram matrix of the given plumbing");

  const Search search(q, m, options.plumbing);
  std::set<IntMatrix> found;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || search.columns() == 0) {
    search.run(Partial{}, found);
  } else {
    std::vector<Partial> frontier{Partial{}};
    while (frontier.size() < 4 * threads && frontier.front().cols.size() < search.columns()) {
      std::vector<Partial> next;
      for (const auto& p : frontier) search.extend(p, [&](Partial&& c) { next.push_back(std::move(c)); });
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    std::vector<std::set<IntMatrix>> local(threads);
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) search.run(frontier[i], local[w]);
      });
    }
    for (auto& t : workers) t.join();
    for (auto& s : local) found.insert(s.begin(), s.end());
  }
  std::vector<Factorization> result;
  for (const auto& a : found) result.push_back({a});
  return result;
}

std::vector<ArmClass> arm_classes(const PlumbingGraph& graph) {
  std::vector<ArmClass> classes;
  for (std::size_t arm = 0; arm < graph.arms.size(); ++arm) {
    const Rational rep = pair_class_representative(graph.arm_fraction(arm));
    auto it = std::find_if(classes.begin(), classes.end(), [&](const ArmClass& c) { return c.representative == rep; });
    if (it == classes.end()) {
      classes.push_back({rep, {arm}});
    } else {
      it->arms.push_back(arm);
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const ArmClass& a, const ArmClass& b) { return pair_class_less(a.representative, b.representative); });
  return classes;
}

CentralRowStructure central_row_structure(const IntMatrix& a, const PlumbingGraph& graph) {
  require_paired(graph);
  if (!(a.cols() == graph.vertex_count() && a.gram() == gram_matrix(graph)))
    throw PreconditionError("A is not a factorization of the plumbing Gram matrix");
  const std::size_t ell = graph.arms.size() / 2;

  std::vector<std::size_t> central_rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a(r, 0) == 0) continue;
    if (a(r, 0) != 1 && a(r, 0) != -1) throw InternalInconsistency("central column has an entry other than ±1");
    central_rows.push_back(r);
  }
  if (central_rows.size() != ell) throw InternalInconsistency("central column does not have ℓ nonzero entries");

  std::vector<std::vector<std::size_t>> support;
  for (std::size_t r : central_rows) {
    std::vector<std::size_t> arms;
    for (std::size_t v = 1; v < graph.vertex_count(); ++v) {
      const std::size_t arm = graph.arm_of(v);
      if (a(r, v) != 0 && (arms.empty() || arms.back() != arm)) arms.push_back(arm);
    }
    if (arms.size() != 2) throw InternalInconsistency("an arm class does not have exactly two arms");
    const Rational sum = graph.arm_fraction(arms[0]).reciprocal() + graph.arm_fraction(arms[1]).reciprocal();
    if (sum != Rational(1)) throw InternalInconsistency("an arm class has reciprocal sum " + sum.to_string());
    support.push_back(std::move(arms));
  }
  std::vector<bool> seen(graph.arms.size(), false);
  for (const auto& s : support) {
    for (std::size_t arm : s) {
      if (seen[arm]) throw InternalInconsistency("arm classes overlap");
      seen[arm] = true;
    }
  }

  std::vector<std::size_t> rank(central_rows.size());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
  std::sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) { return support[x] < support[y]; });

  CentralRowStructure out;
  std::vector<std::size_t> row_order;
  for (std::size_t i : rank) {
    row_order.push_back(central_rows[i]);
    out.partition.classes.push_back({support[i][0], support[i][1]});
  }
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, 0) == 0) row_order.push_back(r);
  out.normalized = IntMatrix(a.rows(), a.cols());
  for (std::size_t r = 0; r < row_order.size(); ++r) {
    const std::int64_t sign = a(row_order[r], 0) < 0 ? -1 : 1;
    for (std::size_t c = 0; c < a.cols(); ++c) out.normalized(r, c) = sign * a(row_order[r], c);
  }
  return out;
}

BigVector image_detection_vector(const PlumbingGraph& graph, std::size_t class_index) {
  require_paired(graph);
  const auto classes = arm_classes(graph);
  if (class_index >= classes.size()) throw PreconditionError("arm class index out of range");
  const ArmClass& cls = classes[class_index];
  const Integer p = cls.representative.num();

  PlumbingGraph delta;
  delta.central_weight = Integer(static_cast<unsigned long>(cls.arms.size() / 2));
  for (std::size_t arm : cls.arms) delta.arms.push_back(graph.arms[arm]);
  const KernelVector w = kernel_vector(delta);

  BigVector wbar(graph.vertex_count(), Integer(0));
  wbar[0] = w.entries[0];
  std::size_t offset = 1;
  for (std::size_t arm : cls.arms) {
    const std::size_t len = graph.arms[arm].terms.size();
    for (std::size_t k = 0; k < len; ++k) wbar[graph.arm_start(arm) + k] = w.entries[offset + k];
    offset += len;
  }
  for (auto& v : wbar) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  }
  return wbar;
}

bool torsion_image_test(const IntMatrix& a1, const IntMatrix& a2, const BigVector& v0, const BigVector& x) {
  if (a1.cols() != a2.cols() || !(a1.gram() == a2.gram()))
    throw PreconditionError("A1 and A2 must factor the same Q");
  if (x.size() != a1.cols() || v0.size() != a1.cols()) throw PreconditionError("vector length mismatch");
  Integer dot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += v0[i] * x[i];
  if (dot != 0) return false;

  BigMatrix m(a1.cols(), BigVector(a1.rows() + a2.rows()));
  for (std::size_t v = 0; v < a1.cols(); ++v) {
    for (std::size_t r = 0; r < a1.rows(); ++r) m[v][r] = a1(r, v);
    for (std::size_t r = 0; r < a2.rows(); ++r) m[v][a1.rows() + r] = a2(r, v);
  }
  return in_integer_column_span(m, x);
}

std::optional<ObstructionWitness> coprimality_obstruction(const PlumbingGraph& graph) {
  require_paired(graph);
  const auto classes = arm_classes(graph);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const Integer pi = classes[i].representative.num();
      const Integer pj = classes[j].representative.num();
      const Integer g = gcd(pi, pj);
      if (g == 1) continue;
      ObstructionWitness w;
      w.class_i = i;
      w.class_j = j;
      w.gcd = g;
      w.modulus = pi;
      w.x.assign(graph.vertex_count(), Integer(0));
      w.x[graph.leaf(classes[i].arms.front())] = pi / g;
      w.x[graph.leaf(classes[j].arms.front())] = -(pj / g);
      w.wbar = image_detection_vector(graph, i);
      Integer residue = 0;
      for (std::size_t v = 0; v < w.x.size(); ++v) residue += w.wbar[v] * w.x[v];
      mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), pi.get_mpz_t());
      w.residue = residue;
      const KernelVector v0 = kernel_vector(graph);
      Integer dot = 0;
      for (std::size_t v = 0; v < w.x.size(); ++v) dot += v0.entries[v] * w.x[v];
      if (dot != 0 || residue == 0) throw InternalInconsistency("obstruction witness failed its own checks");
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace dslice
