#include "dslice/plumbing.hpp"

#include "dslice/errors.hpp"

namespace dslice {

std::size_t PlumbingGraph::vertex_count() const {
  std::size_t n = 1;
  for (const auto& arm : arms) n += arm.terms.size();
  return n;
}

std::size_t PlumbingGraph::arm_start(std::size_t arm) const {
  std::size_t index = 1;
  for (std::size_t i = 0; i < arm; ++i) index += arms[i].terms.size();
  return index;
}

std::size_t PlumbingGraph::leaf(std::size_t arm) const { return arm_start(arm) + arms[arm].terms.size() - 1; }

Rational PlumbingGraph::arm_fraction(std::size_t arm) const { return neg_cf_eval(arms[arm]); }

std::size_t PlumbingGraph::arm_of(std::size_t vertex) const {
  if (vertex == 0) throw PreconditionError("the central vertex is not on an arm");
  std::size_t index = 1;
  for (std::size_t i = 0; i < arms.size(); ++i) {
    index += arms[i].terms.size();
    if (vertex < index) return i;
  }
  throw PreconditionError("vertex index out of range");
}

PlumbingGraph star_plumbing(const SeifertInvariants& y) {
  if (y.e() < 0) throw PreconditionError("star_plumbing needs a normalized space (e >= 0)");
  PlumbingGraph graph;
  graph.central_weight = y.e();
  for (const auto& c : y.coeffs()) {
    if (c <= Rational(1)) {
      throw PreconditionError("star_plumbing needs every coefficient > 1, got " + c.to_string());
    }
    graph.arms.push_back(neg_cf_expand(c));
  }
  return graph;
}

SeifertInvariants boundary(const PlumbingGraph& graph) {
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < graph.arms.size(); ++i) coeffs.push_back(graph.arm_fraction(i));
  return SeifertInvariants(graph.central_weight, std::move(coeffs));
}

IntMatrix gram_matrix(const PlumbingGraph& graph) {
  const std::size_t n = graph.vertex_count();
  IntMatrix q(n, n);
  q(0, 0) = to_int64(graph.central_weight);
  std::size_t v = 1;
  for (const auto& arm : graph.arms) {
    for (std::size_t h = 0; h < arm.terms.size(); ++h, ++v) {
      q(v, v) = to_int64(arm.terms[h]);
      const std::size_t parent = h == 0 ? 0 : v - 1;
      q(v, parent) = q(parent, v) = -1;
    }
  }
  return q;
}

KernelVector kernel_vector(const PlumbingGraph& graph) {
  if (euler_number(boundary(graph)) != Rational(0)) {
    throw PreconditionError("kernel_vector needs euler number 0; the plumbing form is nonsingular");
  }
  KernelVector kv;
  kv.lcm_value = 1;
  for (std::size_t i = 0; i < graph.arms.size(); ++i) kv.lcm_value = lcm(kv.lcm_value, graph.arm_fraction(i).num());

  kv.entries.assign(graph.vertex_count(), 0);
  kv.entries[0] = kv.lcm_value;
  for (std::size_t i = 0; i < graph.arms.size(); ++i) {
    const Integer scale = kv.lcm_value / graph.arm_fraction(i).num();
    const auto b = denominator_sequence(graph.arms[i]);
    const std::size_t start = graph.arm_start(i);
    for (std::size_t h = 0; h < graph.arms[i].terms.size(); ++h) kv.entries[start + h] = scale * b[h];
  }

  const IntMatrix q = gram_matrix(graph);
  for (std::size_t j = 0; j < q.cols(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < q.rows(); ++i) sum += kv.entries[i] * Integer(static_cast<long>(q(i, j)));
    if (sum != 0) throw InternalInconsistency("kernel vector construction does not annihilate Q");
  }
  return kv;
}

KernelVector kernel_vector(const SeifertInvariants& y) { return kernel_vector(star_plumbing(normalize_positive(y))); }

SemidefinitenessReport semidefiniteness(const IntMatrix& q) {
  const Inertia in = inertia(q);
  if (in.negative > 0) return {Definiteness::Indefinite, in.zero};
  if (in.zero == 0) return {Definiteness::PositiveDefinite, 0};
  return {Definiteness::PositiveSemidefinite, in.zero};
}

}  // namespace dslice
