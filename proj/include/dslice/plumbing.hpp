#pragma once

#include <cstddef>
#include <vector>

#include "dslice/integer_linalg.hpp"
#include "dslice/rational.hpp"
#include "dslice/seifert.hpp"

namespace dslice {

/// Star-shaped plumbing graph: a central vertex of weight e and one linear
/// chain (arm) per exceptional fiber.
///
/// Vertex order used by every matrix-facing operation: the central vertex is
/// vertex 0, then the arms in order, each listed from the vertex adjacent to
/// the center (root) out to its leaf.
struct PlumbingGraph {
  Integer central_weight;
  std::vector<NegCF> arms;

  std::size_t vertex_count() const;
  /// Index of the root vertex of arm i.
  std::size_t arm_start(std::size_t arm) const;
  std::size_t leaf(std::size_t arm) const;
  /// p_i/q_i > 1 carried by arm i.
  Rational arm_fraction(std::size_t arm) const;
  /// Arm that contains vertex v (v must not be the central vertex).
  std::size_t arm_of(std::size_t vertex) const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

/// Central weight e and arm i = neg_cf_expand(p_i/q_i). Y must already be in
/// normalize_positive form.
PlumbingGraph star_plumbing(const SeifertInvariants& y);

/// The Seifert space bounded by the plumbing (inverse of star_plumbing).
SeifertInvariants boundary(const PlumbingGraph& graph);

/// Weighted adjacency matrix: weights on the diagonal, −1 for every edge.
IntMatrix gram_matrix(const PlumbingGraph& graph);

struct KernelVector {
  BigVector entries;
  Integer lcm_value;
};

/// Integer row vector v₀ with v₀Q = 0: lcm(p_i) on the central vertex and
/// (lcm/p_i)·b on arm i, where b is the denominator sequence of the arm.
/// Throws PreconditionError unless ε = 0.
KernelVector kernel_vector(const PlumbingGraph& graph);
/// kernel_vector(star_plumbing(normalize_positive(y))).
KernelVector kernel_vector(const SeifertInvariants& y);

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct SemidefinitenessReport {
  Definiteness kind;
  /// Dimension of the kernel; only meaningful for the two positive kinds.
  std::size_t nullity;
};

/// Exact classification. "Indefinite" covers every symmetric matrix that is
/// not positive semidefinite.
SemidefinitenessReport semidefiniteness(const IntMatrix& q);

}  // namespace dslice
