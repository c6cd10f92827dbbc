#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "dslice/integer_linalg.hpp"
#include "dslice/plumbing.hpp"
#include "dslice/rational.hpp"

namespace dslice {

/// An integer m×n matrix A with AᵀA = Q. Columns are the images of the
/// vertex basis in (Zᵐ, Id).
struct Factorization {
  IntMatrix matrix;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend bool operator<(const Factorization& a, const Factorization& b) { return a.matrix < b.matrix; }
};

struct SearchOptions {
  /// When set, Q must be its Gram matrix and partial embeddings of arm
  /// chains are pruned with Σ q/p <= 1 per coordinate.
  const PlumbingGraph* plumbing = nullptr;
  unsigned threads = 1;
};

/// Lexicographically least representative under signed permutations of the
/// rows of A.
IntMatrix canonical_factorization(const IntMatrix& a);

/// Every factorization AᵀA = Q with A of size m×n, one canonical
/// representative per class, sorted. Throws PreconditionError if Q is not
/// symmetric positive semidefinite or m < rank Q.
std::vector<Factorization> enumerate_factorizations(const IntMatrix& q, std::size_t m,
                                                    const SearchOptions& options = {});

/// Arms grouped by pair class (see pair_class_representative), classes in
/// pair_class_less order and arms ascending inside a class.
struct ArmClass {
  Rational representative;
  std::vector<std::size_t> arms;
};
std::vector<ArmClass> arm_classes(const PlumbingGraph& graph);

struct ArmPartition {
  std::vector<std::array<std::size_t, 2>> classes;

  friend bool operator==(const ArmPartition&, const ArmPartition&) = default;
};

struct CentralRowStructure {
  /// A with rows permuted and signed so the central column reads ℓ ones then zeros.
  IntMatrix normalized;
  ArmPartition partition;
};

/// Γ must be the plumbing of a paired space S²(ℓ; 2ℓ fibers) with ε = 0 and
/// A a factorization of its Gram matrix (PreconditionError otherwise). A
/// factorization without the expected shape raises InternalInconsistency.
CentralRowStructure central_row_structure(const IntMatrix& a, const PlumbingGraph& graph);

/// w̄ for arm class j: the kernel vector of the central vertex plus the arms
/// of class j (central weight reset to the number of pairs), reduced mod p_j
/// and padded with zeros.
BigVector image_detection_vector(const PlumbingGraph& graph, std::size_t class_index);

/// x in the integer column span of (A₁ᵀ | A₂ᵀ). A nonzero v₀·x refutes
/// membership immediately.
bool torsion_image_test(const IntMatrix& a1, const IntMatrix& a2, const BigVector& v0, const BigVector& x);

struct ObstructionWitness {
  BigVector wbar;
  BigVector x;
  Integer modulus;
  Integer residue;
  std::size_t class_i = 0;
  std::size_t class_j = 0;
  Integer gcd;
};

/// The first pair of arm classes with gcd(p_i, p_j) > 1, turned into a
/// vector x with v₀·x = 0 and w̄·x ≢ 0 mod p_i.
std::optional<ObstructionWitness> coprimality_obstruction(const PlumbingGraph& graph);

}  // namespace dslice
