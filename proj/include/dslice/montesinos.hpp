#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dslice/classifier.hpp"
#include "dslice/rational.hpp"
#include "dslice/seifert.hpp"

namespace dslice {

/// M(e; p₁/q₁, …, p_k/q_k): an e-box followed by k rational tangles,
/// closed up cyclically. Tangles with p = 0 are rejected.
class MontesinosLink {
 public:
  MontesinosLink() = default;
  MontesinosLink(Integer e, std::vector<Rational> tangles);

  const Integer& e() const { return e_; }
  const std::vector<Rational>& tangles() const { return tangles_; }

  friend bool operator==(const MontesinosLink&, const MontesinosLink&) = default;

 private:
  Integer e_ = 0;
  std::vector<Rational> tangles_;
};

/// P(a₁, …, a_n) = M(0; a₁/1, …, a_n/1).
MontesinosLink pretzel(const std::vector<Integer>& strands);

std::string to_string(const MontesinosLink& link);

enum class Endpoint { NW = 0, NE = 1, SW = 2, SE = 3 };

struct EndpointPairing {
  enum class Kind { Horizontal, Vertical, Diagonal };
  Kind kind;
  std::array<std::array<Endpoint, 2>, 2> pairs;
};

/// Endpoint pairing of the rational tangle p/q: p even gives horizontal
/// strands (NW–NE, SW–SE), q even vertical (NW–SW, NE–SE), both odd
/// diagonal (NW–SE, NE–SW). Throws PreconditionError if both are even.
EndpointPairing tangle_pairing(const Integer& p, const Integer& q);

/// Counts components by union-find on tangle endpoints. The e-box is the
/// rational tangle e/1 and the fiber p/q is drawn as the rational tangle q/p.
int component_count(const MontesinosLink& link);

/// S²(e; p₁/q₁, …). A tangle with p = ±1 is folded into e.
SeifertInvariants double_branched_cover(const MontesinosLink& link);

enum class Status { Yes, No, Unknown };
std::string to_string(Status s);

/// YES when e = 0 and the tangles read t₁, …, t_k, −t_k, …, −t₁ with at most
/// one even |p_i| among t₁, …, t_k.
Status weak_ds_certificate(const MontesinosLink& link);

/// YES when e = 0 and the tangles are m copies of r and m of −r (any order)
/// for some r with odd numerator.
Status mutant_weak_ds(const MontesinosLink& link);

struct StrongVerdict {
  Status status = Status::Unknown;
  /// The cover's failed embedding when status is No.
  std::optional<EmbedVerdict> witness;
  std::string reason;
};

/// NO when the link has two components and its cover does not embed in a
/// homology S¹×S³ with H₁ surjecting; YES for M(0; r, −r, …, r, −r) with odd
/// numerator; otherwise UNKNOWN.
StrongVerdict strong_ds_verdict(const MontesinosLink& link);

struct QuasiOrientationStatus {
  std::string orientation;
  Status status;
};

struct SliceVerdict {
  int components = 0;
  std::vector<QuasiOrientationStatus> weak_ds;
  StrongVerdict strong;
  std::vector<std::string> reasons;
};

SliceVerdict slice_verdict(const MontesinosLink& link);

enum class PretzelClass { SliceAndWeaklyDoublySlice, NotSlice };

/// Two-component four-strand pretzel links: slice (and weakly doubly slice
/// with both quasi-orientations) exactly when some rotation or reversal of
/// the strands reads (a, b, −b, −a) with at most one of a, b even. Throws
/// PreconditionError unless the link has two components.
PretzelClass classify_4strand_pretzel(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

}  // namespace dslice
