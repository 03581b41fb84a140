// Determinant-1 matrices over Z[lambda_p] up to sign, their classification by
// trace, Gamma_p membership via the pseudo-Euclidean gcd, gamma_p powers, and
// the fixed-point ratio invariant.
#pragma once

#include <optional>

#include "hecke/ring.hpp"

namespace hecke {

// Projective matrix: M and -M are identified. The stored lift is canonical:
// the first entry in row-major order with nonzero sign is positive.
class GroupElement {
 public:
  GroupElement(RingElem m11, RingElem m12, RingElem m21, RingElem m22);

  static GroupElement identity(const RingContext& ctx);

  const RingElem& m11() const { return e_[0]; }
  const RingElem& m12() const { return e_[1]; }
  const RingElem& m21() const { return e_[2]; }
  const RingElem& m22() const { return e_[3]; }
  const RingContext& context() const { return e_[0].context(); }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(long n) const;

  /// Trace of the stored canonical lift (sign is a lift artifact).
  RingElem trace() const { return e_[0] + e_[3]; }

  bool is_identity() const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;  // container ordering

 private:
  RingElem e_[4];

  void canonicalize();
};

/// x g x^-1.
GroupElement conjugate(const GroupElement& x, const GroupElement& g);

struct Generators {
  GroupElement s;  // lift of the inversion z -> -1/z
  GroupElement t;  // lift of the translation z -> z + lambda_p
  GroupElement g;  // lift of gamma_p = iota alpha_p, equal to s*t
};

Generators generators(const RingContext& ctx);

enum class ElementKind { Elliptic, Parabolic, Hyperbolic };

struct ElementClass {
  ElementKind kind;
  std::optional<int> order;  // elliptic only, when found within 2p powers
};

/// Classification by sign of trace^2 - 4.
ElementClass classify(const GroupElement& g);

enum class Membership { Member, NotMember, Undetermined };

/// Prop.-style criterion: member iff both column gcds (m11,m21), (m12,m22)
/// equal 1. A non-terminating gcd chain yields Undetermined.
Membership is_member(const GroupElement& g);

struct GammaEntries {
  RingElem prev;  // a_{k-1}
  RingElem cur;   // a_k
  RingElem next;  // a_{k+1}
};

/// The entry recurrence a_{k+1} = -a_{k-1} + lambda_p a_k, a_0 = 0, a_1 = 1.
GammaEntries gamma_entries(const RingContext& ctx, long k);

/// gamma_p^k computed from the recurrence, as the projective canonical form
/// of [[-a_{k-1}, -a_k], [a_k, a_{k+1}]].
GroupElement gamma_power(const RingContext& ctx, long k);

// The invariant theta = (b-c)/(a-d) as a projective pair, with the two
// degenerate branches. Equality of finite values is cross-multiplicative.
class FixedPointRatio {
 public:
  enum class Kind { Finite, Infinity, DegenerateOne };

  static FixedPointRatio finite(RingElem num, RingElem den);
  static FixedPointRatio infinity();
  static FixedPointRatio degenerate_one();

  Kind kind() const { return kind_; }
  const RingElem& num() const;
  const RingElem& den() const;

  bool equals(const FixedPointRatio& o) const;
  /// True when o equals the negation of this ratio (finite branches).
  bool equals_negated(const FixedPointRatio& o) const;

  bool is_zero_value() const;
  bool is_one_value() const;
  bool is_cos_pi_over_p() const;

 private:
  FixedPointRatio(Kind k, std::optional<RingElem> n, std::optional<RingElem> d)
      : kind_(k), num_(std::move(n)), den_(std::move(d)) {}

  Kind kind_;
  std::optional<RingElem> num_, den_;
};

FixedPointRatio fixed_point_ratio(const GroupElement& g);

/// m12 == m21 on the canonical lift (well-defined projectively).
bool is_symmetric_rep(const GroupElement& g);

}  // namespace hecke
