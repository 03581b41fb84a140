// Reciprocity decisions: the word-based verdict, construction and exact
// verification of involutive reciprocators, reciprocator class (iota vs
// gamma^(p/2)), the canonical-theta conjugate search, and the Phi identity.
#pragma once

#include "hecke/words.hpp"

namespace hecke {

class UndeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SearchExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnInvolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateThetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReciprocalKind { Involution, HyperbolicReciprocal, NotReciprocal };
enum class ReciprocatorType { IotaClass, GammaClass };
enum class CanonicalTheta { Zero, One, CosPiOverP };

struct Reciprocator {
  Word word;
  GroupElement matrix;
};

struct ThetaWitness {
  CanonicalTheta value;
  Word witness;  // conjugating word x; x g x^-1 attains the canonical theta
};

struct ReciprocityVerdict {
  bool reciprocal = false;
  ReciprocalKind kind = ReciprocalKind::NotReciprocal;
  std::optional<Reciprocator> reciprocator;
  std::optional<ReciprocatorType> reciprocator_type;
  std::optional<ThetaWitness> theta;
  bool theta_search_exhausted = false;
};

/// Full reciprocity decision. Involutions are reciprocal; parabolics and
/// elliptic non-involutions are not; hyperbolics are decided by cyclic-word
/// equality of the word with its inverse. Positive hyperbolic verdicts carry
/// a verified involutive reciprocator and the canonical theta when the
/// conjugate search succeeds within theta_depth.
/// Throws NotAMemberError / UndeterminedError on the membership precondition.
ReciprocityVerdict is_reciprocal(const GroupElement& g, int theta_depth = 10);

/// Involutive reciprocator h with h g h^-1 = g^-1 and h^2 = 1, both verified
/// by exact matrix arithmetic. Constructive attempt from the conjugacy
/// witness first, breadth-first fallback second.
Reciprocator find_reciprocator(const GroupElement& g);

/// IotaClass when the involution cyclically reduces to iota, GammaClass for
/// gamma^(p/2) (even p).
ReciprocatorType reciprocator_type(const GroupElement& h);

/// Searches conjugates x g x^-1 over words x of length <= depth (length,
/// then lexicographic) for a fixed-point ratio of 0 (any p) or 1 / cos(pi/p)
/// (even p only). nullopt reports depth exhaustion.
std::optional<ThetaWitness> canonical_theta(const GroupElement& g, int depth);

/// For finite theta = n/d with |theta| < 1: checks the cleared identity
/// M g~ adj(M) = +-(d^2 - n^2) g~^-1 with M = [[n, d], [-d, -n]].
bool phi_identity_check(const GroupElement& g);

}  // namespace hecke
