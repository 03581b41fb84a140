// Exact arithmetic in Z[lambda_p], lambda_p = 2cos(pi/p), together with the
// sign oracle for the real embedding and the pseudo-Euclidean division/gcd
// that decides membership questions downstream.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

/// Monic minimal polynomial of 2cos(pi/p) over Q, little-endian coefficients,
/// degree phi(2p)/2. Rejects p < 3.
std::vector<Int> minimal_polynomial(int p);

struct RatInterval {
  Rat lo;
  Rat hi;
};

// Dyadic enclosure [lo, hi] / 2^exp; the working representation for all
// adaptive refinement (pure integer arithmetic).
struct DyadicInterval {
  Int lo;
  Int hi;
  long exp;
};

// Shared per-p state: the minimal polynomial and a verified rational
// enclosure of lambda_p that isolates it from its Galois conjugates.
// Immutable after construction; safe to share across threads.
class RingContext {
 public:
  explicit RingContext(int p, int max_iterations = 256);

  int p() const { return p_; }
  int degree() const { return degree_; }
  const std::vector<Int>& min_poly() const { return min_poly_; }
  RatInterval lambda_interval() const { return enclosure_; }

  int max_iterations() const { return max_iterations_; }
  void set_max_iterations(int cap) { max_iterations_ = cap; }

  /// Sign of (lambda_p - q), decided exactly via the minimal polynomial.
  Sign sign_lambda_minus(const Rat& q) const;

  /// One bisection step on a local copy of the enclosure.
  void refine(RatInterval& iv) const;

  DyadicInterval dyadic_enclosure() const;
  /// `steps` bisection refinements on a local copy.
  void refine_dyadic(DyadicInterval& iv, long steps) const;

 private:
  int p_;
  int degree_;
  std::vector<Int> min_poly_;
  std::vector<Rat> min_poly_rat_;
  RatInterval enclosure_;   // tight, lambda strictly inside for p >= 4
  Int enc_lo_, enc_hi_;     // the same enclosure in dyadic form
  long enc_exp_ = 0;
  Rat isolation_floor_;     // all other roots of min_poly lie strictly below
  int max_iterations_;

  Rat eval_min_poly(const Rat& x) const;
};

// Element of Z[lambda_p] as an integer coefficient vector in the power basis
// of lambda_p. Canonical: always reduced mod the minimal polynomial, so
// coefficient-wise equality is ring equality.
class RingElem {
 public:
  RingElem() : ctx_(nullptr) {}
  RingElem(const RingContext& ctx, std::vector<Int> coeffs);

  static RingElem zero(const RingContext& ctx);
  static RingElem one(const RingContext& ctx);
  static RingElem integer(const RingContext& ctx, Int v);
  static RingElem lambda(const RingContext& ctx);

  const RingContext& context() const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const Int& k) const;

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }
  // Lexicographic coefficient order; used only as a container key.
  bool operator<(const RingElem& o) const;

 private:
  const RingContext* ctx_;
  std::vector<Int> coeffs_;  // length == ctx_->degree()

  void require_same_context(const RingElem& o) const;
};

/// Sign of the real number obtained by the embedding lambda_p = 2cos(pi/p).
/// Zero exactly when the element is zero; otherwise decided by adaptive
/// refinement of the lambda enclosure.
Sign sign_of(const RingElem& x);

/// Embedding-positive representative |x|.
RingElem abs_embedding(const RingElem& x);

struct PseudoDivision {
  Int n;
  RingElem r;
};

/// a = b*(n*lambda_p) + r with |r| <= |b*lambda_p|/2 under the embedding; n
/// is the nearest integer to a/(b*lambda_p), boundary ties broken so r >= 0.
/// Throws std::domain_error when b = 0.
PseudoDivision pseudo_divide(const RingElem& a, const RingElem& b);

/// Remainder chain of pseudo_divide until the remainder vanishes; returns the
/// embedding-positive final remainder. (a,0) := |a|. std::nullopt signals the
/// chain exceeded the context iteration cap (NonTermination).
std::optional<RingElem> pseudo_gcd(const RingElem& a, const RingElem& b);

/// y with 2y = x when every coefficient is even, std::nullopt otherwise.
std::optional<RingElem> halve(const RingElem& x);

// Quotient num/den with a plain positive integer denominator, kept canonical
// (den > 0, gcd(den, content(num)) = 1).
class FieldElem {
 public:
  FieldElem(RingElem num, Int den);
  explicit FieldElem(RingElem num) : FieldElem(std::move(num), 1) {}

  const RingElem& num() const { return num_; }
  const Int& den() const { return den_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  RingElem num_;
  Int den_;
};

}  // namespace hecke
