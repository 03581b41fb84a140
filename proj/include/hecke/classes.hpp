// Conjugacy-class survey machinery: bounded enumeration of hyperbolic
// classes, the symmetric / p-reciprocal census of a class, reciprocator case
// classification, and the quadruple/triple parametrizations with fiber
// verification.
#pragma once

#include <map>
#include <set>

#include "hecke/reciprocity.hpp"

namespace hecke {

class InvalidTupleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CaseTag {
  OddDefault,
  EvenIotaOnly,
  EvenGammaOnly,
  EvenBothNoIotaGammaPower,
  EvenBothWithIotaGammaPower,
};

// Quadruple (a, b, c, t): a, c, t positive, t^2 - (4ac + b^2) = 4, both
// (t +- b)/2 integral, column gcds 1, and a = c or (c-a)*2 = b*lambda.
struct ClassTuple {
  RingElem a, b, c, t;

  bool operator==(const ClassTuple& o) const;
  bool operator<(const ClassTuple& o) const;
};

// Triple (a, b, t) for the symmetric-only parametrization at odd p.
struct SymTuple {
  RingElem a, b, t;

  bool operator==(const SymTuple& o) const;
  bool operator<(const SymTuple& o) const;
};

struct CensusResult {
  std::set<GroupElement> symmetric;
  std::set<GroupElement> p_reciprocal;             // theta in {cos(pi/p), 1}
  std::set<GroupElement> symmetric_p_reciprocal;   // theta = 1
  int depth_used = 0;
  bool stabilized = false;  // counts unchanged from depth_used - 1
  std::size_t prev_symmetric = 0;
  std::size_t prev_p_reciprocal = 0;
  std::size_t prev_symmetric_p_reciprocal = 0;

  /// Number of {m, m^-1} pairs meeting the set (each pair counted once).
  static std::size_t paired_count(const std::set<GroupElement>& s);
};

struct ClassRecord {
  CyclicWord key;
  GroupElement rep;
  RingElem trace;  // embedding-positive representative
  bool primitive = false;
  bool reciprocal = false;
  std::optional<CaseTag> case_tag;
  std::optional<CensusResult> census;
  std::set<ClassTuple> tuples;
};

/// All hyperbolic conjugacy classes with a cyclically reduced word of length
/// <= max_len, keyed by rotation-minimal cyclic word, ordered by trace
/// embedding then key.
std::vector<ClassRecord> enumerate_reciprocal_classes(const RingContext& ctx, int max_len);

/// Conjugates x rep x^-1 over all words of length <= depth; collects the
/// distinct symmetric, p-reciprocal and symmetric-p-reciprocal matrices.
CensusResult census(const ClassRecord& cls, int depth);

/// Reciprocator-type case of a reciprocal class; the iota-gamma-power
/// subcase is decided against the single power with matching key length.
CaseTag classify_case(const ClassRecord& cls);

/// The quadruple of the positive-trace lift when all invariants hold.
std::optional<ClassTuple> element_to_tuple(const GroupElement& g);

/// [[ (t-b)/2, a ], [ c, (t+b)/2 ]]; throws InvalidTupleError.
GroupElement tuple_to_matrix(const ClassTuple& tu);

struct FiberCheck {
  std::size_t fiber_size = 0;
  std::optional<std::size_t> predicted;
  bool match = false;
  bool inconclusive = false;  // mismatch against an unstabilized census
};

struct FiberReport {
  std::vector<std::optional<FiberCheck>> per_class;  // aligned with records
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t inconclusive = 0;
};

/// Collects the tuple fiber of every censused reciprocal class into
/// record.tuples and compares sizes with the case prediction
/// (2 / 2 / p / m+1 / m).
FiberReport verify_fibers(const RingContext& ctx, std::vector<ClassRecord>& classes,
                          int depth);

/// Symmetric-only triple fibers, odd p only (rejects even p). Keys are
/// record indices.
std::map<std::size_t, std::set<SymTuple>> sym_tuples(
    const RingContext& ctx, const std::vector<ClassRecord>& classes, int depth);

enum class Execution { Serial, Parallel };

struct SurveyOptions {
  int max_len = 8;
  int depth = 10;
  Execution exec = Execution::Parallel;
};

struct Survey {
  std::vector<ClassRecord> records;
  FiberReport fibers;
};

/// Full pipeline: enumerate, census + case per reciprocal class (parallel
/// across classes under Execution::Parallel, identical output either way),
/// then fiber verification.
Survey run_survey(const RingContext& ctx, const SurveyOptions& opts);

}  // namespace hecke
