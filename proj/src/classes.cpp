#include "hecke/classes.hpp"

#include <algorithm>
#include <exception>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hecke {

namespace {

bool letters_periodic(const std::vector<Letter>& c) {
  const std::size_t n = c.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) periodic = c[i] == c[(i + d) % n];
    if (periodic) return true;
  }
  return false;
}

int compare_elems(const RingElem& a, const RingElem& b) {
  if (a == b) return 0;
  return sign_of(a - b) == Sign::Negative ? -1 : 1;
}

std::vector<GroupElement> conjugating_lifts(const RingContext& ctx) {
  std::vector<GroupElement> lifts;
  lifts.push_back(generators(ctx).s);
  for (int k = 1; k < ctx.p(); ++k) lifts.push_back(gamma_power(ctx, k));
  return lifts;
}

}  // namespace

bool ClassTuple::operator==(const ClassTuple& o) const {
  return a == o.a && b == o.b && c == o.c && t == o.t;
}

bool ClassTuple::operator<(const ClassTuple& o) const {
  if (a < o.a || o.a < a) return a < o.a;
  if (b < o.b || o.b < b) return b < o.b;
  if (c < o.c || o.c < c) return c < o.c;
  return t < o.t;
}

bool SymTuple::operator==(const SymTuple& o) const {
  return a == o.a && b == o.b && t == o.t;
}

bool SymTuple::operator<(const SymTuple& o) const {
  if (a < o.a || o.a < a) return a < o.a;
  if (b < o.b || o.b < b) return b < o.b;
  return t < o.t;
}

std::size_t CensusResult::paired_count(const std::set<GroupElement>& s) {
  std::size_t n = 0;
  for (const GroupElement& m : s) {
    const GroupElement inv = m.inverse();
    if (s.count(inv) && inv < m) continue;  // counted at the partner
    ++n;
  }
  return n;
}

std::vector<ClassRecord> enumerate_reciprocal_classes(const RingContext& ctx, int max_len) {
  if (max_len < 2) throw std::domain_error("enumerate_reciprocal_classes: max_len >= 2");
  const int p = ctx.p();

  std::set<CyclicWord> seen;
  std::vector<ClassRecord> records;

  // cyclically reduced hyperbolic words alternate iota/gamma with even
  // length; the iota-start pattern covers every rotation class
  for (int len = 2; len <= max_len; len += 2) {
    const int slots = len / 2;
    std::vector<int> exps(slots, 1);
    for (;;) {
      std::vector<Letter> letters;
      for (int i = 0; i < slots; ++i) {
        letters.push_back(Letter::iota());
        letters.push_back(Letter::gamma(exps[i]));
      }
      const Word w = Word::from_letters(std::move(letters), p);
      const CyclicWord key = cyclic_reduce(w, p).cyclic;
      if (key.size() == static_cast<std::size_t>(len) && seen.insert(key).second) {
        const Word key_word = Word::from_letters(key.letters(), p);
        GroupElement rep = evaluate(key_word, ctx);
        if (classify(rep).kind == ElementKind::Hyperbolic) {
          ClassRecord rec{key,
                          rep,
                          abs_embedding(rep.trace()),
                          !letters_periodic(key.letters()),
                          are_conjugate(key_word, inverse_word(key_word, p), p).conjugate,
                          std::nullopt,
                          std::nullopt,
                          {}};
          records.push_back(std::move(rec));
        }
      }
      int pos = slots - 1;
      while (pos >= 0 && exps[pos] == p - 1) exps[pos--] = 1;
      if (pos < 0) break;
      ++exps[pos];
    }
  }

  std::sort(records.begin(), records.end(), [](const ClassRecord& x, const ClassRecord& y) {
    const int c = compare_elems(x.trace, y.trace);
    if (c != 0) return c < 0;
    return x.key < y.key;
  });
  return records;
}

CensusResult census(const ClassRecord& cls, int depth) {
  const RingContext& ctx = cls.rep.context();
  const std::vector<GroupElement> lifts = conjugating_lifts(ctx);

  CensusResult res;
  auto note = [&res](const GroupElement& m) {
    if (is_symmetric_rep(m)) res.symmetric.insert(m);
    const FixedPointRatio theta = fixed_point_ratio(m);
    const bool one = theta.is_one_value();
    if (one || theta.is_cos_pi_over_p()) res.p_reciprocal.insert(m);
    if (one) res.symmetric_p_reciprocal.insert(m);
  };

  std::set<GroupElement> visited{cls.rep};
  std::vector<GroupElement> frontier{cls.rep};
  note(cls.rep);

  for (int level = 1; level <= depth; ++level) {
    if (level == depth) {
      res.prev_symmetric = res.symmetric.size();
      res.prev_p_reciprocal = res.p_reciprocal.size();
      res.prev_symmetric_p_reciprocal = res.symmetric_p_reciprocal.size();
    }
    std::vector<GroupElement> next;
    for (const GroupElement& m : frontier) {
      for (const GroupElement& lift : lifts) {
        GroupElement c = conjugate(lift, m);
        if (!visited.insert(c).second) continue;
        note(c);
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  res.depth_used = depth;
  res.stabilized = res.symmetric.size() == res.prev_symmetric &&
                   res.p_reciprocal.size() == res.prev_p_reciprocal &&
                   res.symmetric_p_reciprocal.size() == res.prev_symmetric_p_reciprocal;
  return res;
}

CaseTag classify_case(const ClassRecord& cls) {
  if (!cls.reciprocal)
    throw std::invalid_argument("classify_case: requires a reciprocal class");
  const RingContext& ctx = cls.rep.context();
  const int p = ctx.p();
  if (p % 2 != 0) return CaseTag::OddDefault;

  // reciprocator types live in two cosets of the centralizer, generated by
  // the primitive root of the class; the root is the minimal period of the key
  const std::vector<Letter>& key = cls.key.letters();
  std::size_t period = key.size();
  for (std::size_t d = 1; d < key.size(); ++d) {
    if (key.size() % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < key.size() && periodic; ++i)
      periodic = key[i] == key[(i + d) % key.size()];
    if (periodic) {
      period = d;
      break;
    }
  }
  const GroupElement root = evaluate(
      Word::from_letters({key.begin(), key.begin() + period}, p), ctx);

  const Reciprocator first = find_reciprocator(cls.rep);
  const GroupElement second = root * first.matrix;  // the other coset
  const ReciprocatorType t1 = reciprocator_type(first.matrix);
  const ReciprocatorType t2 = reciprocator_type(second);
  if (t1 == ReciprocatorType::IotaClass && t2 == ReciprocatorType::IotaClass)
    return CaseTag::EvenIotaOnly;
  if (t1 == ReciprocatorType::GammaClass && t2 == ReciprocatorType::GammaClass)
    return CaseTag::EvenGammaOnly;

  // mixed: the class contains a power of iota gamma^(p/2) only if the power
  // with matching cyclic length does
  const std::size_t len = cls.key.size();
  if (len % 2 == 0) {
    const std::vector<int> blocks(len / 2, p / 2);
    const Word power = word_from_vblocks(blocks, p);
    if (cyclic_reduce(power, p).cyclic == cls.key)
      return CaseTag::EvenBothWithIotaGammaPower;
  }
  return CaseTag::EvenBothNoIotaGammaPower;
}

std::optional<ClassTuple> element_to_tuple(const GroupElement& g) {
  const RingContext& ctx = g.context();
  const Sign trace_sign = sign_of(g.trace());
  if (trace_sign == Sign::Zero) return std::nullopt;
  const bool flip = trace_sign == Sign::Negative;
  auto lift = [&](const RingElem& e) { return flip ? -e : e; };

  const RingElem m11 = lift(g.m11()), m12 = lift(g.m12());
  const RingElem m21 = lift(g.m21()), m22 = lift(g.m22());
  RingElem t = m11 + m22;
  RingElem b = m22 - m11;
  RingElem a = m12;
  RingElem c = m21;
  if (sign_of(a) != Sign::Positive || sign_of(c) != Sign::Positive) return std::nullopt;

  const auto g1 = pseudo_gcd(m11, c);
  if (!g1.has_value() || !g1->is_one()) return std::nullopt;
  const auto g2 = pseudo_gcd(m22, a);
  if (!g2.has_value() || !g2->is_one()) return std::nullopt;

  if (!(a == c || (c - a) * Int(2) == b * RingElem::lambda(ctx))) return std::nullopt;
  return ClassTuple{std::move(a), std::move(b), std::move(c), std::move(t)};
}

GroupElement tuple_to_matrix(const ClassTuple& tu) {
  const RingContext& ctx = tu.a.context();
  if (sign_of(tu.a) != Sign::Positive || sign_of(tu.c) != Sign::Positive ||
      sign_of(tu.t) != Sign::Positive)
    throw InvalidTupleError("tuple_to_matrix: a, c, t must be positive");
  const RingElem d = tu.a * tu.c * Int(4) + tu.b * tu.b;
  if (!(tu.t * tu.t - d == RingElem::integer(ctx, 4)))
    throw InvalidTupleError("tuple_to_matrix: t^2 - (4ac + b^2) != 4");
  const auto m11 = halve(tu.t - tu.b);
  const auto m22 = halve(tu.t + tu.b);
  if (!m11.has_value() || !m22.has_value())
    throw InvalidTupleError("tuple_to_matrix: (t +- b)/2 not integral");
  const auto g1 = pseudo_gcd(*m11, tu.c);
  const auto g2 = pseudo_gcd(*m22, tu.a);
  if (!g1.has_value() || !g1->is_one() || !g2.has_value() || !g2->is_one())
    throw InvalidTupleError("tuple_to_matrix: gcd conditions fail");
  if (!(tu.a == tu.c || (tu.c - tu.a) * Int(2) == tu.b * RingElem::lambda(ctx)))
    throw InvalidTupleError("tuple_to_matrix: branch condition fails");
  return GroupElement(*m11, tu.a, tu.c, *m22);
}

namespace {

std::optional<std::size_t> predicted_fiber(const ClassRecord& rec, int p) {
  if (!rec.case_tag.has_value()) return std::nullopt;
  switch (*rec.case_tag) {
    case CaseTag::OddDefault:
    case CaseTag::EvenIotaOnly:
      return 2;
    case CaseTag::EvenGammaOnly:
      return static_cast<std::size_t>(p);
    case CaseTag::EvenBothNoIotaGammaPower:
      return static_cast<std::size_t>(p / 2 + 1);
    case CaseTag::EvenBothWithIotaGammaPower:
      return static_cast<std::size_t>(p / 2);
  }
  return std::nullopt;
}

}  // namespace

FiberReport verify_fibers(const RingContext& ctx, std::vector<ClassRecord>& classes,
                          int depth) {
  FiberReport report;
  report.per_class.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ClassRecord& rec = classes[i];
    if (!rec.reciprocal || !rec.primitive) continue;
    if (!rec.census.has_value()) rec.census = census(rec, depth);

    rec.tuples.clear();
    auto collect = [&rec](const std::set<GroupElement>& s) {
      for (const GroupElement& m : s) {
        auto tu = element_to_tuple(m);
        if (tu.has_value()) rec.tuples.insert(*std::move(tu));
      }
    };
    collect(rec.census->symmetric);
    collect(rec.census->p_reciprocal);

    FiberCheck fc;
    fc.fiber_size = rec.tuples.size();
    fc.predicted = predicted_fiber(rec, ctx.p());
    fc.match = fc.predicted.has_value() && fc.fiber_size == *fc.predicted;
    if (!fc.match && !rec.census->stabilized) fc.inconclusive = true;
    if (fc.match)
      ++report.matches;
    else if (fc.inconclusive)
      ++report.inconclusive;
    else
      ++report.mismatches;
    report.per_class[i] = std::move(fc);
  }
  return report;
}

std::map<std::size_t, std::set<SymTuple>> sym_tuples(
    const RingContext& ctx, const std::vector<ClassRecord>& classes, int depth) {
  if (ctx.p() % 2 == 0)
    throw std::invalid_argument("sym_tuples: defined for odd p only");
  std::map<std::size_t, std::set<SymTuple>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ClassRecord& rec = classes[i];
    if (!rec.reciprocal || !rec.primitive) continue;
    CensusResult local;
    const CensusResult* cen = rec.census.has_value() ? &*rec.census : nullptr;
    if (cen == nullptr) {
      local = census(rec, depth);
      cen = &local;
    }
    std::set<SymTuple> fiber;
    for (const GroupElement& m : cen->symmetric) {
      const Sign trace_sign = sign_of(m.trace());
      const bool flip = trace_sign == Sign::Negative;
      auto lift = [&](const RingElem& e) { return flip ? -e : e; };
      RingElem a = lift(m.m12());
      RingElem t = lift(m.trace());
      RingElem b = lift(m.m22()) - lift(m.m11());
      if (sign_of(a) != Sign::Positive) continue;
      const auto g1 = pseudo_gcd(lift(m.m11()), a);
      const auto g2 = pseudo_gcd(lift(m.m22()), a);
      if (!g1.has_value() || !g1->is_one() || !g2.has_value() || !g2->is_one()) continue;
      fiber.insert(SymTuple{std::move(a), std::move(b), std::move(t)});
    }
    out.emplace(i, std::move(fiber));
  }
  return out;
}

Survey run_survey(const RingContext& ctx, const SurveyOptions& opts) {
  Survey survey;
  survey.records = enumerate_reciprocal_classes(ctx, opts.max_len);

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < survey.records.size(); ++i)
    if (survey.records[i].reciprocal) todo.push_back(i);

  std::exception_ptr failure;
  const bool parallel = opts.exec == Execution::Parallel;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long ii = 0; ii < static_cast<long>(todo.size()); ++ii) {
    try {
      ClassRecord& rec = survey.records[todo[ii]];
      if (rec.primitive) rec.census = census(rec, opts.depth);
      rec.case_tag = classify_case(rec);
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  survey.fibers = verify_fibers(ctx, survey.records, opts.depth);
  return survey;
}

}  // namespace hecke
