#include "hecke/words.hpp"

#include <algorithm>

namespace hecke {

namespace {

void push_normalized(std::vector<Letter>& out, Letter l, int p) {
  if (!out.empty()) {
    const Letter top = out.back();
    if (l.is_iota() && top.is_iota()) {
      out.pop_back();
      return;
    }
    if (!l.is_iota() && !top.is_iota()) {
      out.pop_back();
      const int k = (top.exponent() + l.exponent()) % p;
      if (k != 0) push_normalized(out, Letter::gamma(k), p);
      return;
    }
  }
  out.push_back(l);
}

std::vector<Letter> rotate(const std::vector<Letter>& v, std::size_t r) {
  std::vector<Letter> out(v.begin() + r, v.end());
  out.insert(out.end(), v.begin(), v.begin() + r);
  return out;
}

constexpr long long kMaxWordLetters = 1 << 24;

void append_t_power(std::vector<Letter>& out, const Int& n, int p) {
  long long k;
  try {
    k = n.convert_to<long long>();
  } catch (...) {
    throw NotAMemberError("matrix_to_word: quotient out of range");
  }
  if (std::llabs(k) > kMaxWordLetters)
    throw NotAMemberError("matrix_to_word: word too long");
  // T = iota gamma, T^-1 = gamma^(p-1) iota
  if (k >= 0) {
    for (long long i = 0; i < k; ++i) {
      out.push_back(Letter::iota());
      out.push_back(Letter::gamma(1));
    }
  } else {
    for (long long i = 0; i < -k; ++i) {
      out.push_back(Letter::gamma(p - 1));
      out.push_back(Letter::iota());
    }
  }
}

}  // namespace

Word Word::from_letters(std::vector<Letter> letters, int p) {
  if (p < 3) throw std::domain_error("Word: requires p >= 3");
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.is_iota()) {
      push_normalized(out, l, p);
    } else {
      const int k = ((l.code() % p) + p) % p;
      if (k != 0) push_normalized(out, Letter::gamma(k), p);
    }
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

bool Word::operator<(const Word& o) const {
  return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                      o.letters_.begin(), o.letters_.end());
}

Word concat(const Word& a, const Word& b, int p) {
  std::vector<Letter> all(a.letters());
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return Word::from_letters(std::move(all), p);
}

Word inverse_word(const Word& w, int p) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->is_iota() ? Letter::iota() : Letter::gamma(p - it->exponent()));
  return Word::from_letters(std::move(out), p);
}

GroupElement evaluate(const Word& w, const RingContext& ctx) {
  const Generators gen = generators(ctx);
  GroupElement acc = GroupElement::identity(ctx);
  for (const Letter& l : w.letters())
    acc = acc * (l.is_iota() ? gen.s : gamma_power(ctx, l.exponent()));
  return acc;
}

Word matrix_to_word(const GroupElement& g) {
  const RingContext& ctx = g.context();
  const int p = ctx.p();
  const Generators gen = generators(ctx);
  const RingElem lam = RingElem::lambda(ctx);

  std::vector<Int> quotients;
  GroupElement m = g;
  const int cap = ctx.max_iterations();
  int iter = 0;
  while (!m.m21().is_zero()) {
    if (++iter > cap) throw NotAMemberError("matrix_to_word: reduction did not halt");
    const PseudoDivision d = pseudo_divide(m.m11(), m.m21());
    const GroupElement t_negn(RingElem::one(ctx), lam * Int(-d.n), RingElem::zero(ctx),
                              RingElem::one(ctx));
    m = gen.s * (t_negn * m);
    quotients.push_back(d.n);
  }
  // the residue must be a translation lift +-T^k
  if (!(m.m11().is_one() && m.m22().is_one()))
    throw NotAMemberError("matrix_to_word: residue is not a translation");
  Int k;
  if (ctx.degree() == 1) {
    k = m.m12().coeffs()[0];
  } else {
    k = m.m12().coeffs()[1];
    if (!(lam * k == m.m12()))
      throw NotAMemberError("matrix_to_word: residue is not a lambda multiple");
  }

  // g = (T^{n_1} S)(T^{n_2} S)...(T^{n_j} S) T^k projectively
  std::vector<Letter> letters;
  for (const Int& n : quotients) {
    append_t_power(letters, n, p);
    letters.push_back(Letter::iota());
  }
  append_t_power(letters, k, p);
  Word w = Word::from_letters(std::move(letters), p);

  if (!(evaluate(w, ctx) == g))
    throw NotAMemberError("matrix_to_word: decomposition failed to verify");
  return w;
}

bool CyclicWord::operator<(const CyclicWord& o) const {
  if (rep_.size() != o.rep_.size()) return rep_.size() < o.rep_.size();
  return std::lexicographical_compare(rep_.begin(), rep_.end(), o.rep_.begin(),
                                      o.rep_.end());
}

CyclicReduction cyclic_reduce(const Word& w, int p) {
  std::vector<Letter> cur = w.letters();
  std::vector<Letter> conj;
  while (cur.size() >= 2) {
    const Letter first = cur.front(), last = cur.back();
    const bool both_iota = first.is_iota() && last.is_iota();
    const bool both_gamma = !first.is_iota() && !last.is_iota();
    if (!both_iota && !both_gamma) break;
    conj.push_back(first);
    std::vector<Letter> mid(cur.begin() + 1, cur.end() - 1);
    if (both_iota) {
      cur = std::move(mid);
    } else {
      const int k = (last.exponent() + first.exponent()) % p;
      cur = std::move(mid);
      if (k != 0) cur.push_back(Letter::gamma(k));
    }
  }
  // rotation-minimal representative
  std::size_t best = 0;
  for (std::size_t r = 1; r < cur.size(); ++r) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const Letter a = cur[(r + i) % cur.size()];
      const Letter b = cur[(best + i) % cur.size()];
      if (a < b) {
        best = r;
        break;
      }
      if (b < a) break;
    }
  }
  conj.insert(conj.end(), cur.begin(), cur.begin() + best);
  return {CyclicWord(rotate(cur, best)), Word::from_letters(std::move(conj), p)};
}

ConjugacyWitness are_conjugate(const Word& w1, const Word& w2, int p) {
  const CyclicReduction r1 = cyclic_reduce(w1, p);
  const CyclicReduction r2 = cyclic_reduce(w2, p);
  if (!(r1.cyclic == r2.cyclic)) return {};
  return {true, concat(r1.conjugator, inverse_word(r2.conjugator, p), p)};
}

bool is_primitive(const Word& w, const RingContext& ctx) {
  if (classify(evaluate(w, ctx)).kind != ElementKind::Hyperbolic)
    throw std::invalid_argument("is_primitive: requires a hyperbolic word");
  const CyclicReduction red = cyclic_reduce(w, ctx.p());
  const std::vector<Letter>& c = red.cyclic.letters();
  const std::size_t n = c.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i)
      periodic = c[i] == c[(i + d) % n];
    if (periodic) return false;
  }
  return true;
}

std::optional<std::vector<int>> vblock_form(const Word& w, int p) {
  const CyclicReduction red = cyclic_reduce(w, p);
  const std::vector<Letter>& c = red.cyclic.letters();
  if (c.size() < 2) return std::nullopt;  // torsion or trivial
  // the rotation-minimal representative of an alternating word starts with
  // iota; gamma exponents at the odd positions are the block indices
  std::vector<int> js;
  for (std::size_t i = 1; i < c.size(); i += 2) js.push_back(c[i].exponent());
  return js;
}

Word word_from_vblocks(const std::vector<int>& js, int p) {
  std::vector<Letter> letters;
  for (int j : js) {
    letters.push_back(Letter::iota());
    letters.push_back(Letter::gamma(j));
  }
  return Word::from_letters(std::move(letters), p);
}

}  // namespace hecke
