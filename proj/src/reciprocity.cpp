#include "hecke/reciprocity.hpp"

#include <algorithm>

namespace hecke {

namespace {

constexpr int kFallbackDepth = 10;

// Deterministic conjugation BFS: visits (x, x g x^-1) for normal-form words
// x in (length, lex) order, deduplicated by conjugate matrix. The visitor
// returns true to stop the search.
template <typename Fn>
bool for_each_conjugate(const GroupElement& g, int depth, Fn fn) {
  const RingContext& ctx = g.context();
  const int p = ctx.p();

  struct Node {
    Word word;
    GroupElement mat;
  };
  std::set<GroupElement> visited;
  std::vector<Node> frontier{{Word(), g}};
  visited.insert(g);
  if (fn(frontier.front().word, frontier.front().mat)) return true;

  std::vector<std::pair<Letter, GroupElement>> lifts;
  lifts.emplace_back(Letter::iota(), generators(ctx).s);
  for (int k = 1; k < p; ++k) lifts.emplace_back(Letter::gamma(k), gamma_power(ctx, k));

  for (int level = 1; level <= depth; ++level) {
    std::vector<Node> next;
    for (const auto& [letter, lift] : lifts) {
      for (const Node& node : frontier) {
        if (!node.word.empty()) {
          const Letter first = node.word.letters().front();
          if (first.is_iota() == letter.is_iota()) continue;  // would merge
        }
        GroupElement mat = conjugate(lift, node.mat);
        if (!visited.insert(mat).second) continue;
        std::vector<Letter> ls{letter};
        ls.insert(ls.end(), node.word.letters().begin(), node.word.letters().end());
        Node child{Word::from_letters(std::move(ls), p), std::move(mat)};
        if (fn(child.word, child.mat)) return true;
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return false;
}

Word iota_word(int p) {
  return Word::from_letters({Letter::iota()}, p);
}

bool verified_reciprocator(const GroupElement& h, const GroupElement& g) {
  return (h * h).is_identity() && conjugate(h, g) == g.inverse();
}

// Shared by is_reciprocal and find_reciprocator once the word is known.
Reciprocator find_reciprocator_for_word(const GroupElement& g, const Word& w) {
  const RingContext& ctx = g.context();
  const int p = ctx.p();

  // proof-shape candidate: from x (iota w^-1 iota) x^-1 = w, the element
  // x iota reverses w
  const Word target =
      concat(concat(iota_word(p), inverse_word(w, p), p), iota_word(p), p);
  const ConjugacyWitness cw = are_conjugate(w, target, p);
  if (cw.conjugate) {
    Word h = concat(cw.witness, iota_word(p), p);
    GroupElement hm = evaluate(h, ctx);
    if (verified_reciprocator(hm, g)) return {std::move(h), std::move(hm)};
  }

  // fallback: breadth-first search for any verified involutive reciprocator
  const GroupElement ginv = g.inverse();
  std::optional<Reciprocator> found;
  for_each_conjugate(g, kFallbackDepth, [&](const Word& x, const GroupElement& m) {
    if (!(m == ginv)) return false;
    GroupElement hm = evaluate(x, ctx);
    if (!verified_reciprocator(hm, g)) return false;
    found = Reciprocator{x, std::move(hm)};
    return true;
  });
  if (found.has_value()) return *std::move(found);
  throw SearchExhaustedError("find_reciprocator: no involutive reciprocator found");
}

void require_member(const GroupElement& g) {
  switch (is_member(g)) {
    case Membership::Member:
      return;
    case Membership::NotMember:
      throw NotAMemberError("reciprocity: input is not a group member");
    case Membership::Undetermined:
      throw UndeterminedError("reciprocity: membership undetermined");
  }
}

}  // namespace

ReciprocityVerdict is_reciprocal(const GroupElement& g, int theta_depth) {
  require_member(g);
  const RingContext& ctx = g.context();

  ReciprocityVerdict v;
  if (g.is_identity() || (g * g).is_identity()) {
    v.reciprocal = true;
    v.kind = ReciprocalKind::Involution;
    v.reciprocator = Reciprocator{Word(), GroupElement::identity(ctx)};
    return v;
  }
  if (classify(g).kind != ElementKind::Hyperbolic) {
    v.kind = ReciprocalKind::NotReciprocal;
    return v;
  }

  const int p = ctx.p();
  const Word w = matrix_to_word(g);
  if (!are_conjugate(w, inverse_word(w, p), p).conjugate) {
    v.kind = ReciprocalKind::NotReciprocal;
    return v;
  }

  v.reciprocal = true;
  v.kind = ReciprocalKind::HyperbolicReciprocal;
  v.reciprocator = find_reciprocator_for_word(g, w);
  v.reciprocator_type = reciprocator_type(v.reciprocator->matrix);
  v.theta = canonical_theta(g, theta_depth);
  v.theta_search_exhausted = !v.theta.has_value();
  return v;
}

Reciprocator find_reciprocator(const GroupElement& g) {
  require_member(g);
  if (g.is_identity() || (g * g).is_identity())
    return {Word(), GroupElement::identity(g.context())};
  if (classify(g).kind != ElementKind::Hyperbolic)
    throw std::invalid_argument("find_reciprocator: requires a hyperbolic element");
  return find_reciprocator_for_word(g, matrix_to_word(g));
}

ReciprocatorType reciprocator_type(const GroupElement& h) {
  if (h.is_identity() || !(h * h).is_identity())
    throw NotAnInvolutionError("reciprocator_type: input is not an involution");
  const RingContext& ctx = h.context();
  const int p = ctx.p();
  const CyclicWord c = cyclic_reduce(matrix_to_word(h), p).cyclic;
  if (c.size() == 1) {
    const Letter l = c.letters().front();
    if (l.is_iota()) return ReciprocatorType::IotaClass;
    if (p % 2 == 0 && l.exponent() == p / 2) return ReciprocatorType::GammaClass;
  }
  throw NotAnInvolutionError("reciprocator_type: unexpected torsion form");
}

std::optional<ThetaWitness> canonical_theta(const GroupElement& g, int depth) {
  const bool even = g.context().p() % 2 == 0;
  std::optional<ThetaWitness> found;
  for_each_conjugate(g, depth, [&](const Word& x, const GroupElement& m) {
    const FixedPointRatio theta = fixed_point_ratio(m);
    if (theta.is_zero_value()) {
      found = ThetaWitness{CanonicalTheta::Zero, x};
      return true;
    }
    if (even && theta.is_one_value()) {
      found = ThetaWitness{CanonicalTheta::One, x};
      return true;
    }
    if (even && theta.is_cos_pi_over_p()) {
      found = ThetaWitness{CanonicalTheta::CosPiOverP, x};
      return true;
    }
    return false;
  });
  return found;
}

bool phi_identity_check(const GroupElement& g) {
  const FixedPointRatio theta = fixed_point_ratio(g);
  if (theta.kind() != FixedPointRatio::Kind::Finite)
    throw DegenerateThetaError("phi_identity_check: theta is 1 or infinite");
  const RingElem& n = theta.num();
  const RingElem& d = theta.den();
  const RingElem scale = d * d - n * n;
  if (sign_of(scale) != Sign::Positive)
    throw std::invalid_argument("phi_identity_check: requires |theta| < 1");

  // M = [[n, d], [-d, -n]] (theta cleared by d), adj(M) = [[-n, -d], [d, n]]
  const RingElem a = g.m11(), b = g.m12(), c = g.m21(), dd = g.m22();
  // P = M * g~ * adj(M)
  const RingElem p11 = n * a + d * c, p12 = n * b + d * dd;
  const RingElem p21 = -(d * a) - n * c, p22 = -(d * b) - n * dd;
  const RingElem q11 = p11 * -n + p12 * d, q12 = p11 * -d + p12 * n;
  const RingElem q21 = p21 * -n + p22 * d, q22 = p21 * -d + p22 * n;
  // target: +-scale * g~^-1 with g~^-1 = [[dd, -b], [-c, a]]
  const RingElem t11 = scale * dd, t12 = -(scale * b);
  const RingElem t21 = -(scale * c), t22 = scale * a;
  const bool plus = q11 == t11 && q12 == t12 && q21 == t21 && q22 == t22;
  const bool minus = q11 == -t11 && q12 == -t12 && q21 == -t21 && q22 == -t22;
  return plus || minus;
}

}  // namespace hecke
