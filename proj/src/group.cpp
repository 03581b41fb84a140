#include "hecke/group.hpp"

namespace hecke {

GroupElement::GroupElement(RingElem m11, RingElem m12, RingElem m21, RingElem m22)
    : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)} {
  const RingElem det = e_[0] * e_[3] - e_[1] * e_[2];
  if (!det.is_one())
    throw std::invalid_argument("GroupElement: determinant must be 1");
  canonicalize();
}

void GroupElement::canonicalize() {
  for (const RingElem& v : e_) {
    if (v.is_zero()) continue;
    if (sign_of(v) == Sign::Negative)
      for (RingElem& w : e_) w = -w;
    return;
  }
}

GroupElement GroupElement::identity(const RingContext& ctx) {
  return GroupElement(RingElem::one(ctx), RingElem::zero(ctx), RingElem::zero(ctx),
                      RingElem::one(ctx));
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return GroupElement(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                      e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

GroupElement GroupElement::inverse() const {
  return GroupElement(e_[3], -e_[1], -e_[2], e_[0]);
}

GroupElement GroupElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  GroupElement acc = identity(context());
  GroupElement base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool GroupElement::is_identity() const {
  return e_[0].is_one() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_one();
}

bool GroupElement::operator==(const GroupElement& o) const {
  for (int i = 0; i < 4; ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

bool GroupElement::operator<(const GroupElement& o) const {
  for (int i = 0; i < 4; ++i) {
    if (e_[i] < o.e_[i]) return true;
    if (o.e_[i] < e_[i]) return false;
  }
  return false;
}

GroupElement conjugate(const GroupElement& x, const GroupElement& g) {
  return x * g * x.inverse();
}

Generators generators(const RingContext& ctx) {
  const RingElem zero = RingElem::zero(ctx), one = RingElem::one(ctx);
  const RingElem lam = RingElem::lambda(ctx);
  GroupElement s(zero, -one, one, zero);
  GroupElement t(one, lam, zero, one);
  GroupElement g = s * t;  // [[0,-1],[1,lambda]]
  return {std::move(s), std::move(t), std::move(g)};
}

ElementClass classify(const GroupElement& g) {
  const RingContext& ctx = g.context();
  const RingElem tr = g.trace();
  const RingElem disc = tr * tr - RingElem::integer(ctx, 4);
  switch (sign_of(disc)) {
    case Sign::Positive:
      return {ElementKind::Hyperbolic, std::nullopt};
    case Sign::Zero:
      return {ElementKind::Parabolic, std::nullopt};
    case Sign::Negative:
      break;
  }
  // elliptic: torsion order divides 2 or p, search powers up to 2p
  GroupElement cur = g;
  for (int k = 1; k <= 2 * ctx.p(); ++k) {
    if (cur.is_identity()) return {ElementKind::Elliptic, k};
    cur = cur * g;
  }
  return {ElementKind::Elliptic, std::nullopt};
}

Membership is_member(const GroupElement& g) {
  const auto g1 = pseudo_gcd(g.m11(), g.m21());
  if (!g1.has_value()) return Membership::Undetermined;
  if (!g1->is_one()) return Membership::NotMember;
  const auto g2 = pseudo_gcd(g.m12(), g.m22());
  if (!g2.has_value()) return Membership::Undetermined;
  return g2->is_one() ? Membership::Member : Membership::NotMember;
}

GammaEntries gamma_entries(const RingContext& ctx, long k) {
  if (k < 1) throw std::domain_error("gamma_entries: requires k >= 1");
  const RingElem lam = RingElem::lambda(ctx);
  RingElem prev = RingElem::zero(ctx);  // a_0
  RingElem cur = RingElem::one(ctx);    // a_1
  for (long i = 1; i < k; ++i) {
    RingElem next = lam * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  RingElem next = lam * cur - prev;  // a_{k+1}
  return {std::move(prev), std::move(cur), std::move(next)};
}

GroupElement gamma_power(const RingContext& ctx, long k) {
  GammaEntries a = gamma_entries(ctx, k);
  return GroupElement(-a.prev, -a.cur, a.cur, a.next);
}

FixedPointRatio FixedPointRatio::finite(RingElem num, RingElem den) {
  return FixedPointRatio(Kind::Finite, std::move(num), std::move(den));
}

FixedPointRatio FixedPointRatio::infinity() {
  return FixedPointRatio(Kind::Infinity, std::nullopt, std::nullopt);
}

FixedPointRatio FixedPointRatio::degenerate_one() {
  return FixedPointRatio(Kind::DegenerateOne, std::nullopt, std::nullopt);
}

const RingElem& FixedPointRatio::num() const {
  if (kind_ != Kind::Finite) throw std::logic_error("FixedPointRatio: not finite");
  return *num_;
}

const RingElem& FixedPointRatio::den() const {
  if (kind_ != Kind::Finite) throw std::logic_error("FixedPointRatio: not finite");
  return *den_;
}

bool FixedPointRatio::equals(const FixedPointRatio& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::Finite) return true;
  return *num_ * *o.den_ == *o.num_ * *den_;
}

bool FixedPointRatio::equals_negated(const FixedPointRatio& o) const {
  if (kind_ == Kind::Finite && o.kind_ == Kind::Finite)
    return *num_ * *o.den_ == -(*o.num_ * *den_);
  // -infinity is still infinity projectively; the degenerate value 1 is not -1
  return kind_ == Kind::Infinity && o.kind_ == Kind::Infinity;
}

bool FixedPointRatio::is_zero_value() const {
  return kind_ == Kind::Finite && num_->is_zero();
}

bool FixedPointRatio::is_one_value() const {
  if (kind_ == Kind::DegenerateOne) return true;
  return kind_ == Kind::Finite && *num_ == *den_;
}

bool FixedPointRatio::is_cos_pi_over_p() const {
  if (kind_ != Kind::Finite) return false;
  const RingContext& ctx = num_->context();
  return *num_ * Int(2) == *den_ * RingElem::lambda(ctx);
}

FixedPointRatio fixed_point_ratio(const GroupElement& g) {
  const RingElem diag = g.m11() - g.m22();
  if (diag.is_zero()) {
    if (g.m12() == g.m21()) return FixedPointRatio::degenerate_one();
    return FixedPointRatio::infinity();
  }
  return FixedPointRatio::finite(g.m12() - g.m21(), std::move(diag));
}

bool is_symmetric_rep(const GroupElement& g) { return g.m12() == g.m21(); }

}  // namespace hecke
