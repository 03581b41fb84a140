#include "hecke/ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace hecke {

namespace {

// ---- integer polynomial helpers (little-endian coefficient vectors) ----

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact long division by a monic divisor; remainder must vanish.
std::vector<Int> poly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1)
    throw std::logic_error("poly_divexact: divisor not monic");
  if (num.size() < den.size()) throw std::logic_error("poly_divexact: degree");
  const std::size_t dd = den.size() - 1;
  std::vector<Int> quo(num.size() - dd, Int(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    Int f = num[i];
    if (f == 0) continue;
    quo[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  return quo;
}

const std::vector<Int>& cyclotomic(int n, std::map<int, std::vector<Int>>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1 divided by the product of all lower-order cyclotomic factors.
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  std::vector<Int> den{1};
  for (int d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic(d, memo));
  return memo.emplace(n, poly_divexact(std::move(num), den)).first->second;
}

// Rewrite a palindromic polynomial F(x) of even degree 2m as the coefficients
// of G(y) with F(x) = x^m G(x + 1/x), using x^k + x^-k = C_k(y).
std::vector<Int> fold_palindromic(const std::vector<Int>& f) {
  const std::size_t d = f.size() - 1;
  if (d % 2 != 0) throw std::logic_error("fold_palindromic: odd degree");
  const std::size_t m = d / 2;
  for (std::size_t i = 0; i <= d; ++i)
    if (f[i] != f[d - i]) throw std::logic_error("fold_palindromic: not palindromic");
  std::vector<Int> out(m + 1, Int(0));
  out[0] = f[m];
  std::vector<Int> c_prev{2};     // C_0
  std::vector<Int> c_cur{0, 1};   // C_1
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t j = 0; j < c_cur.size(); ++j) out[j] += f[m + k] * c_cur[j];
    if (k < m) {
      // C_{k+1} = y*C_k - C_{k-1}
      std::vector<Int> next(c_cur.size() + 1, Int(0));
      for (std::size_t j = 0; j < c_cur.size(); ++j) next[j + 1] = c_cur[j];
      for (std::size_t j = 0; j < c_prev.size(); ++j) next[j] -= c_prev[j];
      c_prev = std::move(c_cur);
      c_cur = std::move(next);
    }
  }
  return out;
}

// ---- rational polynomial helpers for the one-time Sturm verification ----

using RPoly = std::vector<Rat>;

void rp_trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_derivative(const RPoly& p) {
  RPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rat(i));
  rp_trim(out);
  return out;
}

Rat rp_eval(const RPoly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

RPoly rp_rem(RPoly num, const RPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    Rat f = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
    num.pop_back();
    rp_trim(num);
    if (num.empty()) break;
  }
  return num;
}

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, rp_derivative(p)};
  while (!chain.back().empty()) {
    RPoly r = rp_rem(chain[chain.size() - 2], chain.back());
    for (Rat& c : r) c = -c;
    rp_trim(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<RPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  for (const RPoly& p : chain) {
    Rat v = rp_eval(p, x);
    signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return variations(signs);
}

int variations_at_pos_inf(const std::vector<RPoly>& chain) {
  std::vector<int> signs;
  for (const RPoly& p : chain) {
    if (p.empty())
      signs.push_back(0);
    else
      signs.push_back(p.back() > 0 ? 1 : -1);
  }
  return variations(signs);
}

// cpp_rational's two-argument constructor rejects negative denominators.
Rat make_rat(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

Int rat_floor(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quo = n / d;
  if (n % d != 0 && n < 0) --quo;
  return quo;
}

int int_sign(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of P(n / 2^e) via the integer numerator sum P_i * n^i * 2^(e(d-i)).
int poly_sign_at_dyadic(const std::vector<Int>& poly, const Int& n, long e) {
  const std::size_t d = poly.size() - 1;
  Int acc(0);
  Int npow(1);
  for (std::size_t i = 0; i <= d; ++i) {
    if (poly[i] != 0) acc += poly[i] * npow * (Int(1) << static_cast<unsigned>(e * (d - i)));
    if (i < d) npow *= n;
  }
  return int_sign(acc);
}

// Sign of P(num/den), den > 0, via the integer numerator.
int poly_sign_at_fraction(const std::vector<Int>& poly, const Int& num, const Int& den) {
  const std::size_t d = poly.size() - 1;
  Int acc(0);
  Int npow(1);
  std::vector<Int> dpow(d + 1);
  dpow[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) dpow[i] = dpow[i - 1] * den;
  for (std::size_t i = 0; i <= d; ++i) {
    if (poly[i] != 0) acc += poly[i] * npow * dpow[d - i];
    if (i < d) npow *= num;
  }
  return int_sign(acc);
}

// Enclosure of sum c_i * lambda^i at the common exponent exp*(n-1).
struct DyadicBounds {
  Int lo;
  Int hi;
  long exp;
};

DyadicBounds dyadic_eval(const std::vector<Int>& coeffs, const DyadicInterval& iv) {
  const std::size_t top = coeffs.size() - 1;
  DyadicBounds out{Int(0), Int(0), iv.exp * static_cast<long>(top)};
  Int plo(1), phi(1);
  for (std::size_t i = 0; i <= top; ++i) {
    if (coeffs[i] != 0) {
      const Int scale = Int(1) << static_cast<unsigned>(iv.exp * (top - i));
      if (coeffs[i] > 0) {
        out.lo += coeffs[i] * plo * scale;
        out.hi += coeffs[i] * phi * scale;
      } else {
        out.lo += coeffs[i] * phi * scale;
        out.hi += coeffs[i] * plo * scale;
      }
    }
    if (i < top) {
      plo *= iv.lo;
      phi *= iv.hi;
    }
  }
  return out;
}

constexpr long kMaxRefineBits = 4000000;

}  // namespace

std::vector<Int> minimal_polynomial(int p) {
  if (p < 3) throw std::domain_error("minimal_polynomial: requires p >= 3");
  std::map<int, std::vector<Int>> memo;
  return fold_palindromic(cyclotomic(2 * p, memo));
}

// Private state shared via the pimpl-free layout: the dyadic enclosure lives
// in the rational members, reconstructed on demand.
RingContext::RingContext(int p, int max_iterations)
    : p_(p), max_iterations_(max_iterations) {
  min_poly_ = minimal_polynomial(p);
  degree_ = static_cast<int>(min_poly_.size()) - 1;
  min_poly_rat_.assign(min_poly_.begin(), min_poly_.end());

  const std::vector<RPoly> chain = sturm_chain(min_poly_rat_);
  const int v_inf = variations_at_pos_inf(chain);
  const long double approx =
      2.0L * std::cos(std::numbers::pi_v<long double> / static_cast<long double>(p));

  // Seed a small dyadic interval around the float estimate, then verify
  // exactly that it contains one simple root and nothing above it; the
  // largest root of the minimal polynomial is lambda_p. The width must beat
  // the gap to the next conjugate root, roughly 8*pi^2/p^2.
  int k0 = 30;
  for (int q = p; q > 1; q >>= 1) k0 += 2;
  k0 = std::min(k0, 56);
  bool verified = false;
  Int enc_lo, enc_hi;
  long enc_exp = 0;
  for (int k = k0; k <= k0 + 12 && !verified; k += 2) {
    const long double scaled = approx * std::pow(2.0L, static_cast<long double>(k));
    const Int center(static_cast<long long>(std::llroundl(scaled)));
    const Int scale = Int(1) << k;
    const Rat lo = make_rat(center - 4, scale), hi = make_rat(center + 4, scale);
    if (rp_eval(min_poly_rat_, lo) == 0 || rp_eval(min_poly_rat_, hi) == 0) continue;
    const int roots_inside = variations_at(chain, lo) - variations_at(chain, hi);
    const int roots_above = variations_at(chain, hi) - v_inf;
    if (roots_inside == 1 && roots_above == 0) {
      enc_lo = center - 4;
      enc_hi = center + 4;
      enc_exp = k;
      isolation_floor_ = lo;
      verified = true;
    }
  }
  if (!verified) throw std::logic_error("RingContext: failed to isolate lambda_p");

  // Tighten to 64 fractional bits once; operations refine local copies.
  DyadicInterval iv{enc_lo, enc_hi, enc_exp};
  refine_dyadic(iv, 70);
  enclosure_ = {make_rat(iv.lo, Int(1) << static_cast<unsigned>(iv.exp)),
                make_rat(iv.hi, Int(1) << static_cast<unsigned>(iv.exp))};
  enc_lo_ = iv.lo;
  enc_hi_ = iv.hi;
  enc_exp_ = iv.exp;
}

void RingContext::refine_dyadic(DyadicInterval& iv, long steps) const {
  for (long s = 0; s < steps; ++s) {
    if (iv.lo == iv.hi) return;  // pinned exactly (rational lambda, p = 3)
    const Int mid = iv.lo + iv.hi;  // at exponent iv.exp + 1
    const int sg = poly_sign_at_dyadic(min_poly_, mid, iv.exp + 1);
    iv.lo <<= 1;
    iv.hi <<= 1;
    ++iv.exp;
    if (sg < 0)
      iv.lo = mid;
    else if (sg > 0)
      iv.hi = mid;
    else
      iv.lo = iv.hi = mid;
  }
}

DyadicInterval RingContext::dyadic_enclosure() const { return {enc_lo_, enc_hi_, enc_exp_}; }

Rat RingContext::eval_min_poly(const Rat& x) const { return rp_eval(min_poly_rat_, x); }

Sign RingContext::sign_lambda_minus(const Rat& q) const {
  const Int qn = numerator(q), qd = denominator(q);  // qd > 0 canonical
  // compare against the dyadic enclosure first
  if (qn * (Int(1) << static_cast<unsigned>(enc_exp_)) < enc_lo_ * qd) return Sign::Positive;
  if (qn * (Int(1) << static_cast<unsigned>(enc_exp_)) > enc_hi_ * qd) return Sign::Negative;
  const int sg = poly_sign_at_fraction(min_poly_, qn, qd);
  if (sg < 0) return Sign::Positive;  // q lies below the largest root
  if (sg > 0) return Sign::Negative;
  return Sign::Zero;
}

void RingContext::refine(RatInterval& iv) const {
  const Rat mid = (iv.lo + iv.hi) / 2;
  const Rat v = eval_min_poly(mid);
  if (v < 0)
    iv.lo = mid;
  else if (v > 0)
    iv.hi = mid;
  else
    iv.lo = iv.hi = mid;
}

RingElem::RingElem(const RingContext& ctx, std::vector<Int> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
  const std::size_t d = static_cast<std::size_t>(ctx.degree());
  const std::vector<Int>& mp = ctx.min_poly();
  for (std::size_t i = coeffs_.size(); i-- > d;) {
    Int f = coeffs_[i];
    if (f == 0) continue;
    coeffs_[i] = 0;
    for (std::size_t j = 0; j < d; ++j) coeffs_[i - d + j] -= f * mp[j];
  }
  coeffs_.resize(d, Int(0));
}

RingElem RingElem::zero(const RingContext& ctx) { return RingElem(ctx, {}); }

RingElem RingElem::one(const RingContext& ctx) { return integer(ctx, 1); }

RingElem RingElem::integer(const RingContext& ctx, Int v) {
  return RingElem(ctx, {std::move(v)});
}

RingElem RingElem::lambda(const RingContext& ctx) {
  return RingElem(ctx, {Int(0), Int(1)});
}

const RingContext& RingElem::context() const {
  if (!ctx_) throw std::logic_error("RingElem: default-constructed element used");
  return *ctx_;
}

void RingElem::require_same_context(const RingElem& o) const {
  if (ctx_ == nullptr || o.ctx_ == nullptr || ctx_ != o.ctx_)
    throw std::invalid_argument("RingElem: mismatched ring contexts");
}

bool RingElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

bool RingElem::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Int& c) { return c == 0; });
}

RingElem RingElem::operator+(const RingElem& o) const {
  require_same_context(o);
  std::vector<Int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
  return RingElem(*ctx_, std::move(out));
}

RingElem RingElem::operator-(const RingElem& o) const {
  require_same_context(o);
  std::vector<Int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coeffs_[i];
  return RingElem(*ctx_, std::move(out));
}

RingElem RingElem::operator-() const {
  std::vector<Int> out(coeffs_);
  for (Int& c : out) c = -c;
  return RingElem(context(), std::move(out));
}

RingElem RingElem::operator*(const RingElem& o) const {
  require_same_context(o);
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return RingElem(*ctx_, std::move(out));
}

RingElem RingElem::operator*(const Int& k) const {
  std::vector<Int> out(coeffs_);
  for (Int& c : out) c *= k;
  return RingElem(context(), std::move(out));
}

bool RingElem::operator==(const RingElem& o) const {
  require_same_context(o);
  return coeffs_ == o.coeffs_;
}

bool RingElem::operator<(const RingElem& o) const {
  require_same_context(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

Sign sign_of(const RingElem& x) {
  const std::vector<Int>& c = x.coeffs();
  bool has_pos = false, has_neg = false;
  for (const Int& v : c) {
    if (v > 0) has_pos = true;
    else if (v < 0) has_neg = true;
  }
  if (!has_pos && !has_neg) return Sign::Zero;
  // lambda_p > 0, so uniformly signed coefficients decide immediately
  if (!has_neg) return Sign::Positive;
  if (!has_pos) return Sign::Negative;

  const RingContext& ctx = x.context();
  if (ctx.degree() == 2) {
    // a + b*lambda with a, b of opposite signs: compare lambda with -a/b.
    const Sign s = ctx.sign_lambda_minus(make_rat(-c[0], c[1]));
    const int v = sign_value(s) * (c[1] > 0 ? 1 : -1);
    return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
  }

  DyadicInterval iv = ctx.dyadic_enclosure();
  long batch = 16;
  while (iv.exp < kMaxRefineBits) {
    const DyadicBounds b = dyadic_eval(c, iv);
    if (b.lo > 0) return Sign::Positive;
    if (b.hi < 0) return Sign::Negative;
    if (b.lo == 0 && b.hi == 0) return Sign::Zero;  // exact rational point
    ctx.refine_dyadic(iv, batch);
    batch *= 2;
  }
  throw std::logic_error("sign_of: interval refinement did not converge");
}

RingElem abs_embedding(const RingElem& x) {
  return sign_of(x) == Sign::Negative ? -x : x;
}

PseudoDivision pseudo_divide(const RingElem& a, const RingElem& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_divide: division by zero");
  const RingContext& ctx = a.context();
  if (a.is_zero()) return {Int(0), RingElem::zero(ctx)};
  const RingElem c = b * RingElem::lambda(ctx);

  DyadicInterval iv = ctx.dyadic_enclosure();
  long batch = 16;
  while (iv.exp < kMaxRefineBits) {
    const DyadicBounds ec = dyadic_eval(c.coeffs(), iv);
    if ((ec.lo > 0) || (ec.hi < 0)) {
      const DyadicBounds ea = dyadic_eval(a.coeffs(), iv);
      // shared exponents cancel in the quotient enclosure
      const Rat q1 = make_rat(ea.lo, ec.lo), q2 = make_rat(ea.lo, ec.hi);
      const Rat q3 = make_rat(ea.hi, ec.lo), q4 = make_rat(ea.hi, ec.hi);
      const Rat tlo = std::min(std::min(q1, q2), std::min(q3, q4));
      const Rat thi = std::max(std::max(q1, q2), std::max(q3, q4));
      if (thi - tlo < Rat(1, 4)) {
        const Int n0 = rat_floor((tlo + thi) / 2 + Rat(1, 2));
        // scan candidates, verifying the remainder bound exactly:
        // |r| <= |c|/2  <=>  c^2 - 4r^2 >= 0, boundary tie resolved to r >= 0
        for (int offset : {0, -1, 1, -2, 2, -3, 3}) {
          const Int n = n0 + offset;
          const RingElem r = a - c * n;
          const Sign bound = sign_of(c * c - r * r * Int(4));
          if (bound == Sign::Positive) return {n, r};
          if (bound == Sign::Zero && sign_of(r) != Sign::Negative) return {n, r};
        }
        throw std::logic_error("pseudo_divide: candidate scan failed");
      }
    }
    ctx.refine_dyadic(iv, batch);
    batch *= 2;
  }
  throw std::logic_error("pseudo_divide: interval refinement did not converge");
}

std::optional<RingElem> pseudo_gcd(const RingElem& a, const RingElem& b) {
  if (b.is_zero()) return abs_embedding(a);
  RingElem prev = a, cur = b;
  const int cap = a.context().max_iterations();
  for (int iter = 0; iter < cap; ++iter) {
    PseudoDivision d = pseudo_divide(prev, cur);
    if (d.r.is_zero()) return abs_embedding(cur);
    prev = std::move(cur);
    cur = std::move(d.r);
  }
  return std::nullopt;
}

std::optional<RingElem> halve(const RingElem& x) {
  std::vector<Int> out(x.coeffs());
  for (Int& c : out) {
    if (c % 2 != 0) return std::nullopt;
    c /= 2;
  }
  return RingElem(x.context(), std::move(out));
}

FieldElem::FieldElem(RingElem num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("FieldElem: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Int g = den_;
  for (const Int& c : num_.coeffs())
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
  if (g > 1) {
    std::vector<Int> reduced(num_.coeffs());
    for (Int& c : reduced) c /= g;
    num_ = RingElem(num_.context(), std::move(reduced));
    den_ /= g;
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  return FieldElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_); }

bool FieldElem::operator==(const FieldElem& o) const {
  return den_ == o.den_ && num_ == o.num_;
}

}  // namespace hecke
