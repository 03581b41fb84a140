#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hecke/words.hpp"
#include "testutil.hpp"

using namespace hecke;
using testutil::mat;

namespace {

Word wrd(std::vector<int> codes, int p) {
  std::vector<Letter> ls;
  for (int c : codes) ls.push_back(c == 0 ? Letter::iota() : Letter::gamma(c));
  return Word::from_letters(std::move(ls), p);
}

}  // namespace

TEST_CASE("normal form merging") {
  // two iotas cancel, gammas merge mod p and may cascade
  Word w = wrd({0, 0, 1, 3}, 4);  // i i g1 g3 -> g4 -> empty
  CHECK(w.empty());
  Word v = wrd({1, 0, 0, 2}, 4);  // g1 i i g2 -> g3
  CHECK(v == wrd({3}, 4));
  Word u = wrd({0, 2, 3, 0}, 5);  // i g2 g3 i -> i g5 i -> i i -> empty
  CHECK(u.empty());
}

TEST_CASE("evaluate examples") {
  for (int p : {3, 4, 5, 6}) {
    RingContext ctx(p);
    Generators gen = generators(ctx);
    CHECK(evaluate(wrd({0}, p), ctx) == gen.s);
    CHECK(evaluate(wrd({0, 1}, p), ctx) == gen.t);
    CHECK(evaluate(Word(), ctx).is_identity());
  }
}

TEST_CASE("evaluate is a homomorphism") {
  std::mt19937_64 rng(2718);
  for (int p : {3, 4, 5, 6}) {
    RingContext ctx(p);
    for (int trial = 0; trial < 40; ++trial) {
      Word a = testutil::random_normal_word(p, rng, 1 + trial % 8);
      Word b = testutil::random_normal_word(p, rng, 1 + (trial * 7) % 8);
      CHECK(evaluate(concat(a, b, p), ctx) == evaluate(a, ctx) * evaluate(b, ctx));
    }
  }
}

TEST_CASE("inverse_word inverts") {
  std::mt19937_64 rng(11);
  for (int p : {3, 4, 5, 6}) {
    RingContext ctx(p);
    for (int trial = 0; trial < 30; ++trial) {
      Word w = testutil::random_normal_word(p, rng, 1 + trial % 10);
      CHECK(concat(w, inverse_word(w, p), p).empty());
      CHECK(evaluate(inverse_word(w, p), ctx) == evaluate(w, ctx).inverse());
    }
  }
}

TEST_CASE("matrix_to_word basics") {
  for (int p : {3, 4, 5, 6}) {
    RingContext ctx(p);
    Generators gen = generators(ctx);
    CHECK(matrix_to_word(gen.s) == wrd({0}, p));
    CHECK(matrix_to_word(GroupElement::identity(ctx)).empty());
    CHECK(evaluate(matrix_to_word(gen.t), ctx) == gen.t);
    CHECK(evaluate(matrix_to_word(gen.g), ctx) == gen.g);
  }
}

TEST_CASE("matrix_to_word round-trip on random words") {
  std::mt19937_64 rng(90210);
  for (int p : {3, 4, 5, 6}) {
    RingContext ctx(p);
    for (int trial = 0; trial < 40; ++trial) {
      Word w = testutil::random_normal_word(p, rng, 1 + trial % 12);
      GroupElement g = evaluate(w, ctx);
      Word back = matrix_to_word(g);
      CHECK(evaluate(back, ctx) == g);
      // evaluation is faithful on normal forms, so the words must agree
      CHECK(back == w);
    }
  }
}

TEST_CASE("matrix_to_word rejects the unit translation at p=4") {
  RingContext ctx(4, 64);
  CHECK_THROWS_AS(matrix_to_word(mat(ctx, {1}, {1}, {0}, {1})), NotAMemberError);
}

TEST_CASE("no short word evaluates to the p=4 unit translation") {
  // word-model oracle behind the NotMember example
  RingContext ctx(4);
  GroupElement target = mat(ctx, {1}, {1}, {0}, {1});
  bool found = false;
  for (int len = 0; len <= 12 && !found; ++len)
    testutil::for_each_normal_word(4, len, [&](const Word& w) {
      if (evaluate(w, ctx) == target) found = true;
    });
  CHECK_FALSE(found);
}

TEST_CASE("cyclic_reduce examples") {
  const int p = 5;
  RingContext ctx(p);
  auto r1 = cyclic_reduce(wrd({0, 1, 0}, p), p);
  CHECK(r1.cyclic.letters() == std::vector<Letter>{Letter::gamma(1)});
  CHECK(r1.conjugator == wrd({0}, p));

  Word reduced = wrd({0, 1, 0, 2}, p);
  auto r2 = cyclic_reduce(reduced, p);
  CHECK(r2.cyclic == CyclicWord(reduced.letters()));
  CHECK(r2.conjugator.empty());

  auto r3 = cyclic_reduce(wrd({2, 0, 3}, p), p);  // g2 i g3: ends merge to i
  CHECK(r3.cyclic.letters() == std::vector<Letter>{Letter::iota()});
  GroupElement lhs = evaluate(wrd({2, 0, 3}, p), ctx);
  GroupElement rhs = conjugate(evaluate(r3.conjugator, ctx),
                               evaluate(Word::from_letters(r3.cyclic.letters(), p), ctx));
  CHECK(lhs == rhs);
}

TEST_CASE("cyclic_reduce conjugation witness verifies by matrix arithmetic") {
  std::mt19937_64 rng(321);
  for (int p : {3, 4, 5, 6}) {
    RingContext ctx(p);
    for (int trial = 0; trial < 40; ++trial) {
      Word w = testutil::random_normal_word(p, rng, 1 + trial % 10);
      auto red = cyclic_reduce(w, p);
      GroupElement expect = evaluate(w, ctx);
      GroupElement got = conjugate(evaluate(red.conjugator, ctx),
                                   evaluate(Word::from_letters(red.cyclic.letters(), p), ctx));
      CHECK(expect == got);
      // representative is rotation-minimal: no rotation is smaller
      const auto& c = red.cyclic.letters();
      for (std::size_t r = 1; r < c.size(); ++r) {
        std::vector<Letter> rot(c.begin() + r, c.end());
        rot.insert(rot.end(), c.begin(), c.begin() + r);
        CHECK_FALSE(std::lexicographical_compare(rot.begin(), rot.end(), c.begin(), c.end()));
      }
    }
  }
}

TEST_CASE("are_conjugate examples") {
  const int p = 4;
  RingContext ctx(p);
  Word w = wrd({0, 1, 0, 3}, p);
  // any rotation is conjugate
  Word rot = wrd({0, 3, 0, 1}, p);
  auto c1 = are_conjugate(w, rot, p);
  CHECK(c1.conjugate);
  CHECK(conjugate(evaluate(c1.witness, ctx), evaluate(rot, ctx)) == evaluate(w, ctx));

  CHECK_FALSE(are_conjugate(wrd({1}, p), wrd({2}, p), p).conjugate);

  // the symmetric hyperbolic [[1,1],[1,2]] at p=3 is conjugate to its inverse
  RingContext c3(3);
  Word m = matrix_to_word(mat(c3, {1}, {1}, {1}, {2}));
  auto c2 = are_conjugate(m, inverse_word(m, 3), 3);
  CHECK(c2.conjugate);
  CHECK(conjugate(evaluate(c2.witness, c3), evaluate(inverse_word(m, 3), c3)) ==
        evaluate(m, c3));
}

TEST_CASE("are_conjugate is an equivalence on a random sample") {
  std::mt19937_64 rng(5551212);
  const int p = 5;
  RingContext ctx(p);
  std::vector<Word> sample;
  for (int i = 0; i < 12; ++i) sample.push_back(testutil::random_normal_word(p, rng, 2 + i % 6));
  for (const Word& a : sample) {
    auto self = are_conjugate(a, a, p);
    CHECK(self.conjugate);
    for (const Word& b : sample) {
      auto ab = are_conjugate(a, b, p);
      auto ba = are_conjugate(b, a, p);
      CHECK(ab.conjugate == ba.conjugate);
      if (ab.conjugate) {
        CHECK(conjugate(evaluate(ab.witness, ctx), evaluate(b, ctx)) == evaluate(a, ctx));
        for (const Word& c : sample) {
          auto bc = are_conjugate(b, c, p);
          if (bc.conjugate) CHECK(are_conjugate(a, c, p).conjugate);
        }
      }
    }
  }
}

TEST_CASE("is_primitive") {
  const int p = 5;
  RingContext ctx(p);
  Word base = wrd({0, 1, 0, 2}, p);
  REQUIRE(classify(evaluate(base, ctx)).kind == ElementKind::Hyperbolic);
  CHECK(is_primitive(base, ctx));
  CHECK_FALSE(is_primitive(concat(base, base, p), ctx));
  CHECK_FALSE(is_primitive(concat(base, concat(base, base, p), p), ctx));

  // elliptic input is rejected: trace of iota gamma is lambda_5 < 2
  CHECK_THROWS_AS(is_primitive(wrd({0, 1}, p), ctx), std::invalid_argument);

  RingContext c3(3);
  Word two = matrix_to_word(mat(c3, {1}, {1}, {1}, {2}));
  CHECK(is_primitive(two, c3));
}

TEST_CASE("vblock_form") {
  const int p = 4;
  // W = V1 V_{p-1} V_m at p=4: i g1 i g3 i g2 -> (1, 3, 2)
  Word w = wrd({0, 1, 0, 3, 0, 2}, p);
  auto js = vblock_form(w, p);
  REQUIRE(js.has_value());
  CHECK(*js == std::vector<int>{1, 3, 2});

  auto single = vblock_form(wrd({0, 2}, p), p);
  REQUIRE(single.has_value());
  CHECK(*single == std::vector<int>{2});

  CHECK_FALSE(vblock_form(wrd({2}, p), p).has_value());
  CHECK_FALSE(vblock_form(wrd({0}, p), p).has_value());

  // round-trip: reassembled blocks give back a rotation of the sequence
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> d(1, p - 1);
    std::vector<int> seq;
    for (int i = 0; i < 1 + trial % 4; ++i) seq.push_back(d(rng));
    Word assembled = word_from_vblocks(seq, p);
    auto back = vblock_form(assembled, p);
    REQUIRE(back.has_value());
    REQUIRE(back->size() == seq.size());
    bool is_rotation = false;
    for (std::size_t r = 0; r < seq.size() && !is_rotation; ++r) {
      bool eq = true;
      for (std::size_t i = 0; i < seq.size() && eq; ++i)
        eq = seq[(r + i) % seq.size()] == (*back)[i];
      is_rotation = eq;
    }
    CHECK(is_rotation);
    RingContext ctx(p);
    // evaluation agrees up to conjugacy
    CHECK(are_conjugate(assembled, word_from_vblocks(*back, p), p).conjugate);
  }
}

TEST_CASE("word enumeration counts") {
  // alternating structure: 2(p-1)^(n/2) words of even length n
  int count = 0;
  testutil::for_each_normal_word(4, 6, [&](const Word& w) {
    CHECK(w.size() == 6);
    ++count;
  });
  CHECK(count == 2 * 27);
  std::set<std::vector<int>> seen;
  testutil::for_each_normal_word(3, 5, [&](const Word& w) {
    std::vector<int> codes;
    for (const Letter& l : w.letters()) codes.push_back(l.code());
    seen.insert(codes);
  });
  CHECK(seen.size() == 4 + 8);  // i-start: 2^2, g-start: 2^3
}
