// Normal forms in the free product Z_2 * Z_p on the letters iota and
// gamma_p^k: evaluation into matrices, the matrix-to-word decomposition,
// cyclic reduction, conjugacy and primitivity tests, and the V-block view.
#pragma once

#include <optional>
#include <vector>

#include "hecke/group.hpp"

namespace hecke {

class NotAMemberError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One free-product letter: code 0 is iota, code k in 1..p-1 is gamma^k.
class Letter {
 public:
  static Letter iota() { return Letter(0); }
  static Letter gamma(int k) {
    if (k < 1) throw std::domain_error("Letter::gamma: exponent must be >= 1");
    return Letter(k);
  }

  bool is_iota() const { return code_ == 0; }
  int exponent() const {
    if (code_ == 0) throw std::logic_error("Letter: iota has no exponent");
    return code_;
  }
  int code() const { return code_; }

  bool operator==(const Letter& o) const { return code_ == o.code_; }
  bool operator!=(const Letter& o) const { return code_ != o.code_; }
  bool operator<(const Letter& o) const { return code_ < o.code_; }

 private:
  explicit Letter(int code) : code_(code) {}
  int code_;
};

// Word in normal form: no two adjacent iota letters, no two adjacent gamma
// letters (these merge mod p and may cascade away).
class Word {
 public:
  Word() = default;

  static Word from_letters(std::vector<Letter> letters, int p);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }
  bool operator<(const Word& o) const;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b, int p);
Word inverse_word(const Word& w, int p);

/// Product of the generator lifts, projectively canonical. Empty -> identity.
GroupElement evaluate(const Word& w, const RingContext& ctx);

/// Inverse of evaluate for members: reduces the lower-left entry with
/// pseudo-Euclidean quotients, peels S and T factors, and rewrites into the
/// iota/gamma alphabet. Throws NotAMemberError when the reduction fails.
Word matrix_to_word(const GroupElement& g);

// Rotation-minimal representative of a cyclically reduced word; the conjugacy
// class key. Letter order: iota < gamma^1 < ... < gamma^(p-1).
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::vector<Letter> minimal_rotation)
      : rep_(std::move(minimal_rotation)) {}

  const std::vector<Letter>& letters() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  bool operator==(const CyclicWord& o) const { return rep_ == o.rep_; }
  bool operator!=(const CyclicWord& o) const { return rep_ != o.rep_; }
  bool operator<(const CyclicWord& o) const;

 private:
  std::vector<Letter> rep_;
};

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;  // w = conjugator * cyclic * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w, int p);

struct ConjugacyWitness {
  bool conjugate = false;
  Word witness;  // h with h * w2 * h^-1 = w1 on evaluation
};

/// Free-product conjugacy: equality of rotation-minimal cyclic words.
ConjugacyWitness are_conjugate(const Word& w1, const Word& w2, int p);

/// Aperiodicity of the cyclic word. Rejects non-hyperbolic input.
bool is_primitive(const Word& w, const RingContext& ctx);

/// Exponent sequence (j_1..j_n) of the V-block decomposition, where block j
/// is iota gamma^j; NotApplicable (nullopt) for torsion words.
std::optional<std::vector<int>> vblock_form(const Word& w, int p);

Word word_from_vblocks(const std::vector<int>& js, int p);

}  // namespace hecke
