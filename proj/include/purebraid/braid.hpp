#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "purebraid/coxeter.hpp"

namespace purebraid {

struct BraidLetter {
  Gen gen = 0;
  int exp = 1;  // +1 or -1

  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the Artin generators and their inverses.
///
/// Equality of braid words is syntactic.  The braid group word problem is not
/// solved here; equality is only available inside reduced lifts (through the
/// Coxeter image) or modulo the derived subgroup of the pure braid group
/// (see nmap.hpp).
struct BraidWord {
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> ls) : letters(std::move(ls)) {}
  /// The positive word with the given letters.
  static BraidWord positive(const Word& word);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool is_positive() const;
  /// Underlying generator sequence with exponents dropped.
  Word letters_only() const;

  BraidWord inverse() const;
  /// Letters reversed, exponents kept.
  BraidWord reversed() const;
  /// Cancels adjacent s s^-1 pairs.
  BraidWord freely_reduced() const;

  BraidWord& operator*=(const BraidWord& other);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Tokens "s1", "s2^-1", "s2^2" separated by whitespace; "1" is the empty word.
BraidWord parse_braid(const CoxeterSystem& system, std::string_view text);
std::string format_braid(const CoxeterSystem& system, const BraidWord& word);

/// Positive braid word whose image in W has length equal to its word length.
class ReducedLift {
 public:
  /// Throws when `word` is not positive or not reduced.
  static ReducedLift from_word(const CoxeterGroup& group, const BraidWord& word);

  const BraidWord& word() const { return word_; }
  CoxElem element() const { return element_; }
  std::size_t length() const { return word_.size(); }

 private:
  friend ReducedLift lift(CoxElem w);
  ReducedLift(BraidWord word, CoxElem element) : word_(std::move(word)), element_(element) {}

  BraidWord word_;
  CoxElem element_;
};

/// Canonical section W -> B_W: the lift of the ShortLex normal word.
ReducedLift lift(CoxElem w);
/// The canonical morphism p: B_W -> W.
CoxElem project(const CoxeterGroup& group, const BraidWord& word);
BraidWord reverse(const BraidWord& word);
/// Throws on a negative exponent.
bool is_reduced_lift(const CoxeterGroup& group, const BraidWord& word);
/// s t s ... with i letters; throws when i exceeds m(s,t).
BraidWord alternating_word(const CoxeterSystem& system, Gen s, Gen t, int i);
Word alternating_letters(Gen s, Gen t, int i);
/// u left-divides v among reduced lifts: l(p(u)^-1 p(v)) = l(v) - l(u).
bool left_divides(const ReducedLift& u, const ReducedLift& v);

}  // namespace purebraid
