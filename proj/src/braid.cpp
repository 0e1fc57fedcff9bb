#include "purebraid/braid.hpp"

#include <charconv>
#include <sstream>

namespace purebraid {

BraidWord BraidWord::positive(const Word& word) {
  BraidWord b;
  b.letters.reserve(word.size());
  for (Gen g : word) b.letters.push_back({g, 1});
  return b;
}

bool BraidWord::is_positive() const {
  for (const auto& l : letters) {
    if (l.exp < 0) return false;
  }
  return true;
}

Word BraidWord::letters_only() const {
  Word w;
  w.reserve(letters.size());
  for (const auto& l : letters) w.push_back(l.gen);
  return w;
}

BraidWord BraidWord::inverse() const {
  BraidWord b;
  b.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) b.letters.push_back({it->gen, -it->exp});
  return b;
}

BraidWord BraidWord::reversed() const {
  return BraidWord(std::vector<BraidLetter>(letters.rbegin(), letters.rend()));
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord b;
  for (const auto& l : letters) {
    if (!b.letters.empty() && b.letters.back().gen == l.gen && b.letters.back().exp == -l.exp) {
      b.letters.pop_back();
    } else {
      b.letters.push_back(l);
    }
  }
  return b;
}

BraidWord& BraidWord::operator*=(const BraidWord& other) {
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

BraidWord parse_braid(const CoxeterSystem& system, std::string_view text) {
  BraidWord b;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc{} || ptr != e.data() + e.size() || exp == 0) {
        throw CoxeterError("bad exponent in braid token '" + tok + "'");
      }
      tok.resize(caret);
    }
    const Gen g = system.gen(tok);
    const int sign = exp > 0 ? 1 : -1;
    for (int k = 0; k < exp * sign; ++k) b.letters.push_back({g, sign});
  }
  return b;
}

std::string format_braid(const CoxeterSystem& system, const BraidWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += ' ';
    out += system.label(word.letters[i].gen);
    if (word.letters[i].exp < 0) out += "^-1";
  }
  return out;
}

ReducedLift ReducedLift::from_word(const CoxeterGroup& group, const BraidWord& word) {
  if (!is_reduced_lift(group, word)) throw CoxeterError("braid word is not a reduced lift");
  return ReducedLift(word, project(group, word));
}

ReducedLift lift(CoxElem w) { return ReducedLift(BraidWord::positive(w.word()), w); }

CoxElem project(const CoxeterGroup& group, const BraidWord& word) {
  return group.normal_form(word.letters_only());
}

BraidWord reverse(const BraidWord& word) { return word.reversed(); }

bool is_reduced_lift(const CoxeterGroup& group, const BraidWord& word) {
  if (!word.is_positive()) throw CoxeterError("is_reduced_lift: word has a negative exponent");
  return group.is_reduced(word.letters_only());
}

Word alternating_letters(Gen s, Gen t, int i) {
  Word w;
  for (int k = 0; k < i; ++k) w.push_back(k % 2 == 0 ? s : t);
  return w;
}

BraidWord alternating_word(const CoxeterSystem& system, Gen s, Gen t, int i) {
  system.check_gen(s);
  system.check_gen(t);
  if (i < 0) throw CoxeterError("alternating word of negative length");
  if (s == t && i > 1) throw CoxeterError("alternating word needs s != t");
  if (s != t && system.finite_m(s, t) && i > system.m(s, t)) {
    throw CoxeterError("alternating word longer than m(s,t)");
  }
  return BraidWord::positive(alternating_letters(s, t, i));
}

bool left_divides(const ReducedLift& u, const ReducedLift& v) {
  const CoxeterGroup& g = u.element().group();
  const CoxElem q = g.multiply(g.inverse(u.element()), v.element());
  return static_cast<std::size_t>(g.length(q)) + u.length() == v.length();
}

}  // namespace purebraid
