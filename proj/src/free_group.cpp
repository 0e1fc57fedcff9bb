#include "purebraid/free_group.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace purebraid {

FreeWord::FreeWord(const std::vector<FreeLetter>& letters) {
  for (const auto& l : letters) push_back(l);
}

int FreeWord::max_symbol() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.sym);
  return m;
}

void FreeWord::push_back(FreeLetter l) {
  if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("free letter exponent must be +-1");
  if (!letters_.empty() && letters_.back().sym == l.sym && letters_.back().exp == -l.exp) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->sym, -it->exp});
  return w;
}

FreeWord FreeWord::pow(int k) const {
  const FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

int FreeWord::exponent_sum(int sym) const {
  int total = 0;
  for (const auto& l : letters_) {
    if (l.sym == sym) total += l.exp;
  }
  return total;
}

FreeWord& FreeWord::operator*=(const FreeWord& other) {
  for (const auto& l : other.letters_) push_back(l);
  return *this;
}

std::string FreeWord::format(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += names.at(letters_[i].sym);
    if (letters_[i].exp < 0) out += "^-1";
  }
  return out;
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

FreeWord parse_free_word(std::string_view text, const std::vector<std::string>& names) {
  FreeWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (auto caret = tok.rfind('^'); caret != std::string::npos) {
      const std::string e = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc{} || ptr != e.data() + e.size() || exp == 0) {
        throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
      tok.resize(caret);
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw std::invalid_argument("unknown symbol '" + tok + "'");
    const int sym = static_cast<int>(it - names.begin());
    w *= FreeWord::generator(sym).pow(exp);
  }
  return w;
}

}  // namespace purebraid
