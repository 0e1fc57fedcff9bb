#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace purebraid {

struct FreeLetter {
  int sym = 0;
  int exp = 1;  // +1 or -1

  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

/// Freely reduced word in a free group on symbols 0, 1, 2, ...
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(const std::vector<FreeLetter>& letters);
  static FreeWord generator(int sym, int exp = 1) { return FreeWord({{sym, exp}}); }

  const std::vector<FreeLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_symbol() const;

  void push_back(FreeLetter l);
  FreeWord inverse() const;
  FreeWord pow(int k) const;
  /// Sum of exponents of `sym`.
  int exponent_sum(int sym) const;

  FreeWord& operator*=(const FreeWord& other);
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Names joined by spaces, inverses as "x^-1", identity "1".
  std::string format(const std::vector<std::string>& names) const;

 private:
  std::vector<FreeLetter> letters_;
};

/// ShortLex order on letter sequences, letters ordered by (sym, exp).
bool shortlex_less(const FreeWord& a, const FreeWord& b);

/// Inverse of FreeWord::format; throws std::invalid_argument on unknown names.
FreeWord parse_free_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace purebraid
