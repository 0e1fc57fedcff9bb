#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace purebraid {

using Gen = int;
using Word = std::vector<Gen>;

/// Coxeter matrix entry standing for m = infinity.
inline constexpr int kInfinity = 0;
inline constexpr int kMaxRank = 64;

class CoxeterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of the generating set, stored as a bitmask.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t bits) : bits_(bits) {}
  GenSet(std::initializer_list<Gen> gens) {
    for (Gen s : gens) insert(s);
  }

  static GenSet all(int rank) {
    return GenSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  bool contains(Gen s) const { return (bits_ >> s) & 1U; }
  void insert(Gen s) { bits_ |= std::uint64_t{1} << s; }
  void erase(Gen s) { bits_ &= ~(std::uint64_t{1} << s); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  std::uint64_t bits() const { return bits_; }
  bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::vector<Gen> members() const;

  friend GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend bool operator==(GenSet, GenSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A Coxeter matrix together with generator labels.
///
/// Named types follow the conventions used throughout the library:
///   A<n>      s1 .. sn on a path
///   B<n>      s1 .. sn, m(s1,s2) = 4
///   D<n>      s2, s2', s3, .., sn; s2 and s2' both attached to s3
///   I2(<m>)   s, t
///   Atilde<n> r, s, t for n = 2 (all m = 3); s0 .. sn on a cycle otherwise
///   E6-8, F4, H3, H4 with Bourbaki numbering
class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  explicit CoxeterSystem(std::vector<std::vector<int>> matrix,
                         std::vector<std::string> labels = {},
                         std::string name = {});

  static CoxeterSystem named(std::string_view type);
  /// {"rank": n, "m": [[...]], "labels": [...]}; infinity is 0, null or "inf".
  static CoxeterSystem from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  int rank() const { return rank_; }
  int m(Gen s, Gen t) const { return matrix_[s][t]; }
  bool finite_m(Gen s, Gen t) const { return matrix_[s][t] != kInfinity; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Gen s) const { return labels_.at(s); }
  Gen gen(std::string_view label) const;
  std::optional<Gen> find_gen(std::string_view label) const;
  void check_gen(Gen s) const;

  /// Whitespace separated labels; "1" or the empty string is the empty word.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& word, std::string_view sep = " ") const;
  /// Comma or whitespace separated labels.
  GenSet parse_set(std::string_view text) const;
  std::string format_set(GenSet set) const;

  /// Standard parabolic subsystem on J, keeping labels.  `embedding[i]` is the
  /// generator of this system corresponding to generator i of the result.
  std::pair<CoxeterSystem, std::vector<Gen>> parabolic(GenSet J) const;

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.matrix_ == b.matrix_ && a.labels_ == b.labels_;
  }

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> matrix_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Result of the finite-type classification of a parabolic subsystem.
enum class Sphericity { finite, infinite, undecided };

/// Name of the finite Coxeter type of the connected diagram on J, or nullopt
/// when the component is not of finite type.  J must be connected.
std::optional<std::string> classify_finite_component(const CoxeterSystem& system, GenSet J);
/// Connected components of the Coxeter graph restricted to J.
std::vector<GenSet> connected_components(const CoxeterSystem& system, GenSet J);

class CoxeterGroup;

/// An element of W.  Handle into the owning CoxeterGroup, which must outlive it.
class CoxElem {
 public:
  CoxElem() = default;

  const CoxeterGroup& group() const { return *group_; }
  std::uint32_t id() const { return id_; }
  bool valid() const { return group_ != nullptr; }

  /// ShortLex-minimal reduced word.
  Word word() const;
  int length() const;
  bool is_identity() const;
  std::string str() const;

  CoxElem operator*(CoxElem other) const;
  CoxElem inverse() const;

  friend bool operator==(const CoxElem& a, const CoxElem& b) {
    return a.group_ == b.group_ && a.id_ == b.id_;
  }
  /// Ordering by discovery id; use shortlex_less for a canonical order.
  friend std::strong_ordering operator<=>(const CoxElem& a, const CoxElem& b) {
    if (auto c = std::compare_three_way{}(a.group_, b.group_); c != 0) return c;
    return a.id_ <=> b.id_;
  }

 private:
  friend class CoxeterGroup;
  CoxElem(const CoxeterGroup* group, std::uint32_t id) : group_(group), id_(id) {}

  const CoxeterGroup* group_ = nullptr;
  std::uint32_t id_ = 0;
};

bool shortlex_less(const Word& a, const Word& b);
bool shortlex_less(const CoxElem& a, const CoxElem& b);

/// A reflection u s u^-1 with l = 2 l(u) + 1; u s ~u is the ShortLex-least
/// palindromic reduced expression.
struct Reflection {
  CoxElem element;
  CoxElem u;
  Gen s = 0;

  friend bool operator==(const Reflection& a, const Reflection& b) {
    return a.element == b.element;
  }
};

/// Certificate of s.b = b.t for the exchange situation in the braid monoid.
struct ExchangeCertificate {
  Word lhs;  // s b
  Word rhs;  // b t
  bool verified = false;
};

struct GroupLimits {
  int max_length = 20;
  std::size_t max_elements = 1'000'000;
};

/// Exact arithmetic in W.
///
/// Elements are interned by the braid-move class of their reduced words
/// (Tits' solution of the word problem): each new element's class is closed
/// under braid moves once, and every word of the class is indexed, so
/// subsequent multiplications are table lookups.  The cache is guarded by a
/// mutex; results are independent of call order.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterSystem system, GroupLimits limits = {});
  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterSystem& system() const { return system_; }
  int rank() const { return system_.rank(); }
  const GroupLimits& limits() const { return limits_; }

  CoxElem identity() const { return CoxElem(this, 0); }
  CoxElem generator(Gen s) const;
  CoxElem normal_form(const Word& word) const;
  CoxElem parse(std::string_view text) const { return normal_form(system_.parse_word(text)); }

  CoxElem multiply(CoxElem a, CoxElem b) const;
  CoxElem inverse(CoxElem a) const;
  CoxElem right_multiply(CoxElem a, Gen s) const;
  CoxElem left_multiply(Gen s, CoxElem a) const;
  /// v a v^-1
  CoxElem conjugate(CoxElem v, CoxElem a) const;

  Word word(CoxElem a) const;
  int length(CoxElem a) const;
  std::string format(CoxElem a) const { return system_.format_word(word(a)); }

  bool is_reduced(const Word& word) const;
  GenSet right_descents(CoxElem a) const;
  GenSet left_descents(CoxElem a) const;
  /// Letters occurring in any (equivalently every) reduced word.
  GenSet support(CoxElem a) const;
  bool in_parabolic(CoxElem a, GenSet J) const { return support(a).subset_of(J); }

  /// Full braid-move class of reduced expressions, ShortLex sorted.
  std::vector<Word> reduced_words(CoxElem a) const;

  ExchangeCertificate exchange_witness(CoxElem b, Gen s, Gen t) const;

  bool is_reflection(CoxElem a) const;
  Reflection make_reflection(CoxElem a) const;
  /// All reflections of length <= max_length (the cap is ignored for finite W).
  std::vector<Reflection> reflections(int max_length) const;
  Reflection conjugate_reflection(CoxElem w, const Reflection& r) const;
  /// Palindromic form u s ~u of a reduced expression of a reflection.
  std::pair<CoxElem, Gen> palindromize(const Word& word) const;

  /// Decided by the finite-type classification of each component.
  Sphericity sphericity(GenSet I) const;
  bool is_spherical(GenSet I) const { return sphericity(I) == Sphericity::finite; }
  /// Order of W_I by bounded closure; nullopt when a cap is hit.
  std::optional<std::size_t> parabolic_order(GenSet I) const;
  CoxElem longest_element(GenSet I) const;
  bool is_finite() const { return is_spherical(GenSet::all(rank())); }

  /// No s in I with l(s w) < l(w).
  bool is_I_reduced(CoxElem w, GenSet I) const { return (left_descents(w) & I).empty(); }
  /// No s in J with l(w s) < l(w).
  bool is_reduced_J(CoxElem w, GenSet J) const { return (right_descents(w) & J).empty(); }
  /// Minimal representative of W_I w.
  CoxElem coset_rep(CoxElem w, GenSet I) const;
  /// Minimal representative of w W_J.
  CoxElem right_coset_rep(CoxElem w, GenSet J) const;

  /// By increasing length, ShortLex within a length.
  std::vector<CoxElem> enumerate_elements(int max_length) const;
  std::vector<CoxElem> enumerate_I_reduced(GenSet I, int max_length) const;
  std::vector<CoxElem> enumerate_parabolic(GenSet J, int max_length) const;

  /// Number of interned elements so far.
  std::size_t cache_size() const;

 private:
  struct Node {
    std::string key;  // ShortLex-minimal reduced word, one char per generator
    std::uint64_t rdes = 0;
    std::uint64_t ldes = 0;
    std::uint64_t support = 0;
    std::vector<std::string> ends_with;    // per generator: word ending with it, or empty
    std::vector<std::string> starts_with;  // per generator: word starting with it, or empty
    std::vector<std::int64_t> right;       // cached products, -1 when unknown
    std::vector<std::int64_t> left;
  };

  std::uint32_t intern_locked(const std::string& reduced_word) const;
  std::uint32_t right_locked(std::uint32_t id, Gen s) const;
  std::uint32_t left_locked(Gen s, std::uint32_t id) const;
  std::vector<std::string> braid_class(const std::string& word) const;
  void check_same(CoxElem a) const;

  CoxeterSystem system_;
  GroupLimits limits_;
  mutable std::mutex mutex_;
  mutable std::vector<Node> nodes_;
  mutable std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace purebraid

template <>
struct std::hash<purebraid::CoxElem> {
  std::size_t operator()(const purebraid::CoxElem& e) const noexcept {
    return std::hash<std::uint32_t>{}(e.id()) ^
           (std::hash<const void*>{}(&e.group()) << 1);
  }
};
