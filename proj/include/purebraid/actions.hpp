#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "purebraid/braid.hpp"
#include "purebraid/coxeter.hpp"
#include "purebraid/free_group.hpp"

namespace purebraid {

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Endomorphism of the free group on symbols 0..rank-1, given by the images
/// of the basis.
class FreeAut {
 public:
  FreeAut() = default;
  explicit FreeAut(std::vector<FreeWord> images);
  static FreeAut identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int sym) const { return images_.at(sym); }
  const std::vector<FreeWord>& images() const { return images_; }
  FreeWord apply(const FreeWord& w) const;

  friend bool operator==(const FreeAut&, const FreeAut&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// f o g: apply g first.
FreeAut aut_compose(const FreeAut& f, const FreeAut& g);
/// Inverse by Nielsen reduction of the image tuple; throws ActionError when the
/// greedy reduction does not reach a signed permutation of the basis.
FreeAut aut_invert(const FreeAut& f);
FreeAut aut_power(const FreeAut& f, int k);

/// Free basis with an action of an Artin group by automorphisms, one table
/// entry per Coxeter generator of the acting system.
struct ActionModel {
  std::string name;
  CoxeterSystem acting;
  std::vector<std::string> basis;
  std::vector<FreeAut> generators;
  std::vector<FreeAut> inverses;
  /// False for D_n, where the basis generates U_I but not freely.
  bool free = true;

  int rank() const { return static_cast<int>(basis.size()); }
  int symbol(const std::string& name) const;
  FreeWord parse(const std::string& text) const;
  std::string format(const FreeWord& w) const;

  /// Automorphism of a braid word, with act(v w) = act(v) o act(w).
  FreeAut automorphism(const BraidWord& b) const;
  FreeWord act(const BraidWord& b, const FreeWord& w) const;
};

/// "A", n >= 1: B(A_n) on a1..a(n+1), s_i a_i s_i^-1 = a(i+1).
/// "B", n >= 2: B(B_(n-1)) on a1..an, b2..bn (the group U_I of B_n).
/// "Bxy", n >= 2: the same action in the basis x1..xn, y1..y(n-1).
/// "I2", n = m >= 2: B(A_1) = <s> on a1..a(m-1).
/// "D", n >= 3: B(D_(n-1)) on a2, a2', a3..an, b3..bn (conjugation table only).
/// "L46", n ignored: two automorphisms s, t of the free group on w, x, y, z.
/// Every generator is checked to be invertible.
ActionModel action_model(const std::string& type, int n);

/// Substitutes x_i = b_n...b_2 a_1...a_i and y_i = b_n...b_(i+1) into a word
/// of the "Bxy" model, giving a word of the matching "B" model.
FreeWord xy_to_ab(const ActionModel& xy, const ActionModel& ab, const FreeWord& w);

using WordEquality = std::function<bool(const FreeWord&, const FreeWord&)>;

struct BraidRelationReport {
  std::size_t pairs_checked = 0;
  std::size_t symbols_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// For every pair s, t with m(s,t) finite, the alternating products of length
/// m agree on every basis symbol.  `equal` decides equality of the images
/// (free equality by default; pass a word-problem oracle for non-free models).
BraidRelationReport verify_braid_relations(const ActionModel& model, const WordEquality& equal = {});

struct SignedPermutation {
  std::vector<int> target;  // basis index of the image class
  std::vector<int> sign;    // +1 or -1
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};
/// Action of generator s on the abelianized free group; throws ActionError
/// when some basis image is not plus or minus a single basis class.
SignedPermutation abelianized_action(const ActionModel& model, Gen s);

struct NontrivialityReport {
  std::size_t sampled = 0;
  std::size_t nonzero_N = 0;
  std::size_t moved = 0;
  std::vector<std::string> fixed_words;  // nonzero N but acting trivially
  bool ok() const { return fixed_words.empty(); }
};
/// Random pure braid words (products of conjugates u s^(+-2) u^-1) of length
/// at most max_length; those with nonzero N must move some basis symbol.
NontrivialityReport nontriviality_sample(const ActionModel& model, std::size_t samples, std::uint64_t seed,
                                         int max_length = 8);

struct ConjTowerReport {
  std::size_t levels = 0;
  std::size_t generators_checked = 0;
  std::vector<std::string> images;    // "a[..] -> word" per generator
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Types "A" and "B" of rank n: for i = 2..n, conjugation by s_i maps every
/// generator of U_(i-1) to a word in the generators of U_i (Schreier rewriting
/// lands in the identity coset without Coxeter letters), distinct generators
/// have distinct images, and s_i commutes with I_(i-2).
ConjTowerReport conj_tower_check(const std::string& type, int n);

}  // namespace purebraid
