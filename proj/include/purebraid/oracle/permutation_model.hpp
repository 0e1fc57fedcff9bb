#pragma once

#include <map>
#include <string>
#include <vector>

#include "purebraid/coxeter.hpp"

namespace purebraid::oracle {

/// Signed permutation of {1..N}; entry i-1 is the image of i.
using SignedPerm = std::vector<int>;

/// Concrete (signed) permutation realisation of a finite Coxeter group of
/// type A, B or D.  Lengths and descents come from a breadth-first search of
/// the Cayley graph, so nothing here depends on braid moves.
///
/// Generator order matches CoxeterSystem::named:
///   A<n>: s_i = (i, i+1) on n+1 points
///   B<n>: s1 = sign change of 1, s_i = (i-1, i) for i >= 2
///   D<n>: s2 = (1, 2), s2' = (1 -> -2, 2 -> -1), s_k = (k-1, k) for k >= 3
class PermutationModel {
 public:
  static PermutationModel type_A(int n);
  static PermutationModel type_B(int n);
  static PermutationModel type_D(int n);
  /// "A3", "B3", "D4", ...
  static PermutationModel named(const std::string& type);

  int rank() const { return static_cast<int>(gens_.size()); }
  int degree() const { return degree_; }
  const SignedPerm& generator(Gen s) const { return gens_.at(s); }
  SignedPerm identity() const;
  /// (a b)(x) = a(b(x)).
  SignedPerm compose(const SignedPerm& a, const SignedPerm& b) const;
  SignedPerm inverse(const SignedPerm& a) const;
  /// Image of the word s_1 ... s_k = s_1 o ... o s_k.
  SignedPerm evaluate(const Word& word) const;

  std::size_t order() const { return length_.size(); }
  int length(const SignedPerm& a) const { return length_.at(a); }
  bool right_descent(const SignedPerm& a, Gen s) const;
  bool left_descent(const SignedPerm& a, Gen s) const;
  std::vector<SignedPerm> elements() const;
  /// Conjugates of the generators.
  std::vector<SignedPerm> reflections() const;

 private:
  PermutationModel(int degree, std::vector<SignedPerm> gens);

  int degree_ = 0;
  std::vector<SignedPerm> gens_;
  std::map<SignedPerm, int> length_;
};

}  // namespace purebraid::oracle
