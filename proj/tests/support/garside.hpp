#pragma once

#include <vector>

#include "purebraid/braid.hpp"
#include "purebraid/coxeter.hpp"

namespace purebraid::testing {

/// Left-greedy normal form Delta^k x_1 ... x_r of an Artin group of spherical
/// type, simple elements taken as elements of W.  Used only as a word-problem
/// oracle in tests.
struct GarsideForm {
  int delta_power = 0;
  std::vector<CoxElem> factors;
  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
};

class Garside {
 public:
  explicit Garside(const CoxeterGroup& group)
      : group_(group), delta_(group.longest_element(GenSet::all(group.rank()))) {}

  GarsideForm normal_form(const BraidWord& b) const {
    GarsideForm f;
    for (const auto& l : b.letters) {
      if (l.exp > 0) {
        f.factors.push_back(group_.generator(l.gen));
      } else {
        // s^-1 = Delta^-1 (w0 s); move Delta^-1 to the front
        for (auto& x : f.factors) x = delta_ * x * delta_;
        --f.delta_power;
        f.factors.push_back(group_.right_multiply(delta_, l.gen));
      }
    }
    left_weight(f);
    return f;
  }

  bool equal(const BraidWord& a, const BraidWord& b) const { return normal_form(a) == normal_form(b); }

 private:
  void left_weight(GarsideForm& f) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < f.factors.size(); ++i) {
        CoxElem& a = f.factors[i];
        CoxElem& b = f.factors[i + 1];
        for (;;) {
          const GenSet movable = group_.left_descents(b) - group_.right_descents(a);
          if (movable.empty()) break;
          const Gen s = movable.members().front();
          a = group_.right_multiply(a, s);
          b = group_.left_multiply(s, b);
          changed = true;
        }
      }
    }
    std::vector<CoxElem> kept;
    for (CoxElem x : f.factors) {
      if (x == delta_) {
        // leading Delta factors only: left-weighting put them first
        ++f.delta_power;
      } else if (!x.is_identity()) {
        kept.push_back(x);
      }
    }
    f.factors = std::move(kept);
  }

  const CoxeterGroup& group_;
  CoxElem delta_;
};

}  // namespace purebraid::testing
