#include "purebraid/oracle/checks.hpp"

#include <random>
#include <set>

namespace purebraid::oracle {

OracleReport compare_with_oracle(const CoxeterGroup& group, const PermutationModel& model, std::size_t samples,
                                 std::uint64_t seed, std::size_t exhaustive_limit) {
  OracleReport report;
  const auto elems = group.enumerate_elements(-1);
  report.elements = elems.size();
  const auto& sys = group.system();
  if (elems.size() != model.order()) {
    report.mismatches.push_back("order " + std::to_string(elems.size()) + " vs " + std::to_string(model.order()));
    return report;
  }
  std::vector<SignedPerm> images;
  std::set<SignedPerm> distinct;
  for (CoxElem w : elems) {
    const SignedPerm p = model.evaluate(w.word());
    images.push_back(p);
    distinct.insert(p);
    const std::string name = w.is_identity() ? "1" : sys.format_word(w.word());
    if (model.length(p) != w.length()) report.mismatches.push_back("length of " + name);
    for (Gen s = 0; s < group.rank(); ++s) {
      if (group.right_descents(w).contains(s) != model.right_descent(p, s) ||
          group.left_descents(w).contains(s) != model.left_descent(p, s)) {
        report.mismatches.push_back("descents of " + name);
        break;
      }
    }
  }
  if (distinct.size() != elems.size()) report.mismatches.push_back("normal forms are not injective");

  auto check = [&](std::size_t i, std::size_t j) {
    ++report.pairs;
    if (model.evaluate((elems[i] * elems[j]).word()) != model.compose(images[i], images[j])) {
      report.mismatches.push_back("product " + sys.format_word(elems[i].word()) + " * " +
                                  sys.format_word(elems[j].word()));
    }
  };
  const std::size_t n = elems.size();
  if (n * n <= exhaustive_limit) {
    report.exhaustive = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) check(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < samples; ++k) {
      const std::size_t i = pick(rng);
      check(i, pick(rng));
    }
  }
  return report;
}

int class_point(const std::string& type, const std::string& basis_name) {
  if (basis_name == "a2'") return -1;
  const int k = std::stoi(basis_name.substr(1));
  if (type == "A") return k;
  if (type == "B" && basis_name == "a1") return 0;
  if (type == "D" && basis_name == "a2") return 1;
  return basis_name[0] == 'a' ? k - 1 : -(k - 1);
}

PermutationModel class_oracle(const std::string& type, int n) {
  if (type == "A") return PermutationModel::type_A(n);
  if (type == "B") return PermutationModel::type_B(n - 1);
  if (type == "D") return PermutationModel::type_D(n - 1);
  throw ActionError("no permutation oracle for action type " + type);
}

bool abelianized_matches_oracle(const ActionModel& model, const std::string& type, int n) {
  const PermutationModel oracle = class_oracle(type, n);
  for (Gen s = 0; s < model.acting.rank(); ++s) {
    const SignedPermutation p = abelianized_action(model, s);
    const SignedPerm& g = oracle.generator(s);
    for (int k = 0; k < model.rank(); ++k) {
      if (p.sign[k] != 1) return false;
      const int c = class_point(type, model.basis[k]);
      const int expected = c == 0 ? 0 : (c > 0 ? g[c - 1] : -g[-c - 1]);
      if (class_point(type, model.basis[p.target[k]]) != expected) return false;
    }
  }
  return true;
}

}  // namespace purebraid::oracle
