#include "purebraid/oracle/permutation_model.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace purebraid::oracle {

namespace {

SignedPerm transposition(int degree, int a, int b) {
  SignedPerm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i + 1;
  p[a - 1] = b;
  p[b - 1] = a;
  return p;
}

int apply(const SignedPerm& p, int x) {
  const int image = p[std::abs(x) - 1];
  return x > 0 ? image : -image;
}

}  // namespace

PermutationModel::PermutationModel(int degree, std::vector<SignedPerm> gens)
    : degree_(degree), gens_(std::move(gens)) {
  const SignedPerm e = identity();
  length_.emplace(e, 0);
  std::deque<SignedPerm> queue{e};
  while (!queue.empty()) {
    SignedPerm cur = queue.front();
    queue.pop_front();
    const int l = length_.at(cur);
    for (const auto& g : gens_) {
      SignedPerm next = compose(cur, g);
      if (length_.emplace(next, l + 1).second) queue.push_back(std::move(next));
    }
  }
}

PermutationModel PermutationModel::type_A(int n) {
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(transposition(n + 1, i, i + 1));
  return PermutationModel(n + 1, std::move(gens));
}

PermutationModel PermutationModel::type_B(int n) {
  std::vector<SignedPerm> gens;
  SignedPerm flip = transposition(n, 1, 1);
  flip[0] = -1;
  gens.push_back(flip);
  for (int i = 2; i <= n; ++i) gens.push_back(transposition(n, i - 1, i));
  return PermutationModel(n, std::move(gens));
}

PermutationModel PermutationModel::type_D(int n) {
  if (n < 2) throw std::invalid_argument("type D needs n >= 2");
  std::vector<SignedPerm> gens;
  gens.push_back(transposition(n, 1, 2));
  SignedPerm twisted = transposition(n, 1, 2);
  twisted[0] = -2;
  twisted[1] = -1;
  gens.push_back(twisted);
  for (int k = 3; k <= n; ++k) gens.push_back(transposition(n, k - 1, k));
  return PermutationModel(n, std::move(gens));
}

PermutationModel PermutationModel::named(const std::string& type) {
  if (type.size() < 2) throw std::invalid_argument("unknown type " + type);
  const int n = std::stoi(type.substr(1));
  switch (type[0]) {
    case 'A':
      return type_A(n);
    case 'B':
      return type_B(n);
    case 'D':
      return type_D(n);
    default:
      throw std::invalid_argument("no permutation model for " + type);
  }
}

SignedPerm PermutationModel::identity() const {
  SignedPerm p(degree_);
  for (int i = 0; i < degree_; ++i) p[i] = i + 1;
  return p;
}

SignedPerm PermutationModel::compose(const SignedPerm& a, const SignedPerm& b) const {
  SignedPerm p(degree_);
  for (int i = 0; i < degree_; ++i) p[i] = apply(a, b[i]);
  return p;
}

SignedPerm PermutationModel::inverse(const SignedPerm& a) const {
  SignedPerm p(degree_);
  for (int i = 0; i < degree_; ++i) {
    const int image = a[i];
    p[std::abs(image) - 1] = image > 0 ? i + 1 : -(i + 1);
  }
  return p;
}

SignedPerm PermutationModel::evaluate(const Word& word) const {
  SignedPerm p = identity();
  for (Gen g : word) p = compose(p, gens_.at(g));
  return p;
}

bool PermutationModel::right_descent(const SignedPerm& a, Gen s) const {
  return length(compose(a, gens_.at(s))) < length(a);
}

bool PermutationModel::left_descent(const SignedPerm& a, Gen s) const {
  return length(compose(gens_.at(s), a)) < length(a);
}

std::vector<SignedPerm> PermutationModel::elements() const {
  std::vector<SignedPerm> out;
  out.reserve(length_.size());
  for (const auto& [p, l] : length_) out.push_back(p);
  return out;
}

std::vector<SignedPerm> PermutationModel::reflections() const {
  std::set<SignedPerm> found;
  for (const auto& w : elements()) {
    for (const auto& g : gens_) found.insert(compose(compose(w, g), inverse(w)));
  }
  return {found.begin(), found.end()};
}

}  // namespace purebraid::oracle
