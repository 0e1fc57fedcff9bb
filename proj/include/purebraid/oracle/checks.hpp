#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "purebraid/actions.hpp"
#include "purebraid/coxeter.hpp"
#include "purebraid/oracle/permutation_model.hpp"

namespace purebraid::oracle {

struct OracleReport {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  bool exhaustive = false;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Coxeter arithmetic against a permutation model: the element lists match
/// bijectively with equal lengths and descents, and products agree on every
/// pair when |W|^2 <= exhaustive_limit, else on `samples` random pairs.
/// Throws CoxeterError for infinite W.
OracleReport compare_with_oracle(const CoxeterGroup& group, const PermutationModel& model, std::size_t samples,
                                 std::uint64_t seed, std::size_t exhaustive_limit = 1000);

/// Signed point of the oracle carried by a basis class of an action model
/// (0 for a class that stays fixed).
///   "A":  a_k -> k
///   "B":  a1 -> 0, a_k -> +(k-1), b_k -> -(k-1)
///   "D":  a2 -> +1, a2' -> -1, a_k -> +(k-1), b_k -> -(k-1)
int class_point(const std::string& type, const std::string& basis_name);

/// The permutation model acting on the classes of action_model(type, n).
PermutationModel class_oracle(const std::string& type, int n);

/// The abelianized action of every generator is the (signed) permutation
/// action of the oracle on basis classes.  Types "A", "B", "D".
bool abelianized_matches_oracle(const ActionModel& model, const std::string& type, int n);

}  // namespace purebraid::oracle
