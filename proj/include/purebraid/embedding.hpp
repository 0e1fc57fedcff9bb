#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purebraid/actions.hpp"
#include "purebraid/braid.hpp"
#include "purebraid/free_group.hpp"

namespace purebraid {

/// B(B_n) -> B(A_n) with its free-group certificate.
/// Source side: the "B" model of rank n+1, i.e. B(B_n) acting on
/// F' = <a1..a(n+1), b2..b(n+1)> (a1 here is a'1 of the usual notation).
/// Target side: the "A" model of rank n, B(A_n) acting on F = <a1..a(n+1)>.
struct EmbeddingInstance {
  int n = 0;
  ActionModel source;
  ActionModel target;
};

EmbeddingInstance make_embedding(int n);

/// s'1^e -> s1^2e, s'i^e -> si^e.
BraidWord phi(const EmbeddingInstance& inst, const BraidWord& b);

/// a'1 -> a1^2, a'i -> ai, bi -> a1..ai a(i-1)^-1..a1^-1.
FreeWord psi(const EmbeddingInstance& inst, const FreeWord& u);

/// Rewrites a word of F in x_i = a1...ai (symbol i-1 stands for x_i).
FreeWord to_x_basis(const EmbeddingInstance& inst, const FreeWord& w);
FreeWord from_x_basis(const EmbeddingInstance& inst, const FreeWord& x);

enum class Parity { even, odd };
/// Exponent sum in the x-basis mod 2.
Parity parity(const EmbeddingInstance& inst, const FreeWord& w);
std::string to_string(Parity p);

/// The preimage under psi of an even word (nullopt for odd words).  Schreier
/// rewriting with transversal {1, x1}: each pair of consecutive x-letters
/// becomes a word in x1^2 = psi(a'1), x(i-1)^-1 xi = psi(a'i) and
/// xi x(i-1)^-1 = psi(bi).
std::optional<FreeWord> membership_psi_image(const EmbeddingInstance& inst, const FreeWord& w);

struct EquivarianceReport {
  std::size_t exhaustive_pairs = 0;
  std::size_t sampled_pairs = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// psi(g.u) = phi(g).psi(u) for every (generator^(+-1), basis symbol) and for
/// `samples` random pairs with |g| <= max_braid_length, |u| <= 8.
EquivarianceReport equivariance_check(const EmbeddingInstance& inst, std::size_t samples, std::uint64_t seed,
                                      int max_braid_length = 6);

struct MembershipReport {
  std::size_t generators_even = 0;   // psi images of the basis of F' with even parity
  std::size_t even_words = 0;        // random even words pulled back
  std::size_t odd_words = 0;         // random odd words rejected
  std::vector<std::string> index2_failures;     // odd generator image, accepted odd word
  std::vector<std::string> roundtrip_failures;  // psi(membership(w)) != w
  bool index2_ok() const { return index2_failures.empty(); }
  bool roundtrip_ok() const { return roundtrip_failures.empty(); }
  bool ok() const { return index2_ok() && roundtrip_ok(); }
};
/// Index 2 and round trip: every psi(generator) is even; psi(membership(w)) = w
/// on `samples` random even words; odd words have no preimage.
MembershipReport membership_check(const EmbeddingInstance& inst, std::size_t samples, std::uint64_t seed);

struct RelationImageReport {
  std::size_t relations = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Each braid relation of B_n maps under phi to two words with equal
/// automorphisms of F and equal eval_Np.
RelationImageReport phi_relation_check(const EmbeddingInstance& inst);

struct EmbeddingReport {
  int n = 0;
  EquivarianceReport equivariance;
  MembershipReport membership;
  RelationImageReport relations;
  bool ok() const { return equivariance.ok() && membership.ok() && relations.ok(); }
};
EmbeddingReport verify_embedding(int n, std::size_t samples, std::uint64_t seed);

}  // namespace purebraid
