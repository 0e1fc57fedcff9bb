#include <doctest.h>

#include <random>

#include "purebraid/embedding.hpp"
#include "purebraid/nmap.hpp"

using namespace purebraid;

namespace {

FreeWord random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> sym(0, rank - 1);
  std::bernoulli_distribution inv(0.5);
  FreeWord w;
  for (int i = 0; i < len; ++i) w.push_back({sym(rng), inv(rng) ? -1 : 1});
  return w;
}

}  // namespace

TEST_CASE("instance shapes") {
  for (int n = 1; n <= 4; ++n) {
    const EmbeddingInstance inst = make_embedding(n);
    CHECK(inst.source.rank() == 2 * n + 1);
    CHECK(inst.target.rank() == n + 1);
    CHECK(inst.source.acting.rank() == n);
    CHECK(inst.target.acting.rank() == n);
  }
  CHECK_THROWS_AS(make_embedding(0), ActionError);
}

TEST_CASE("phi") {
  const EmbeddingInstance inst = make_embedding(3);
  const auto& src = inst.source.acting;
  const auto& tgt = inst.target.acting;
  CHECK(format_braid(tgt, phi(inst, parse_braid(src, "s1"))) == "s1 s1");
  CHECK(format_braid(tgt, phi(inst, parse_braid(src, "s2 s1^-1"))) == "s2 s1^-1 s1^-1");
  CHECK(phi(inst, BraidWord{}).empty());
  CHECK_THROWS_AS(phi(inst, BraidWord({{3, 1}})), ActionError);

  // s1^2 s2 s1^2 s2 = s2 s1^2 s2 s1^2 in B(A_n), seen by eval_Np
  const CoxeterGroup a3(tgt);
  CHECK(eval_Np(a3, parse_braid(tgt, "s1 s1 s2 s1 s1 s2")) == eval_Np(a3, parse_braid(tgt, "s2 s1 s1 s2 s1 s1")));
  CHECK(!(eval_Np(a3, parse_braid(tgt, "s1 s2 s1 s2")) == eval_Np(a3, parse_braid(tgt, "s2 s1 s2 s1"))));

  const auto rel = phi_relation_check(inst);
  CHECK(rel.ok());
  CHECK(rel.relations == 3);
}

TEST_CASE("psi table") {
  const EmbeddingInstance inst = make_embedding(3);
  const ActionModel& s = inst.source;
  const ActionModel& t = inst.target;
  CHECK(t.format(psi(inst, s.parse("a1"))) == "a1 a1");
  CHECK(t.format(psi(inst, s.parse("a3"))) == "a3");
  CHECK(t.format(psi(inst, s.parse("b2"))) == "a1 a2 a1^-1");
  CHECK(t.format(psi(inst, s.parse("b4"))) == "a1 a2 a3 a4 a3^-1 a2^-1 a1^-1");
  CHECK(t.format(psi(inst, s.parse("a2 b2^-1"))) == "a2 a1 a2^-1 a1^-1");
  CHECK(psi(inst, FreeWord()).empty());
}

TEST_CASE("x basis and parity") {
  const EmbeddingInstance inst = make_embedding(3);
  const ActionModel& t = inst.target;
  const std::vector<std::string> xs{"x1", "x2", "x3", "x4"};
  CHECK(to_x_basis(inst, t.parse("a1")).format(xs) == "x1");
  CHECK(parity(inst, t.parse("a1")) == Parity::odd);
  CHECK(parity(inst, t.parse("a1^-1")) == Parity::odd);
  CHECK(parity(inst, t.parse("a1 a4 a1 a4 a2^-1")) == Parity::even);
  CHECK(to_x_basis(inst, t.parse("a1 a1")).format(xs) == "x1 x1");
  CHECK(to_x_basis(inst, t.parse("a1 a2")).format(xs) == "x2");
  CHECK(to_x_basis(inst, t.parse("a3")).format(xs) == "x2^-1 x3");
  CHECK(parity(inst, t.parse("a3")) == Parity::even);
  CHECK(to_string(Parity::odd) == "odd");

  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const FreeWord u = random_word(rng, t.rank(), 9);
    const FreeWord v = random_word(rng, t.rank(), 9);
    CHECK(from_x_basis(inst, to_x_basis(inst, u)) == u);
    // parity is a homomorphism to Z/2
    const bool pu = parity(inst, u) == Parity::odd;
    const bool pv = parity(inst, v) == Parity::odd;
    CHECK((parity(inst, u * v) == Parity::odd) == (pu != pv));
  }
}

TEST_CASE("membership in the image of psi") {
  const EmbeddingInstance inst = make_embedding(3);
  const ActionModel& s = inst.source;
  const ActionModel& t = inst.target;
  const auto back = membership_psi_image(inst, t.parse("a1 a1"));
  REQUIRE(back);
  CHECK(s.format(*back) == "a1");
  CHECK(!membership_psi_image(inst, t.parse("a1 a2")));
  CHECK(membership_psi_image(inst, FreeWord()) == FreeWord());

  // psi is injective: pulling back psi(u) recovers u
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    const FreeWord u = random_word(rng, s.rank(), 10);
    const auto again = membership_psi_image(inst, psi(inst, u));
    REQUIRE(again);
    CHECK(*again == u);
  }
  CHECK(membership_check(inst, 200, 1).ok());
  for (int n = 1; n <= 4; ++n) {
    const auto r = membership_check(make_embedding(n), 300, n);
    CHECK(r.ok());
    CHECK(r.generators_even == static_cast<std::size_t>(2 * n + 1));
    CHECK(r.even_words == 300);
  }
}

TEST_CASE("equivariance") {
  const EmbeddingInstance two = make_embedding(2);
  const ActionModel& s = two.source;
  const ActionModel& t = two.target;
  auto both_sides = [&](const char* g, const char* u) {
    const BraidWord b = parse_braid(s.acting, g);
    return std::pair{psi(two, s.act(b, s.parse(u))), t.act(phi(two, b), psi(two, s.parse(u)))};
  };
  {
    const auto [lhs, rhs] = both_sides("s2", "a2");
    CHECK(lhs == rhs);
    CHECK(t.format(lhs) == "a3");
  }
  {
    const auto [lhs, rhs] = both_sides("s1", "b2");
    CHECK(lhs == rhs);
    CHECK(t.format(lhs) == "a2");
  }
  for (int n : {2, 3}) {
    const auto r = equivariance_check(make_embedding(n), 200, 7);
    CHECK(r.ok());
    CHECK(r.exhaustive_pairs == static_cast<std::size_t>(2 * n * (2 * n + 1)));
    CHECK(r.sampled_pairs == 200);
  }
  CHECK(equivariance_check(make_embedding(4), 100, 8).ok());
}

TEST_CASE("a wrong target table breaks equivariance") {
  EmbeddingInstance inst = make_embedding(2);
  // swap the roles of s1 and s2 on the target side
  std::swap(inst.target.generators[0], inst.target.generators[1]);
  std::swap(inst.target.inverses[0], inst.target.inverses[1]);
  CHECK(!equivariance_check(inst, 0, 0).ok());
}

TEST_CASE("report") {
  const auto r = verify_embedding(3, 200, 0);
  CHECK(r.ok());
  CHECK(r.n == 3);
}
