#include <doctest.h>

#include <random>
#include <set>

#include "purebraid/coxeter.hpp"
#include "purebraid/oracle/permutation_model.hpp"

using namespace purebraid;
using purebraid::oracle::PermutationModel;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(d(rng));
  return w;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("system validation") {
  CHECK(CoxeterSystem({{1, 3}, {3, 1}}).rank() == 2);
  auto b3 = CoxeterSystem({{1, 3, 2}, {3, 1, 4}, {2, 4, 1}});
  CHECK(b3.m(1, 2) == 4);
  CHECK_THROWS_AS(CoxeterSystem({{1, 2}, {3, 1}}), CoxeterError);
  CHECK_THROWS_AS(CoxeterSystem({{2, 3}, {3, 1}}), CoxeterError);
  CHECK_THROWS_AS(CoxeterSystem({{1, 1}, {1, 1}}), CoxeterError);
  CHECK_THROWS_AS(CoxeterSystem({{1, 3}, {3, 1}}, {"a", "a"}), CoxeterError);
}

TEST_CASE("named systems and JSON") {
  auto d4 = CoxeterSystem::named("D4");
  CHECK(d4.labels() == std::vector<std::string>{"s2", "s2'", "s3", "s4"});
  CHECK(d4.m(0, 1) == 2);
  CHECK(d4.m(0, 2) == 3);
  CHECK(d4.m(1, 2) == 3);
  auto at = CoxeterSystem::named("Atilde2");
  CHECK(at.labels() == std::vector<std::string>{"r", "s", "t"});
  CHECK(at.m(0, 2) == 3);
  auto j = nlohmann::json::parse(R"({"rank":2,"m":[[1,"inf"],[null,1]],"labels":["x","y"]})");
  auto sys = CoxeterSystem::from_json(j);
  CHECK(sys.m(0, 1) == kInfinity);
  CHECK(CoxeterSystem::from_json(sys.to_json()) == sys);
  CHECK_THROWS_AS(CoxeterSystem::named("Q7"), CoxeterError);
}

TEST_CASE("finite type classification") {
  for (const char* name : {"A1", "A5", "B4", "D4", "D6", "E6", "E7", "E8", "F4", "H3", "H4", "I2(7)"}) {
    auto sys = CoxeterSystem::named(name);
    CoxeterGroup g(sys);
    CHECK_MESSAGE(g.is_finite(), name);
  }
  for (const char* name : {"Atilde2", "Atilde4", "I2(inf)"}) {
    CoxeterGroup g(CoxeterSystem::named(name));
    CHECK_MESSAGE(!g.is_finite(), name);
  }
  // a path with two heavy edges, and E-like diagrams with long arms
  CoxeterSystem bb({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}});
  CHECK(!CoxeterGroup(bb).is_finite());
  CoxeterSystem h5({{1, 5, 2, 2, 2}, {5, 1, 3, 2, 2}, {2, 3, 1, 3, 2}, {2, 2, 3, 1, 3}, {2, 2, 2, 3, 1}});
  CHECK(!CoxeterGroup(h5).is_finite());
}

TEST_CASE("normal forms in A2") {
  CoxeterGroup g(CoxeterSystem::named("A2"));
  const auto& sys = g.system();
  CHECK(g.parse("s1 s2 s1 s1").word() == sys.parse_word("s1 s2"));
  CHECK(g.parse("s2 s1 s2").word() == sys.parse_word("s1 s2 s1"));
  CHECK(g.parse("s1 s1").is_identity());
  CHECK(g.inverse(g.parse("s1 s2")).word() == sys.parse_word("s2 s1"));
  CHECK(g.is_reduced(sys.parse_word("s1 s2 s1")));
  CHECK(!g.is_reduced(sys.parse_word("s1 s1")));
  CHECK(g.right_descents(g.parse("s1 s2 s1")) == GenSet{0, 1});
  CHECK(g.enumerate_elements(-1).size() == 6);
  CHECK(g.longest_element(GenSet{0, 1}).word() == sys.parse_word("s1 s2 s1"));
  CHECK(g.coset_rep(g.parse("s1 s2"), GenSet{0}).word() == sys.parse_word("s2"));
  CHECK(g.coset_rep(g.identity(), GenSet{0}).is_identity());
}

TEST_CASE("permutation oracle agreement") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A3", "B3", "D4"}) {
    CAPTURE(name);
    CoxeterGroup g(CoxeterSystem::named(name));
    auto model = PermutationModel::named(name);
    auto elems = g.enumerate_elements(-1);
    CHECK(elems.size() == model.order());
    std::set<oracle::SignedPerm> images;
    for (CoxElem w : elems) {
      auto p = model.evaluate(w.word());
      images.insert(p);
      CHECK(model.length(p) == w.length());
      for (Gen s = 0; s < g.rank(); ++s) {
        CHECK(g.right_descents(w).contains(s) == model.right_descent(p, s));
        CHECK(g.left_descents(w).contains(s) == model.left_descent(p, s));
      }
    }
    CHECK(images.size() == elems.size());
    for (int i = 0; i < 500; ++i) {
      Word a = random_word(rng, g.rank(), 10);
      Word b = random_word(rng, g.rank(), 10);
      CoxElem ab = g.normal_form(a) * g.normal_form(b);
      CHECK(model.evaluate(ab.word()) == model.compose(model.evaluate(a), model.evaluate(b)));
      CHECK(g.normal_form(concat(a, b)) == ab);
    }
  }
}

TEST_CASE("B3 multiplication on all short pairs") {
  CoxeterGroup g(CoxeterSystem::named("B3"));
  auto model = PermutationModel::type_B(3);
  auto elems = g.enumerate_elements(4);
  for (CoxElem a : elems) {
    for (CoxElem b : elems) {
      CHECK(model.evaluate((a * b).word()) == model.compose(model.evaluate(a.word()), model.evaluate(b.word())));
    }
  }
}

TEST_CASE("lengths change by one") {
  CoxeterGroup g(CoxeterSystem::named("Atilde2"));
  for (CoxElem w : g.enumerate_elements(6)) {
    for (Gen s = 0; s < 3; ++s) CHECK(std::abs(g.right_multiply(w, s).length() - w.length()) == 1);
    CHECK(g.normal_form(w.word()) == w);
  }
}

TEST_CASE("growth of affine A2 by brute force") {
  // brute force: all words up to length 4, deduplicated by the permutation-free
  // criterion "equal normal form"; compared against the BFS enumeration
  CoxeterGroup g(CoxeterSystem::named("Atilde2"));
  std::set<Word> forms;
  std::vector<Word> frontier{{}};
  for (int len = 0; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      forms.insert(g.normal_form(w).word());
      for (Gen s = 0; s < 3; ++s) next.push_back(concat(w, {s}));
    }
    frontier = std::move(next);
  }
  CHECK(g.enumerate_elements(4).size() == forms.size());
}

TEST_CASE("exchange witness") {
  CoxeterGroup a2(CoxeterSystem::named("I2(3)"));
  auto cert = a2.exchange_witness(a2.parse("t s"), 0, 1);
  CHECK(cert.verified);
  CHECK_THROWS_AS(a2.exchange_witness(a2.parse("s"), 0, 1), CoxeterError);
  CoxeterGroup b2(CoxeterSystem::named("I2(4)"));
  // s.tst = tst.s: for odd m the exchanged letter is s itself
  CHECK(b2.exchange_witness(b2.parse("t s t"), 0, 0).verified);
  CHECK_THROWS_AS(b2.exchange_witness(b2.parse("t s t"), 0, 1), CoxeterError);
  for (const char* name : {"A3", "B3", "I2(5)"}) {
    CoxeterGroup g(CoxeterSystem::named(name));
    for (CoxElem b : g.enumerate_elements(5)) {
      for (Gen s = 0; s < g.rank(); ++s) {
        for (Gen t = 0; t < g.rank(); ++t) {
          const bool pre = !g.left_descents(b).contains(s) && !g.right_descents(b).contains(t) &&
                           g.right_multiply(g.left_multiply(s, b), t).length() < b.length() + 2;
          if (pre) CHECK(g.left_multiply(s, b) == g.right_multiply(b, t));
        }
      }
    }
  }
}

TEST_CASE("reflections") {
  CoxeterGroup a2(CoxeterSystem::named("A2"));
  CHECK(a2.reflections(0).size() == 3);
  CoxeterGroup b3(CoxeterSystem::named("B3"));
  auto refl = b3.reflections(0);
  CHECK(refl.size() == 9);
  auto model = PermutationModel::type_B(3);
  CHECK(model.reflections().size() == 9);
  for (const auto& r : refl) {
    CHECK(b3.inverse(r.element) == r.element);
    CHECK(r.u * b3.generator(r.s) * r.u.inverse() == r.element);
    CHECK(r.element.length() == 2 * r.u.length() + 1);
    for (const Word& w : b3.reduced_words(r.element)) {
      auto [u, s] = b3.palindromize(w);
      CHECK(u * b3.generator(s) * u.inverse() == r.element);
    }
  }
  for (CoxElem w : b3.enumerate_elements(-1)) {
    for (const auto& r : refl) {
      CHECK(b3.conjugate_reflection(w, b3.conjugate_reflection(w.inverse(), r)) == r);
    }
  }
  // orbit of s1 (short roots) has 3 elements, of s2 (long roots) 6
  std::set<std::uint32_t> orbit1, orbit2;
  for (CoxElem w : b3.enumerate_elements(-1)) {
    orbit1.insert(b3.conjugate(w, b3.generator(0)).id());
    orbit2.insert(b3.conjugate(w, b3.generator(1)).id());
  }
  CHECK(orbit1.size() == 3);
  CHECK(orbit2.size() == 6);
  CHECK_THROWS_AS(b3.palindromize(b3.system().parse_word("s1 s2")), CoxeterError);

  CoxeterGroup at(CoxeterSystem::named("Atilde2"));
  auto affine = at.reflections(5);
  bool found = false;
  for (const auto& r : affine) found |= r.element == at.parse("s r t r s");
  CHECK(found);
}

TEST_CASE("sphericity and longest elements") {
  CoxeterGroup b2(CoxeterSystem::named("B2"));
  CHECK(b2.longest_element(GenSet{0, 1}).length() == 4);
  CoxeterGroup at(CoxeterSystem::named("Atilde2"));
  CHECK_THROWS_AS(at.longest_element(GenSet::all(3)), CoxeterError);
  CHECK(at.longest_element(GenSet{0, 1}).length() == 3);
  CHECK(at.parabolic_order(GenSet{0, 1}) == std::optional<std::size_t>(6));
  CHECK(!at.parabolic_order(GenSet::all(3)).has_value());
  CoxeterGroup d4(CoxeterSystem::named("D4"));
  CHECK(d4.longest_element(GenSet::all(4)).length() == 12);
  CHECK(d4.parabolic_order(GenSet::all(4)) == std::optional<std::size_t>(192));
}

TEST_CASE("I-reduced elements") {
  CoxeterGroup a3(CoxeterSystem::named("A3"));
  auto reps = a3.enumerate_I_reduced(GenSet{0, 1}, -1);
  CHECK(reps.size() == 4);
  const Word top = a3.system().parse_word("s3 s2 s1");
  for (std::size_t k = 0; k < reps.size(); ++k) {
    CHECK(reps[k].word() == Word(top.begin(), top.begin() + static_cast<long>(k)));
  }
  CoxeterGroup d4(CoxeterSystem::named("D4"));
  GenSet I = GenSet::all(4);
  I.erase(3);
  CHECK(d4.enumerate_I_reduced(I, -1).size() == 8);
}
