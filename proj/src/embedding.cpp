#include "purebraid/embedding.hpp"

#include <random>

#include "purebraid/nmap.hpp"

namespace purebraid {

namespace {

FreeWord random_free_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> sym(0, rank - 1);
  std::bernoulli_distribution inv(0.5);
  FreeWord w;
  for (int k = len(rng); k > 0; --k) w.push_back({sym(rng), inv(rng) ? -1 : 1});
  return w;
}

BraidWord random_braid(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord b;
  for (int k = len(rng); k > 0; --k) b.letters.push_back({gen(rng), inv(rng) ? -1 : 1});
  return b;
}

// x1 ... xi in the a-basis of F
FreeWord x_word(int i) {
  FreeWord w;
  for (int k = 0; k < i; ++k) w.push_back({k, 1});
  return w;
}

}  // namespace

EmbeddingInstance make_embedding(int n) {
  if (n < 1) throw ActionError("embedding needs n >= 1");
  EmbeddingInstance inst;
  inst.n = n;
  inst.source = action_model("B", n + 1);
  inst.target = action_model("A", n);
  return inst;
}

BraidWord phi(const EmbeddingInstance& inst, const BraidWord& b) {
  BraidWord out;
  for (const auto& l : b.letters) {
    if (l.gen < 0 || l.gen >= inst.n) throw ActionError("phi: letter outside B_" + std::to_string(inst.n));
    out.letters.push_back(l);
    if (l.gen == 0) out.letters.push_back(l);
  }
  return out;
}

FreeWord psi(const EmbeddingInstance& inst, const FreeWord& u) {
  const int rank = inst.source.rank();
  std::vector<FreeWord> images(rank);
  for (int k = 0; k < rank; ++k) {
    const std::string& name = inst.source.basis[k];
    const int i = std::stoi(name.substr(1));
    if (name[0] == 'a') {
      images[k] = i == 1 ? FreeWord::generator(0).pow(2) : FreeWord::generator(i - 1);
    } else {
      images[k] = x_word(i) * x_word(i - 1).inverse();
    }
  }
  FreeWord out;
  for (const auto& l : u.letters()) {
    if (l.sym < 0 || l.sym >= rank) throw ActionError("psi: symbol outside F'");
    out *= l.exp > 0 ? images[l.sym] : images[l.sym].inverse();
  }
  return out;
}

FreeWord to_x_basis(const EmbeddingInstance& inst, const FreeWord& w) {
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (l.sym < 0 || l.sym > inst.n) throw ActionError("to_x_basis: symbol outside F");
    // a_i = x_(i-1)^-1 x_i
    FreeWord a = FreeWord::generator(l.sym);
    if (l.sym > 0) a = FreeWord::generator(l.sym - 1, -1) * a;
    out *= l.exp > 0 ? a : a.inverse();
  }
  return out;
}

FreeWord from_x_basis(const EmbeddingInstance& inst, const FreeWord& x) {
  FreeWord out;
  for (const auto& l : x.letters()) {
    if (l.sym < 0 || l.sym > inst.n) throw ActionError("from_x_basis: symbol outside F");
    const FreeWord xi = x_word(l.sym + 1);
    out *= l.exp > 0 ? xi : xi.inverse();
  }
  return out;
}

Parity parity(const EmbeddingInstance& inst, const FreeWord& w) {
  const FreeWord x = to_x_basis(inst, w);
  int sum = 0;
  for (const auto& l : x.letters()) sum += l.exp;
  return sum % 2 == 0 ? Parity::even : Parity::odd;
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::optional<FreeWord> membership_psi_image(const EmbeddingInstance& inst, const FreeWord& w) {
  if (parity(inst, w) == Parity::odd) return std::nullopt;
  const ActionModel& src = inst.source;
  const FreeWord p = FreeWord::generator(src.symbol("a1"));
  // x_i = X_i x1 = x1 Y_i with X_i = psi-preimage b_i ... b_2, Y_i = a'2 ... a'i
  auto big_x = [&](int i) {
    FreeWord out;
    for (int k = i; k >= 2; --k) out.push_back({src.symbol("b" + std::to_string(k)), 1});
    return out;
  };
  auto big_y = [&](int i) {
    FreeWord out;
    for (int k = 2; k <= i; ++k) out.push_back({src.symbol("a" + std::to_string(k)), 1});
    return out;
  };
  const FreeWord x = to_x_basis(inst, w);
  const auto& xs = x.letters();
  FreeWord out;
  for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
    const int i = xs[k].sym + 1;
    const int j = xs[k + 1].sym + 1;
    const FreeWord left = xs[k].exp > 0 ? big_x(i) : big_y(i).inverse();
    const FreeWord right = xs[k + 1].exp > 0 ? big_y(j) : big_x(j).inverse();
    FreeWord middle;
    if (xs[k].exp > 0 && xs[k + 1].exp > 0) middle = p;
    if (xs[k].exp < 0 && xs[k + 1].exp < 0) middle = p.inverse();
    out *= left * middle * right;
  }
  return out;
}

EquivarianceReport equivariance_check(const EmbeddingInstance& inst, std::size_t samples, std::uint64_t seed,
                                      int max_braid_length) {
  EquivarianceReport report;
  const ActionModel& src = inst.source;
  const ActionModel& tgt = inst.target;
  auto check = [&](const BraidWord& g, const FreeWord& u) {
    const FreeWord lhs = psi(inst, src.act(g, u));
    const FreeWord rhs = tgt.act(phi(inst, g), psi(inst, u));
    if (lhs != rhs) {
      report.failures.push_back(format_braid(src.acting, g) + " on " + src.format(u) + ": " + tgt.format(lhs) +
                                " vs " + tgt.format(rhs));
    }
  };
  for (Gen s = 0; s < src.acting.rank(); ++s) {
    for (int e : {1, -1}) {
      for (int k = 0; k < src.rank(); ++k) {
        check(BraidWord({{s, e}}), FreeWord::generator(k));
        ++report.exhaustive_pairs;
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const BraidWord g = random_braid(rng, src.acting.rank(), max_braid_length);
    const FreeWord u = random_free_word(rng, src.rank(), 8);
    check(g, u);
    ++report.sampled_pairs;
  }
  return report;
}

MembershipReport membership_check(const EmbeddingInstance& inst, std::size_t samples, std::uint64_t seed) {
  MembershipReport report;
  const ActionModel& src = inst.source;
  const ActionModel& tgt = inst.target;
  for (int k = 0; k < src.rank(); ++k) {
    const FreeWord image = psi(inst, FreeWord::generator(k));
    if (parity(inst, image) == Parity::even) {
      ++report.generators_even;
    } else {
      report.index2_failures.push_back("psi(" + src.basis[k] + ") is odd");
    }
    const auto back = membership_psi_image(inst, image);
    if (!back || *back != FreeWord::generator(k)) {
      report.roundtrip_failures.push_back("psi(" + src.basis[k] + ") pulls back wrongly");
    }
  }
  std::mt19937_64 rng(seed);
  while (report.even_words < samples || report.odd_words < samples / 2) {
    const FreeWord w = random_free_word(rng, tgt.rank(), 12);
    const auto back = membership_psi_image(inst, w);
    if (parity(inst, w) == Parity::even) {
      if (report.even_words >= samples) continue;
      ++report.even_words;
      if (!back || psi(inst, *back) != w) report.roundtrip_failures.push_back("round trip fails on " + tgt.format(w));
    } else {
      if (report.odd_words >= samples / 2) continue;
      ++report.odd_words;
      if (back) report.index2_failures.push_back("odd word " + tgt.format(w) + " has a preimage");
    }
  }
  return report;
}

RelationImageReport phi_relation_check(const EmbeddingInstance& inst) {
  RelationImageReport report;
  const CoxeterSystem& sys = inst.source.acting;
  const CoxeterGroup target_group(inst.target.acting);
  for (Gen s = 0; s < sys.rank(); ++s) {
    for (Gen t = s + 1; t < sys.rank(); ++t) {
      const int m = sys.m(s, t);
      const BraidWord lhs = phi(inst, alternating_word(sys, s, t, m));
      const BraidWord rhs = phi(inst, alternating_word(sys, t, s, m));
      ++report.relations;
      const std::string label = format_braid(inst.target.acting, lhs) + " = " + format_braid(inst.target.acting, rhs);
      if (inst.target.automorphism(lhs) != inst.target.automorphism(rhs)) {
        report.failures.push_back(label + ": automorphisms differ");
      }
      if (!(eval_Np(target_group, lhs) == eval_Np(target_group, rhs))) {
        report.failures.push_back(label + ": eval_Np differs");
      }
    }
  }
  return report;
}

EmbeddingReport verify_embedding(int n, std::size_t samples, std::uint64_t seed) {
  const EmbeddingInstance inst = make_embedding(n);
  EmbeddingReport report;
  report.n = n;
  report.equivariance = equivariance_check(inst, samples, seed);
  report.membership = membership_check(inst, samples, seed + 1);
  report.relations = phi_relation_check(inst);
  return report;
}

}  // namespace purebraid
