#include "purebraid/actions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "purebraid/nmap.hpp"
#include "purebraid/schreier.hpp"

namespace purebraid {

FreeAut::FreeAut(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (const auto& w : images_) {
    if (w.max_symbol() >= rank()) throw ActionError("automorphism image uses a symbol outside the basis");
  }
}

FreeAut FreeAut::identity(int rank) {
  std::vector<FreeWord> images;
  for (int i = 0; i < rank; ++i) images.push_back(FreeWord::generator(i));
  return FreeAut(std::move(images));
}

FreeWord FreeAut::apply(const FreeWord& w) const {
  FreeWord out;
  for (const auto& l : w.letters()) {
    const FreeWord& img = images_.at(l.sym);
    out *= l.exp > 0 ? img : img.inverse();
  }
  return out;
}

FreeAut aut_compose(const FreeAut& f, const FreeAut& g) {
  if (f.rank() != g.rank()) throw ActionError("composing automorphisms of different ranks");
  std::vector<FreeWord> images;
  for (const auto& w : g.images()) images.push_back(f.apply(w));
  return FreeAut(std::move(images));
}

FreeAut aut_invert(const FreeAut& f) {
  const int n = f.rank();
  // Nielsen moves on the image tuple u, tracking u_i = f(track_i)
  std::vector<FreeWord> u = f.images();
  std::vector<FreeWord> track = FreeAut::identity(n).images();
  for (;;) {
    bool moved = false;
    for (int i = 0; i < n && !moved; ++i) {
      if (u[i].empty()) throw ActionError("map is not injective: a basis symbol is sent to 1");
      for (int j = 0; j < n && !moved; ++j) {
        if (i == j) continue;
        for (int e : {1, -1}) {
          const FreeWord uj = e > 0 ? u[j] : u[j].inverse();
          const FreeWord tj = e > 0 ? track[j] : track[j].inverse();
          if (FreeWord r = u[i] * uj; r.size() < u[i].size()) {
            u[i] = r;
            track[i] = track[i] * tj;
            moved = true;
            break;
          }
          if (FreeWord l = uj * u[i]; l.size() < u[i].size()) {
            u[i] = l;
            track[i] = tj * track[i];
            moved = true;
            break;
          }
        }
      }
    }
    if (!moved) break;
  }
  std::vector<FreeWord> inverse(n);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    if (u[i].size() != 1) throw ActionError("map is not an automorphism (Nielsen reduction stalled)");
    const FreeLetter l = u[i].letters().front();
    if (hit[l.sym]) throw ActionError("map is not an automorphism (images collapse)");
    hit[l.sym] = true;
    inverse[l.sym] = l.exp > 0 ? track[i] : track[i].inverse();
  }
  FreeAut inv(std::move(inverse));
  if (aut_compose(f, inv) != FreeAut::identity(n) || aut_compose(inv, f) != FreeAut::identity(n)) {
    throw ActionError("inverse failed to verify");
  }
  return inv;
}

FreeAut aut_power(const FreeAut& f, int k) {
  const FreeAut base = k < 0 ? aut_invert(f) : f;
  FreeAut out = FreeAut::identity(f.rank());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = aut_compose(out, base);
  return out;
}

int ActionModel::symbol(const std::string& n) const {
  auto it = std::find(basis.begin(), basis.end(), n);
  if (it == basis.end()) throw ActionError("unknown basis symbol '" + n + "'");
  return static_cast<int>(it - basis.begin());
}

FreeWord ActionModel::parse(const std::string& text) const {
  try {
    return parse_free_word(text, basis);
  } catch (const std::invalid_argument& e) {
    throw ActionError(e.what());
  }
}

std::string ActionModel::format(const FreeWord& w) const { return w.format(basis); }

FreeAut ActionModel::automorphism(const BraidWord& b) const {
  FreeAut out = FreeAut::identity(rank());
  for (const auto& l : b.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(generators.size())) throw ActionError("unknown acting generator");
    out = aut_compose(out, l.exp > 0 ? generators[l.gen] : inverses[l.gen]);
  }
  return out;
}

FreeWord ActionModel::act(const BraidWord& b, const FreeWord& w) const {
  FreeWord out = w;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    if (it->gen < 0 || it->gen >= static_cast<int>(generators.size())) throw ActionError("unknown acting generator");
    out = (it->exp > 0 ? generators[it->gen] : inverses[it->gen]).apply(out);
  }
  return out;
}

namespace {

CoxeterSystem rank_one(const std::string& label) { return CoxeterSystem({{1}}, {label}, "A1"); }

// Table entries are written as "symbol -> word" in basis names.
struct TableBuilder {
  ActionModel& model;
  std::vector<std::vector<FreeWord>> images;

  explicit TableBuilder(ActionModel& m) : model(m) {
    images.assign(m.acting.rank(), FreeAut::identity(m.rank()).images());
  }
  void set(Gen s, const std::string& sym, const std::string& word) {
    images.at(s).at(model.symbol(sym)) = model.parse(word);
  }
  void finish() {
    for (auto& img : images) {
      model.generators.emplace_back(std::move(img));
      model.inverses.push_back(aut_invert(model.generators.back()));
    }
  }
};

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

void build_A(ActionModel& m, int n) {
  m.acting = CoxeterSystem::named("A" + std::to_string(n));
  for (int i = 1; i <= n + 1; ++i) m.basis.push_back(idx("a", i));
  TableBuilder t(m);
  for (int i = 1; i <= n; ++i) {
    const std::string ai = idx("a", i), an = idx("a", i + 1);
    t.set(i - 1, ai, an);
    t.set(i - 1, an, an + "^-1 " + ai + " " + an);
  }
  t.finish();
}

void build_B(ActionModel& m, int n) {
  m.acting = n == 2 ? rank_one("s1") : CoxeterSystem::named("B" + std::to_string(n - 1));
  for (int i = 1; i <= n; ++i) m.basis.push_back(idx("a", i));
  for (int i = 2; i <= n; ++i) m.basis.push_back(idx("b", i));
  TableBuilder t(m);
  t.set(0, "a1", "a2^-1 a1 a2");
  t.set(0, "a2", "a2^-1 a1^-1 b2 a1 a2");
  t.set(0, "b2", "a2");
  for (int j = 2; j <= n - 1; ++j) {
    const std::string aj = idx("a", j), an = idx("a", j + 1), bj = idx("b", j), bn = idx("b", j + 1);
    t.set(j - 1, aj, an);
    t.set(j - 1, an, an + "^-1 " + aj + " " + an);
    t.set(j - 1, bn, bj);
    t.set(j - 1, bj, bj + "^-1 " + bn + " " + bj);
  }
  t.finish();
}

void build_Bxy(ActionModel& m, int n) {
  m.acting = n == 2 ? rank_one("s1") : CoxeterSystem::named("B" + std::to_string(n - 1));
  for (int i = 1; i <= n; ++i) m.basis.push_back(idx("x", i));
  for (int i = 1; i <= n - 1; ++i) m.basis.push_back(idx("y", i));
  // y_n is the empty product
  auto y = [n](int i) { return i == n ? std::string{} : idx("y", i); };
  auto yinv = [n](int i) { return i == n ? std::string{} : idx("y", i) + "^-1"; };
  TableBuilder t(m);
  t.set(0, "x1", y(2) + " " + yinv(1) + " x2");
  t.set(0, "y1", y(2) + " x1^-1 x2");
  for (int i = 2; i <= n - 1; ++i) {
    t.set(i - 1, idx("x", i), idx("x", i - 1) + " " + idx("x", i) + "^-1 " + idx("x", i + 1));
    t.set(i - 1, idx("y", i), y(i + 1) + " " + yinv(i) + " " + idx("y", i - 1));
  }
  t.finish();
}

void build_I2(ActionModel& m, int mm) {
  m.acting = rank_one("s");
  for (int i = 1; i < mm; ++i) m.basis.push_back(idx("a", i));
  TableBuilder t(m);
  // s a(m-i) s^-1 = (a(i-1)...a1)^-1 a(i)...a1
  for (int i = 1; i < mm; ++i) {
    std::string w;
    for (int k = 1; k < i; ++k) w += idx("a", k) + "^-1 ";
    for (int k = i; k >= 1; --k) w += idx("a", k) + " ";
    t.set(0, idx("a", mm - i), w);
  }
  t.finish();
}

void build_D(ActionModel& m, int n) {
  m.acting = CoxeterSystem::named("D" + std::to_string(n - 1));
  m.free = false;
  m.basis = {"a2", "a2'"};
  for (int i = 3; i <= n; ++i) m.basis.push_back(idx("a", i));
  for (int i = 3; i <= n; ++i) m.basis.push_back(idx("b", i));
  TableBuilder t(m);
  // acting generators: 0 = s2, 1 = s2', k >= 2 = s(k+1)
  t.set(0, "a2", "a3");
  t.set(0, "a3", "a3^-1 a2 a3");
  t.set(0, "b3", "a2'");
  t.set(0, "a2'", "a2'^-1 b3 a2'");
  t.set(1, "a2'", "a3");
  t.set(1, "a3", "a3^-1 a2' a3");
  t.set(1, "b3", "a2");
  t.set(1, "a2", "a2^-1 b3 a2");
  for (int j = 3; j <= n - 1; ++j) {
    const std::string aj = idx("a", j), an = idx("a", j + 1), bj = idx("b", j), bn = idx("b", j + 1);
    t.set(j - 1, aj, an);
    t.set(j - 1, an, an + "^-1 " + aj + " " + an);
    t.set(j - 1, bn, bj);
    t.set(j - 1, bj, bj + "^-1 " + bn + " " + bj);
  }
  t.finish();
}

void build_L46(ActionModel& m) {
  m.acting = CoxeterSystem({{1, 3}, {3, 1}}, {"s", "t"}, "I2(3)");
  m.basis = {"w", "x", "y", "z"};
  TableBuilder t(m);
  t.set(0, "y", "x y^-1 z");
  t.set(1, "x", "w x^-1 y");
  t.finish();
}

}  // namespace

ActionModel action_model(const std::string& type, int n) {
  ActionModel m;
  m.name = type == "L46" ? type : type + std::to_string(n);
  if (type == "A") {
    if (n < 1) throw ActionError("type A model needs n >= 1");
    build_A(m, n);
  } else if (type == "B" || type == "Bxy") {
    if (n < 2) throw ActionError("type B model needs n >= 2");
    type == "B" ? build_B(m, n) : build_Bxy(m, n);
  } else if (type == "I2") {
    if (n < 2) throw ActionError("type I2 model needs m >= 2");
    build_I2(m, n);
  } else if (type == "D") {
    if (n < 3) throw ActionError("type D model needs n >= 3");
    build_D(m, n);
  } else if (type == "L46") {
    build_L46(m);
  } else {
    throw ActionError("unsupported action model type '" + type + "'");
  }
  return m;
}

FreeWord xy_to_ab(const ActionModel& xy, const ActionModel& ab, const FreeWord& w) {
  const int n = (ab.rank() + 1) / 2;
  auto word_of = [&](const std::string& sym) {
    const int i = std::stoi(sym.substr(1));
    std::string text;
    if (sym[0] == 'x') {
      for (int k = n; k >= 2; --k) text += idx("b", k) + " ";
      for (int k = 1; k <= i; ++k) text += idx("a", k) + " ";
    } else {
      for (int k = n; k > i; --k) text += idx("b", k) + " ";
    }
    return ab.parse(text);
  };
  FreeWord out;
  for (const auto& l : w.letters()) {
    const FreeWord img = word_of(xy.basis.at(l.sym));
    out *= l.exp > 0 ? img : img.inverse();
  }
  return out;
}

BraidRelationReport verify_braid_relations(const ActionModel& model, const WordEquality& equal) {
  BraidRelationReport report;
  const CoxeterSystem& sys = model.acting;
  for (Gen s = 0; s < sys.rank(); ++s) {
    for (Gen t = s + 1; t < sys.rank(); ++t) {
      if (!sys.finite_m(s, t)) continue;
      ++report.pairs_checked;
      const int m = sys.m(s, t);
      const FreeAut lhs = model.automorphism(BraidWord::positive(alternating_letters(s, t, m)));
      const FreeAut rhs = model.automorphism(BraidWord::positive(alternating_letters(t, s, m)));
      for (int k = 0; k < model.rank(); ++k) {
        ++report.symbols_checked;
        const bool same = equal ? equal(lhs.image(k), rhs.image(k)) : lhs.image(k) == rhs.image(k);
        if (!same) {
          report.failures.push_back(sys.label(s) + "," + sys.label(t) + " on " + model.basis[k] + ": " +
                                    model.format(lhs.image(k)) + " vs " + model.format(rhs.image(k)));
        }
      }
    }
  }
  return report;
}

SignedPermutation abelianized_action(const ActionModel& model, Gen s) {
  model.acting.check_gen(s);
  SignedPermutation out;
  for (int k = 0; k < model.rank(); ++k) {
    const FreeWord& img = model.generators[s].image(k);
    int target = -1, sign = 0;
    for (int j = 0; j < model.rank(); ++j) {
      const int e = img.exponent_sum(j);
      if (e == 0) continue;
      if (target >= 0 || (e != 1 && e != -1)) {
        throw ActionError("abelianized image of " + model.basis[k] + " is not a signed basis class");
      }
      target = j;
      sign = e;
    }
    if (target < 0) throw ActionError("abelianized image of " + model.basis[k] + " is trivial");
    out.target.push_back(target);
    out.sign.push_back(sign);
  }
  return out;
}

NontrivialityReport nontriviality_sample(const ActionModel& model, std::size_t samples, std::uint64_t seed,
                                         int max_length) {
  NontrivialityReport report;
  CoxeterGroup group(model.acting);
  std::mt19937_64 rng(seed);
  const int r = model.acting.rank();
  std::uniform_int_distribution<int> gen(0, r - 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < samples; ++k) {
    BraidWord b;
    // conjugates u s^(+-2) u^-1 while they fit
    for (;;) {
      std::uniform_int_distribution<int> ulen(0, std::max(0, (max_length - 2 - static_cast<int>(b.size())) / 2));
      const int len = ulen(rng);
      if (static_cast<int>(b.size()) + 2 * len + 2 > max_length) break;
      BraidWord u;
      for (int i = 0; i < len; ++i) u.letters.push_back({gen(rng), coin(rng) ? 1 : -1});
      const int e = coin(rng) ? 1 : -1;
      const Gen s = gen(rng);
      b *= u * BraidWord({{s, e}, {s, e}}) * u.inverse();
      if (coin(rng)) break;
    }
    ++report.sampled;
    if (eval_N(group, b).is_zero()) continue;
    ++report.nonzero_N;
    if (model.automorphism(b) != FreeAut::identity(model.rank())) {
      ++report.moved;
    } else {
      report.fixed_words.push_back(format_braid(model.acting, b));
    }
  }
  return report;
}

ConjTowerReport conj_tower_check(const std::string& type, int n) {
  if (type != "A" && type != "B") throw ActionError("conj_tower_check supports types A and B");
  if (n < 2) throw ActionError("conj_tower_check needs n >= 2");
  CoxeterGroup g(CoxeterSystem::named(type + std::to_string(n)));
  const std::vector<GenSet> chain = standard_chain(g.system());
  ConjTowerReport report;
  for (int i = 2; i <= n; ++i) {
    ++report.levels;
    const Gen si = i - 1;
    for (Gen j : chain[i - 2].members()) {
      if (g.system().m(si, j) != 2) report.failures.push_back(g.system().label(si) + " does not commute with I_(i-2)");
    }
    PresentationOptions lower;
    lower.ambient = chain[i - 1];
    PresentationOptions upper;
    upper.ambient = chain[i];
    const auto upper_gens = presentation_generators(g, chain[i - 1], upper);
    std::set<std::string> images;
    for (const Symbol& a : presentation_generators(g, chain[i - 2], lower)) {
      ++report.generators_checked;
      const BraidWord c = BraidWord({{si, 1}}) * a.expand() * BraidWord({{si, -1}});
      const RewriteResult r = schreier_rewrite(g, c, chain[i - 1]);
      const std::string line = a.name() + " -> " + format(r.word);
      report.images.push_back(line);
      images.insert(format(r.word));
      if (!r.rep.is_identity()) report.failures.push_back(line + " (ends outside the identity coset)");
      for (const auto& l : r.word) {
        if (std::find(upper_gens.begin(), upper_gens.end(), l.sym) == upper_gens.end()) {
          report.failures.push_back(line + " (letter " + l.sym.name() + " is not a generator of U_i)");
          break;
        }
      }
    }
    if (images.size() != presentation_generators(g, chain[i - 2], lower).size()) {
      report.failures.push_back("level " + std::to_string(i) + ": two generators share an image");
    }
  }
  return report;
}

}  // namespace purebraid
