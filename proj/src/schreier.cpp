#include "purebraid/schreier.hpp"

#include <algorithm>
#include <set>

#include "purebraid/nmap.hpp"

namespace purebraid {

std::string Symbol::name() const {
  const CoxeterSystem& sys = base.group().system();
  if (kind == Kind::cox_lift) return sys.label(gen);
  return "a[" + sys.format_word(base.word(), ".") + ";" + sys.label(gen) + "]";
}

BraidWord Symbol::expand() const {
  if (kind == Kind::cox_lift) return BraidWord::positive({gen});
  const BraidWord b = purebraid::lift(base).word();
  return b * BraidWord::positive({gen, gen}) * b.inverse();
}

bool symbol_less(const Symbol& a, const Symbol& b) {
  if (a.kind != b.kind) return a.kind == Symbol::Kind::cox_lift;
  if (a.base != b.base) return shortlex_less(a.base, b.base);
  return a.gen < b.gen;
}

SymWord reduce(const SymWord& w) {
  SymWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().sym == l.sym && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

SymWord inverse(const SymWord& w) {
  SymWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->sym, -it->exp});
  return out;
}

BraidWord expand(const SymWord& w) {
  BraidWord out;
  for (const auto& l : w) {
    const BraidWord e = l.sym.expand();
    out *= l.exp > 0 ? e : e.inverse();
  }
  return out;
}

std::string format(const SymWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].sym.name();
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

namespace {

GenSet resolve_ambient(const CoxeterGroup& group, GenSet ambient) {
  return ambient.empty() ? GenSet::all(group.rank()) : ambient;
}

// lift(v) s = emitted . lift(v_new)
std::pair<SymWord, CoxElem> positive_step(const CoxeterGroup& g, GenSet I, CoxElem v, Gen s) {
  if (!g.right_descents(v).contains(s)) {
    const CoxElem vs = g.right_multiply(v, s);
    if (g.is_I_reduced(vs, I)) return {{}, vs};
    // v s = t v with t in I; both sides are reduced lifts of the same element
    const CoxElem t = vs * v.inverse();
    if (t.length() != 1 || !I.contains(t.word().front())) {
      throw CoxeterError("rewriting: v s is not I-reduced but differs from v by no element of I");
    }
    return {{{Symbol::lift(g, t.word().front()), 1}}, v};
  }
  const CoxElem prev = g.right_multiply(v, s);
  return {{{Symbol::pure(prev, s), 1}}, prev};
}

std::pair<SymWord, CoxElem> rewrite_letter(const CoxeterGroup& g, GenSet I, CoxElem v, BraidLetter l) {
  if (l.exp > 0) return positive_step(g, I, v, l.gen);
  const CoxElem u = g.coset_rep(g.right_multiply(v, l.gen), I);
  auto [emitted, landed] = positive_step(g, I, u, l.gen);
  if (landed != v) throw CoxeterError("rewriting: inverse letter does not return to the coset");
  return {inverse(emitted), u};
}

Symbol alt_symbol(const CoxeterGroup& g, CoxElem b0, Gen s, Gen t, int j) {
  return Symbol::pure(b0 * g.normal_form(alternating_letters(s, t, j)), j % 2 == 0 ? s : t);
}

std::vector<CoxElem> coset_reps(const CoxeterGroup& g, GenSet I, GenSet J, int max_length, bool& partial) {
  const bool finite = g.is_spherical(J);
  partial = !finite;
  std::vector<CoxElem> out;
  for (CoxElem w : g.enumerate_parabolic(J, finite ? -1 : max_length)) {
    if (g.is_I_reduced(w, I)) out.push_back(w);
  }
  return out;
}

void finish(Presentation& p, const std::vector<std::pair<SymWord, SymWord>>& raw) {
  std::sort(p.generators.begin(), p.generators.end(), symbol_less);
  std::set<std::pair<std::vector<FreeLetter>, std::vector<FreeLetter>>> seen;
  for (const auto& [lhs, rhs] : raw) {
    auto rel = normalize_relation(p.to_free(lhs), p.to_free(rhs));
    if (!rel) continue;
    if (seen.emplace(rel->first.letters(), rel->second.letters()).second) p.relations.push_back(*rel);
  }
  std::sort(p.relations.begin(), p.relations.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return shortlex_less(a.first, b.first);
    return shortlex_less(a.second, b.second);
  });
}

Presentation skeleton(const CoxeterGroup& group, GenSet I, const PresentationOptions& options) {
  Presentation p;
  p.group = &group;
  p.I = I;
  p.ambient = resolve_ambient(group, options.ambient);
  if (!I.subset_of(p.ambient)) throw CoxeterError("I is not contained in the ambient generating set");
  for (Gen s : I.members()) p.generators.push_back(Symbol::lift(group, s));
  for (const Symbol& s : presentation_generators(group, I, options)) p.generators.push_back(s);
  if (!group.is_spherical(p.ambient)) {
    p.partial = true;
    p.warnings.push_back("infinite group: coset representatives truncated at length " +
                         std::to_string(options.max_length));
  }
  return p;
}

}  // namespace

RewriteResult schreier_rewrite(const CoxeterGroup& group, const BraidWord& b, GenSet I,
                               std::optional<CoxElem> start) {
  CoxElem v = start.value_or(group.identity());
  if (!group.is_I_reduced(v, I)) throw CoxeterError("rewriting must start at an I-reduced representative");
  SymWord out;
  for (const auto& l : b.letters) {
    auto [emitted, next] = rewrite_letter(group, I, v, l);
    out.insert(out.end(), emitted.begin(), emitted.end());
    v = next;
  }
  return {reduce(out), v};
}

bool certify_rewrite(const CoxeterGroup& group, const BraidWord& b, const RewriteResult& r,
                     std::optional<CoxElem> start) {
  const BraidWord lhs = lift(start.value_or(group.identity())).word() * b;
  const BraidWord rhs = expand(r.word) * lift(r.rep).word();
  return eval_Np(group, lhs) == eval_Np(group, rhs);
}

std::vector<ClosedRelation> relation_for(const CoxeterGroup& group, CoxElem b0, Gen s, Gen t, GenSet I) {
  const CoxeterSystem& sys = group.system();
  if (s == t) throw CoxeterError("relation_for needs s != t");
  if (!sys.finite_m(s, t)) throw CoxeterError("relation_for: m(s,t) is infinite");
  if (!group.is_I_reduced(b0, I)) throw CoxeterError("relation_for: b0 is not I-reduced");
  const GenSet rdes = group.right_descents(b0);
  if (rdes.contains(s) || rdes.contains(t)) throw CoxeterError("relation_for: b0 has a right descent in {s,t}");

  const int m = sys.m(s, t);
  const bool s_ok = group.is_I_reduced(group.right_multiply(b0, s), I);
  const bool t_ok = group.is_I_reduced(group.right_multiply(b0, t), I);
  std::vector<ClosedRelation> out;

  auto conj_gen = [&](Gen x) {
    const CoxElem c = b0 * group.generator(x) * b0.inverse();
    if (c.length() != 1) throw CoxeterError("relation_for: b0 x b0^-1 is not simple");
    return c.word().front();
  };

  if (s_ok && t_ok) {
    for (int i = 1; i <= m; ++i) {
      ClosedRelation r;
      r.family = RelationFamily::family1;
      r.i = i;
      r.rep = b0 * group.normal_form(alternating_letters(t, s, i));
      for (int j = m - 1; j >= m - i; --j) r.relation.lhs.push_back({alt_symbol(group, b0, s, t, j), 1});
      for (int j = i - 1; j >= 0; --j) r.relation.rhs.push_back({alt_symbol(group, b0, t, s, j), 1});
      out.push_back(std::move(r));
    }
  } else if (s_ok) {
    const Symbol sp = Symbol::lift(group, conj_gen(t));
    for (int i = 1; i <= m - 1; ++i) {
      ClosedRelation r;
      r.family = RelationFamily::family2;
      r.i = i;
      r.rep = b0 * group.normal_form(alternating_letters(s, t, i));
      r.relation.lhs.push_back({sp, 1});
      for (int j = m - 2; j >= m - i - 1; --j) r.relation.lhs.push_back({alt_symbol(group, b0, s, t, j), 1});
      for (int j = i - 1; j >= 0; --j) r.relation.rhs.push_back({alt_symbol(group, b0, s, t, j), 1});
      r.relation.rhs.push_back({sp, 1});
      out.push_back(std::move(r));
    }
  } else if (!t_ok) {
    const Gen sp = conj_gen(s);
    const Gen tp = conj_gen(t);
    ClosedRelation r;
    r.family = RelationFamily::braid;
    r.rep = b0;
    for (Gen x : alternating_letters(sp, tp, m)) r.relation.lhs.push_back({Symbol::lift(group, x), 1});
    for (Gen x : alternating_letters(tp, sp, m)) r.relation.rhs.push_back({Symbol::lift(group, x), 1});
    out.push_back(std::move(r));
  }
  return out;
}

SymRelation raw_relation(const CoxeterGroup& group, CoxElem rep, Gen s, Gen t, GenSet I) {
  const CoxeterSystem& sys = group.system();
  if (!sys.finite_m(s, t)) throw CoxeterError("raw_relation: m(s,t) is infinite");
  const int m = sys.m(s, t);
  auto x = schreier_rewrite(group, BraidWord::positive(alternating_letters(s, t, m)), I, rep);
  auto y = schreier_rewrite(group, BraidWord::positive(alternating_letters(t, s, m)), I, rep);
  if (x.rep != y.rep) throw CoxeterError("raw_relation: the two sides end in different cosets");
  return {x.word, y.word};
}

std::vector<std::string> Presentation::names() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.name());
  return out;
}

std::optional<int> Presentation::find(const Symbol& s) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == s) return static_cast<int>(i);
  }
  return std::nullopt;
}

int Presentation::index_of(const Symbol& s) const {
  if (auto i = find(s)) return *i;
  throw CoxeterError("symbol " + s.name() + " is not a declared generator");
}

FreeWord Presentation::to_free(const SymWord& w) const {
  FreeWord out;
  for (const auto& l : w) out.push_back({index_of(l.sym), l.exp});
  return out;
}

SymWord Presentation::to_symbols(const FreeWord& w) const {
  SymWord out;
  for (const auto& l : w.letters()) out.push_back({generators.at(l.sym), l.exp});
  return out;
}

std::string Presentation::to_text(const std::map<std::string, std::string>& aliases) const {
  std::vector<std::string> shown = names();
  for (auto& n : shown) {
    if (auto it = aliases.find(n); it != aliases.end()) n = it->second;
  }
  std::string out = "<";
  for (std::size_t i = 0; i < shown.size(); ++i) out += (i ? ", " : " ") + shown[i];
  out += " |";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    out += (i ? ", " : " ") + relations[i].first.format(shown) + " = " + relations[i].second.format(shown);
  }
  return out + " >";
}

nlohmann::json Presentation::to_json() const {
  const CoxeterSystem& sys = group->system();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) {
    gens.push_back({{"tag", g.is_pure() ? "pure" : "lift"},
                    {"base", sys.format_word(g.base.word(), ".")},
                    {"gen", sys.label(g.gen)},
                    {"name", g.name()}});
  }
  const auto n = names();
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& [l, r] : relations) rels.push_back({l.format(n), r.format(n)});
  nlohmann::json doc{{"system", sys.name()},
                     {"I", sys.format_set(I)},
                     {"generators", gens},
                     {"relations", rels},
                     {"partial", partial}};
  if (!warnings.empty()) doc["warnings"] = warnings;
  return doc;
}

Presentation Presentation::from_json(const CoxeterGroup& group, const nlohmann::json& doc) {
  const CoxeterSystem& sys = group.system();
  Presentation p;
  p.group = &group;
  p.I = sys.parse_set(doc.value("I", std::string{}));
  p.ambient = GenSet::all(group.rank());
  p.partial = doc.value("partial", false);
  for (const auto& g : doc.at("generators")) {
    const Gen s = sys.gen(g.at("gen").get<std::string>());
    if (g.at("tag").get<std::string>() == "lift") {
      p.generators.push_back(Symbol::lift(group, s));
    } else {
      p.generators.push_back(Symbol::pure(group.parse(g.at("base").get<std::string>()), s));
    }
  }
  const auto n = p.names();
  for (const auto& r : doc.at("relations")) {
    p.relations.emplace_back(parse_free_word(r.at(0).get<std::string>(), n),
                             parse_free_word(r.at(1).get<std::string>(), n));
  }
  if (doc.contains("warnings")) p.warnings = doc.at("warnings").get<std::vector<std::string>>();
  return p;
}

std::optional<std::pair<FreeWord, FreeWord>> normalize_relation(const FreeWord& lhs, const FreeWord& rhs) {
  const auto& a = lhs.letters();
  const auto& b = rhs.letters();
  std::size_t pre = 0;
  while (pre < a.size() && pre < b.size() && a[pre] == b[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < a.size() - pre && suf < b.size() - pre && a[a.size() - 1 - suf] == b[b.size() - 1 - suf]) ++suf;
  FreeWord l(std::vector<FreeLetter>(a.begin() + static_cast<long>(pre), a.end() - static_cast<long>(suf)));
  FreeWord r(std::vector<FreeLetter>(b.begin() + static_cast<long>(pre), b.end() - static_cast<long>(suf)));
  if (l == r) return std::nullopt;
  if (shortlex_less(r, l)) std::swap(l, r);
  return std::make_pair(std::move(l), std::move(r));
}

FreeWord canonical_relator(const FreeWord& lhs, const FreeWord& rhs) {
  std::vector<FreeLetter> w = (lhs * rhs.inverse()).letters();
  // cyclic reduction
  while (w.size() >= 2 && w.front().sym == w.back().sym && w.front().exp == -w.back().exp) {
    w.erase(w.begin());
    w.pop_back();
  }
  std::vector<FreeLetter> best = w;
  auto consider = [&best](const std::vector<FreeLetter>& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::vector<FreeLetter> rot(v.begin() + static_cast<long>(k), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(k));
      if (rot < best) best = std::move(rot);
    }
  };
  consider(w);
  consider(FreeWord(w).inverse().letters());
  FreeWord out;
  for (const auto& l : best) out.push_back(l);
  return out;
}

std::vector<Symbol> presentation_generators(const CoxeterGroup& group, GenSet I,
                                            const PresentationOptions& options) {
  const GenSet J = resolve_ambient(group, options.ambient);
  bool partial = false;
  std::vector<Symbol> out;
  for (CoxElem b : coset_reps(group, I, J, options.max_length, partial)) {
    if (partial && b.length() >= options.max_length) continue;
    for (Gen s : (J - group.right_descents(b)).members()) {
      if (group.is_I_reduced(group.right_multiply(b, s), I)) out.push_back(Symbol::pure(b, s));
    }
  }
  std::sort(out.begin(), out.end(), symbol_less);
  return out;
}

std::vector<Symbol> minimal_generating_set(const CoxeterGroup& group, GenSet I,
                                           const PresentationOptions& options) {
  std::vector<Symbol> out;
  std::set<CoxElem> covered;
  for (const Symbol& a : presentation_generators(group, I, options)) {
    // generators come ShortLex-sorted, so the first hit has the shortest b; it
    // gives a reduced palindrome whenever one with b s I-reduced exists
    const CoxElem t = a.base * group.generator(a.gen) * a.base.inverse();
    if (covered.insert(t).second) out.push_back(a);
  }
  return out;
}

Presentation presentation_DI(const CoxeterGroup& group, GenSet I, const PresentationOptions& options) {
  Presentation p = skeleton(group, I, options);
  bool partial = false;
  std::vector<std::pair<SymWord, SymWord>> raw;
  for (CoxElem b0 : coset_reps(group, I, p.ambient, options.max_length, partial)) {
    const GenSet rdes = group.right_descents(b0);
    for (Gen s : p.ambient.members()) {
      for (Gen t : p.ambient.members()) {
        if (s == t || !group.system().finite_m(s, t) || rdes.contains(s) || rdes.contains(t)) continue;
        if (partial && b0.length() + group.system().m(s, t) > options.max_length) continue;
        for (auto& r : relation_for(group, b0, s, t, I)) raw.emplace_back(r.relation.lhs, r.relation.rhs);
      }
    }
  }
  finish(p, raw);
  return p;
}

Presentation presentation_pure(const CoxeterGroup& group, const PresentationOptions& options) {
  return presentation_DI(group, GenSet{}, options);
}

Presentation raw_presentation_DI(const CoxeterGroup& group, GenSet I, const PresentationOptions& options) {
  Presentation p = skeleton(group, I, options);
  bool partial = false;
  std::vector<std::pair<SymWord, SymWord>> raw;
  for (CoxElem b : coset_reps(group, I, p.ambient, options.max_length, partial)) {
    for (Gen s : p.ambient.members()) {
      for (Gen t : p.ambient.members()) {
        if (s >= t || !group.system().finite_m(s, t)) continue;
        if (partial && b.length() + group.system().m(s, t) > options.max_length) continue;
        auto r = raw_relation(group, b, s, t, I);
        raw.emplace_back(r.lhs, r.rhs);
      }
    }
  }
  finish(p, raw);
  return p;
}

std::string AbelianInvariants::str() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (auto d : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
  return out.empty() ? "0" : out;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoxeterError("Smith normal form: integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CoxeterError("Smith normal form: integer overflow");
  return r;
}

}  // namespace

AbelianInvariants smith_invariants(std::vector<std::vector<std::int64_t>> a, int columns) {
  const int rows = static_cast<int>(a.size());
  for (auto& r : a) r.resize(columns, 0);
  std::vector<std::int64_t> diag;
  for (int k = 0; k < std::min(rows, columns); ++k) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the remaining block
      int pr = -1, pc = -1;
      for (int i = k; i < rows; ++i) {
        for (int j = k; j < columns; ++j) {
          if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) goto done;
      std::swap(a[k], a[pr]);
      for (auto& r : a) std::swap(r[k], r[pc]);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        const std::int64_t q = a[i][k] / a[k][k];
        if (q != 0) {
          for (int j = k; j < columns; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[k][j]));
        }
        if (a[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < columns; ++j) {
        const std::int64_t q = a[k][j] / a[k][k];
        if (q != 0) {
          for (int i = k; i < rows; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][k]));
        }
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      int bad = -1;
      for (int i = k + 1; i < rows && bad < 0; ++i) {
        for (int j = k + 1; j < columns; ++j) {
          if (a[i][j] % a[k][k] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      for (int j = k; j < columns; ++j) a[k][j] += a[bad][j];
    }
    diag.push_back(std::llabs(a[k][k]));
  }
done:
  AbelianInvariants out;
  out.free_rank = columns - static_cast<int>(diag.size());
  for (auto d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const int n = static_cast<int>(p.generators.size());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& [l, r] : p.relations) {
    std::vector<std::int64_t> row(n, 0);
    for (const auto& x : l.letters()) row[x.sym] += x.exp;
    for (const auto& x : r.letters()) row[x.sym] -= x.exp;
    rows.push_back(std::move(row));
  }
  return smith_invariants(std::move(rows), n);
}

FreeWord retraction_h(const Presentation& p, const FreeWord& w) {
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (!p.generators.at(l.sym).is_pure()) out.push_back(l);
  }
  return out;
}

SplitReport semidirect_split(const CoxeterGroup& group, GenSet I, const PresentationOptions& options) {
  const Presentation p = presentation_DI(group, I, options);
  SplitReport report;
  report.normal_generators = presentation_generators(group, I, options);
  std::set<std::vector<FreeLetter>> braid_relators;
  for (Gen s : I.members()) {
    for (Gen t : I.members()) {
      if (s >= t || !group.system().finite_m(s, t)) continue;
      const int m = group.system().m(s, t);
      FreeWord l, r;
      for (Gen x : alternating_letters(s, t, m)) l.push_back({p.index_of(Symbol::lift(group, x)), 1});
      for (Gen x : alternating_letters(t, s, m)) r.push_back({p.index_of(Symbol::lift(group, x)), 1});
      braid_relators.insert(canonical_relator(l, r).letters());
    }
  }
  report.relations_survive = true;
  for (const auto& [l, r] : p.relations) {
    ++report.relations_checked;
    const FreeWord hl = retraction_h(p, l);
    const FreeWord hr = retraction_h(p, r);
    if (!normalize_relation(hl, hr)) continue;
    if (!braid_relators.count(canonical_relator(hl, hr).letters())) report.relations_survive = false;
  }
  report.section_ok = true;
  for (Gen s : I.members()) {
    const FreeWord j = FreeWord::generator(p.index_of(Symbol::lift(group, s)));
    report.section_ok = report.section_ok && retraction_h(p, j) == j;
  }
  return report;
}

std::size_t DevissageChain::total_minimal() const {
  std::size_t total = 0;
  for (const auto& l : levels) total += l.minimal_generators.size();
  return total;
}

std::vector<GenSet> standard_chain(const CoxeterSystem& system) {
  const int n = system.rank();
  std::vector<GenSet> chain{GenSet{}};
  const bool type_d = system.name().starts_with("D") && n >= 2 && system.label(1) == "s2'";
  for (int j = 1; j <= n; ++j) {
    if (type_d && j == 1) {
      chain.push_back(GenSet{});
      continue;
    }
    chain.push_back(GenSet::all(j));
  }
  return chain;
}

DevissageChain devissage(const CoxeterGroup& group, const std::vector<GenSet>& chain) {
  if (chain.empty() || !chain.front().empty()) throw CoxeterError("devissage chain must start at the empty set");
  if (chain.back() != GenSet::all(group.rank())) throw CoxeterError("devissage chain must end at S");
  DevissageChain out;
  out.chain = chain;
  for (std::size_t j = 1; j < chain.size(); ++j) {
    if (!chain[j - 1].subset_of(chain[j])) throw CoxeterError("devissage chain is not increasing");
    DevissageLevel level;
    level.lower = chain[j - 1];
    level.upper = chain[j];
    if (!level.upper.empty()) {
      PresentationOptions opt;
      opt.ambient = level.upper;
      level.schreier_generators = presentation_generators(group, level.lower, opt).size();
      level.minimal_generators = minimal_generating_set(group, level.lower, opt);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

CoxElem max_I_reduced(const CoxeterGroup& group, GenSet I) {
  if (!group.is_finite()) throw CoxeterError("max_I_reduced needs a finite Coxeter group");
  return group.longest_element(I) * group.longest_element(GenSet::all(group.rank()));
}

bool unique_writing(CoxElem w) { return w.group().reduced_words(w).size() == 1; }

std::optional<Gen> dihedral_conjugation_test(const CoxeterGroup& group, CoxElem b, Gen s, Gen s_prime,
                                             GenSet I) {
  if (!I.contains(s_prime)) throw CoxeterError("dihedral_conjugation_test: s' is not in I");
  const CoxElem x = b.inverse() * group.generator(s_prime) * b;
  GenSet rest = group.support(x);
  rest.erase(s);
  if (rest.size() != 1) return std::nullopt;
  const Gen t = rest.members().front();
  if (!group.system().finite_m(s, t)) return std::nullopt;
  return t;
}

ReflectionsNbarReport reflections_vs_nbar_check(const CoxeterGroup& group, GenSet I,
                                                std::optional<CoxElem> target, int max_length) {
  ReflectionsNbarReport report;
  report.finite = group.is_finite();
  if (report.finite) {
    std::set<CoxElem> generated;
    for (const Symbol& a : presentation_generators(group, I)) {
      generated.insert(a.base * group.generator(a.gen) * a.base.inverse());
    }
    const std::set<CoxElem> inv = nbar(max_I_reduced(group, I));
    report.generated = generated.size();
    report.nbar_size = inv.size();
    report.equal = generated == inv;
    return report;
  }
  if (!target) throw CoxeterError("reflections_vs_nbar_check on an infinite group needs a target reflection");
  report.target = target;
  report.searched_length = max_length;
  for (CoxElem x : group.enumerate_I_reduced(I, max_length + 1)) {
    for (Gen sp : group.right_descents(x).members()) {
      ++report.candidates;
      const CoxElem w = group.right_multiply(x, sp);
      if (w * group.generator(sp) * w.inverse() == *target) report.witness_found = true;
    }
  }
  return report;
}

namespace {

enum class TableType { none, A, B, D, I2 };

TableType table_type(const CoxeterSystem& sys) {
  const std::string& n = sys.name();
  if (n.starts_with("I2(")) return sys.finite_m(0, 1) ? TableType::I2 : TableType::none;
  if (n.size() < 2 || !std::isdigit(static_cast<unsigned char>(n[1]))) return TableType::none;
  switch (n[0]) {
    case 'A':
      return TableType::A;
    case 'B':
    case 'C':
      return sys.rank() >= 2 ? TableType::B : TableType::A;
    case 'D':
      return TableType::D;
    default:
      return TableType::none;
  }
}

}  // namespace

GenSet table_I(const CoxeterSystem& system) {
  switch (table_type(system)) {
    case TableType::I2:
      return GenSet{0};
    case TableType::D:
      if (system.rank() == 2) return GenSet{};
      [[fallthrough]];
    default: {
      GenSet I = GenSet::all(system.rank());
      I.erase(system.rank() - 1);
      return I;
    }
  }
}

std::map<std::string, std::string> table_aliases(const CoxeterGroup& group) {
  const CoxeterSystem& sys = group.system();
  std::map<std::string, std::string> out;
  auto add = [&](const std::string& alias, const Word& base, Gen s) {
    out[alias] = Symbol::pure(group.normal_form(base), s).name();
  };
  const int n = sys.rank();
  switch (table_type(sys)) {
    case TableType::none:
      break;
    case TableType::A:
    case TableType::B: {
      // index i-1 is s_i
      for (int i = 1; i <= n; ++i) {
        Word base;
        for (int k = n; k > i; --k) base.push_back(k - 1);
        add("a" + std::to_string(i), base, i - 1);
      }
      if (table_type(sys) == TableType::B) {
        for (int i = 2; i <= n; ++i) {
          Word base;
          for (int k = n; k >= 1; --k) base.push_back(k - 1);
          for (int k = 2; k < i; ++k) base.push_back(k - 1);
          add("b" + std::to_string(i), base, i - 1);
        }
      }
      break;
    }
    case TableType::I2: {
      const int m = sys.m(0, 1);
      for (int i = 1; i < m; ++i) add("a" + std::to_string(i), alternating_letters(1, 0, i - 1), i % 2 == 1 ? 1 : 0);
      break;
    }
    case TableType::D: {
      // index 0 = s2, 1 = s2', k >= 2 = s(k+1)
      auto idx = [](int k) { return k - 1; };
      if (n == 2) {
        add("a2", {}, 0);
        add("a2'", {}, 1);
        break;
      }
      Word down_to_3;  // s_n ... s_3
      for (int k = n; k >= 3; --k) down_to_3.push_back(idx(k));
      add("a2", down_to_3, 0);
      add("a2'", down_to_3, 1);
      for (int i = 3; i <= n; ++i) {
        Word base;
        for (int k = n; k > i; --k) base.push_back(idx(k));
        add("a" + std::to_string(i), base, idx(i));
      }
      for (int i = 3; i <= n; ++i) {
        Word base = down_to_3;
        base.push_back(0);
        base.push_back(1);
        for (int k = 3; k < i; ++k) base.push_back(idx(k));
        add("b" + std::to_string(i), base, idx(i));
      }
      Word with_2p = down_to_3;
      with_2p.push_back(1);
      add("a2bis", with_2p, 0);
      Word with_2 = down_to_3;
      with_2.push_back(0);
      add("a2'bis", with_2, 1);
      break;
    }
  }
  return out;
}

std::map<std::string, std::string> alias_display(const CoxeterGroup& group) {
  std::map<std::string, std::string> out;
  for (const auto& [alias, name] : table_aliases(group)) out[name] = alias;
  return out;
}

}  // namespace purebraid
