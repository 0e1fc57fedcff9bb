#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "purebraid/braid.hpp"
#include "purebraid/coxeter.hpp"
#include "purebraid/free_group.hpp"

namespace purebraid {

/// Generator of D_I: either the lift of some s in I, or a[b;s] = b s^2 b^-1
/// with b s reduced and I-reduced.
struct Symbol {
  enum class Kind { cox_lift, pure };

  Kind kind = Kind::cox_lift;
  CoxElem base;  // identity for cox_lift
  Gen gen = 0;

  static Symbol lift(const CoxeterGroup& group, Gen s) { return {Kind::cox_lift, group.identity(), s}; }
  static Symbol pure(CoxElem b, Gen s) { return {Kind::pure, b, s}; }

  bool is_pure() const { return kind == Kind::pure; }
  /// "s1" for a lift, "a[s3.s2;s1]" (identity base "a[1;s1]") for a pure generator.
  std::string name() const;
  BraidWord expand() const;

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind == b.kind && a.base == b.base && a.gen == b.gen;
  }
};

/// Lifts first (by generator index), then pure generators by (ShortLex base, gen).
bool symbol_less(const Symbol& a, const Symbol& b);

struct SymLetter {
  Symbol sym;
  int exp = 1;
};
using SymWord = std::vector<SymLetter>;

SymWord reduce(const SymWord& w);
SymWord inverse(const SymWord& w);
BraidWord expand(const SymWord& w);
std::string format(const SymWord& w);

struct RewriteResult {
  SymWord word;
  CoxElem rep;
};

/// Reidemeister-Schreier rewriting with respect to the transversal of
/// I-reduced lifts: lift(start) b = word . lift(rep).
RewriteResult schreier_rewrite(const CoxeterGroup& group, const BraidWord& b, GenSet I,
                               std::optional<CoxElem> start = std::nullopt);
/// Checks lift(start) b = word . lift(rep) under (N, p).
bool certify_rewrite(const CoxeterGroup& group, const BraidWord& b, const RewriteResult& r,
                     std::optional<CoxElem> start = std::nullopt);

struct SymRelation {
  SymWord lhs;
  SymWord rhs;
};

enum class RelationFamily { braid, family1, family2 };

struct ClosedRelation {
  SymRelation relation;
  RelationFamily family = RelationFamily::braid;
  int i = 0;
  /// Coset representative at which the raw rewriting reproduces this relation.
  CoxElem rep;
};

/// Closed-form relations attached to (b0, s, t): family (1) for i = 1..m when
/// b0 s and b0 t are I-reduced; family (2) for i = 1..m-1 when b0 s is
/// I-reduced and b0 t = s' b0; the braid relation of s', t' when neither is;
/// nothing when only b0 t is I-reduced (the swapped couple covers it).
/// Throws when m(s,t) is infinite, b0 is not I-reduced or has a right descent
/// in {s, t}.
std::vector<ClosedRelation> relation_for(const CoxeterGroup& group, CoxElem b0, Gen s, Gen t,
                                         GenSet I);

/// The relation obtained by rewriting both sides of lift(rep) w_st = lift(rep) w_ts.
SymRelation raw_relation(const CoxeterGroup& group, CoxElem rep, Gen s, Gen t, GenSet I);

struct PresentationOptions {
  /// Generating set of the ambient parabolic subgroup; empty means all of S.
  GenSet ambient;
  /// Bound on coset representatives; ignored for finite W_ambient.
  int max_length = 8;
};

struct Presentation {
  const CoxeterGroup* group = nullptr;
  GenSet I;
  GenSet ambient;
  std::vector<Symbol> generators;
  std::vector<std::pair<FreeWord, FreeWord>> relations;
  bool partial = false;
  std::vector<std::string> warnings;

  std::vector<std::string> names() const;
  std::optional<int> find(const Symbol& s) const;
  int index_of(const Symbol& s) const;
  FreeWord to_free(const SymWord& w) const;
  SymWord to_symbols(const FreeWord& w) const;

  /// "< g1, g2 | w1 = w2, ... >"; `aliases` renames generators.
  std::string to_text(const std::map<std::string, std::string>& aliases = {}) const;
  nlohmann::json to_json() const;
  /// Parses to_json output back, resolving symbols in `group`.
  static Presentation from_json(const CoxeterGroup& group, const nlohmann::json& doc);
};

/// Free reduction, cancellation of a common prefix and suffix, ShortLex
/// orientation; nullopt for a tautology.
std::optional<std::pair<FreeWord, FreeWord>> normalize_relation(const FreeWord& lhs, const FreeWord& rhs);
/// Least cyclic rotation of lhs rhs^-1 or its inverse: equal for relations
/// that are conjugate up to inversion.
FreeWord canonical_relator(const FreeWord& lhs, const FreeWord& rhs);

/// All a[b;s] with b s reduced and I-reduced (b, s in the ambient subgroup).
std::vector<Symbol> presentation_generators(const CoxeterGroup& group, GenSet I,
                                            const PresentationOptions& options = {});
/// One a[b;s] per reflection b s b^-1 with b s I-reduced (ShortLex-least b).
/// For finite W this is one per reflection outside W_I.
std::vector<Symbol> minimal_generating_set(const CoxeterGroup& group, GenSet I,
                                           const PresentationOptions& options = {});
Presentation presentation_DI(const CoxeterGroup& group, GenSet I, const PresentationOptions& options = {});
Presentation presentation_pure(const CoxeterGroup& group, const PresentationOptions& options = {});
/// Same generators, relations from rewriting every relator at every coset representative.
Presentation raw_presentation_DI(const CoxeterGroup& group, GenSet I,
                                 const PresentationOptions& options = {});

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1

  /// "Z^3", "Z^2 + Z/2", "0"
  std::string str() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};
/// Smith normal form of an integer matrix with `columns` columns.
AbelianInvariants smith_invariants(std::vector<std::vector<std::int64_t>> rows, int columns);
AbelianInvariants abelianization(const Presentation& p);

/// h: D_I -> B_{W_I}: kills pure generators and keeps lifts.
FreeWord retraction_h(const Presentation& p, const FreeWord& w);

struct SplitReport {
  std::vector<Symbol> normal_generators;
  std::size_t relations_checked = 0;
  bool relations_survive = false;
  bool section_ok = false;
};
/// Checks that every relation maps under h to a tautology or a braid relation
/// of W_I, and that h o j is the identity on the lifts of I.
SplitReport semidirect_split(const CoxeterGroup& group, GenSet I, const PresentationOptions& options = {});

struct DevissageLevel {
  GenSet lower;
  GenSet upper;
  std::size_t schreier_generators = 0;
  std::vector<Symbol> minimal_generators;
};
struct DevissageChain {
  std::vector<GenSet> chain;
  std::vector<DevissageLevel> levels;
  std::size_t total_minimal() const;
};
/// A_n, B_n: {s1} < {s1,s2} < ...; D_n: empty, empty, {s2,s2'}, {s2,s2',s3}, ...;
/// other systems: prefixes in index order.
std::vector<GenSet> standard_chain(const CoxeterSystem& system);
/// chain[0] must be empty, chain increasing (not necessarily strictly), ending at S.
DevissageChain devissage(const CoxeterGroup& group, const std::vector<GenSet>& chain);

/// w_I w_S, the greatest I-reduced element (W finite).
CoxElem max_I_reduced(const CoxeterGroup& group, GenSet I);
/// The braid-move class of w has a single word.
bool unique_writing(CoxElem w);

/// The t with b^-1 s' b in W_{s,t} (m(s,t) finite), read off the support of
/// b^-1 s' b; nullopt when that support is not of the form {t} or {s, t}.
std::optional<Gen> dihedral_conjugation_test(const CoxeterGroup& group, CoxElem b, Gen s, Gen s_prime,
                                             GenSet I);

struct ReflectionsNbarReport {
  bool finite = false;
  std::size_t generated = 0;   // distinct b s b^-1 with b s I-reduced
  std::size_t nbar_size = 0;   // |nbar(w_I w_S)|
  bool equal = false;
  // infinite systems: bounded search for the target reflection
  std::optional<CoxElem> target;
  int searched_length = 0;
  std::size_t candidates = 0;
  bool witness_found = false;
};
/// Finite W: compares {b s b^-1 : b s I-reduced} with nbar(w_I w_S).
/// Infinite W: searches all I-reduced w s' with l(w) <= max_length for
/// w s' w^-1 = target.
ReflectionsNbarReport reflections_vs_nbar_check(const CoxeterGroup& group, GenSet I,
                                                std::optional<CoxElem> target = std::nullopt,
                                                int max_length = 16);

/// The I used in the case-by-case tables: S minus the last generator for
/// A_n, B_n, D_n (n >= 3, empty for D2), {s} for I2(m).
GenSet table_I(const CoxeterSystem& system);
/// Table names (a1, b2, a2', a2bis, ...) -> generator names "a[b;s]" for the
/// named types A_n, B_n, D_n, I2(m) with table_I.  Empty for other systems.
std::map<std::string, std::string> table_aliases(const CoxeterGroup& group);
/// Inverse of table_aliases: generator name -> table name.
std::map<std::string, std::string> alias_display(const CoxeterGroup& group);

}  // namespace purebraid
