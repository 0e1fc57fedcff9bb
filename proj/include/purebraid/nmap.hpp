#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "purebraid/braid.hpp"
#include "purebraid/coxeter.hpp"

namespace purebraid {

/// Finite-support integer combination of reflections (an element of ZT).
class ZTVector {
 public:
  ZTVector() = default;
  static ZTVector single(CoxElem t, std::int64_t coeff = 1);

  std::int64_t coefficient(CoxElem t) const;
  void add(CoxElem t, std::int64_t coeff);
  bool is_zero() const { return coeffs_.empty(); }
  bool all_even() const;
  bool all_nonnegative() const;
  /// Reflections with an odd coefficient.
  std::set<CoxElem> odd_support() const;
  const std::map<CoxElem, std::int64_t>& terms() const { return coeffs_; }

  /// w . x, permuting reflections by conjugation.
  ZTVector acted(CoxElem w) const;

  ZTVector& operator+=(const ZTVector& other);
  ZTVector& operator-=(const ZTVector& other);
  friend ZTVector operator+(ZTVector a, const ZTVector& b) { return a += b; }
  friend ZTVector operator-(ZTVector a, const ZTVector& b) { return a -= b; }
  friend ZTVector operator*(std::int64_t k, const ZTVector& a);
  friend bool operator==(const ZTVector&, const ZTVector&) = default;

  /// {"<reflection word>": coefficient}, keys in ShortLex order.
  nlohmann::json to_json() const;
  static ZTVector from_json(const CoxeterGroup& group, const nlohmann::json& doc);
  /// "2*s1 - s1 s2 s1" style; "0" when zero.
  std::string str() const;

 private:
  std::map<CoxElem, std::int64_t> coeffs_;
};

/// Element (x, w) of ZT x| W with (x, v)(y, w) = (x + v.y, vw).
struct SemidirectElem {
  ZTVector vector;
  CoxElem element;

  friend SemidirectElem operator*(const SemidirectElem& a, const SemidirectElem& b);
  friend bool operator==(const SemidirectElem&, const SemidirectElem&) = default;
};

/// N(s_1^e_1 ... s_k^e_k) = sum_i e_i (s_1...s_{i-1}) s_i (s_1...s_{i-1})^-1.
ZTVector eval_N(const CoxeterGroup& group, const BraidWord& word);
/// (N(b), p(b)), a homomorphism B_W -> ZT x| W.
SemidirectElem eval_Np(const CoxeterGroup& group, const BraidWord& word);
/// Reflections with odd coefficient in N(lift(w)): the left inversion set of w.
std::set<CoxElem> nbar(CoxElem w);
/// The element w with nbar(w) = A, found by peeling simple reflections, or
/// nullopt when A is not an inversion set.
std::optional<CoxElem> is_admissible(const CoxeterGroup& group, const std::set<CoxElem>& A);
/// A braid word b with N(b) = x, or nullopt when the odd part of x is not admissible.
std::optional<BraidWord> in_image_of_N(const CoxeterGroup& group, const ZTVector& x);
/// b and b' agree modulo the derived subgroup of P_W (same image under (N, p)).
bool equal_mod_derived(const CoxeterGroup& group, const BraidWord& b, const BraidWord& b2);
/// c(v, w) = N(lift v) + v.N(lift w) - N(lift vw); lies in 2ZT.
ZTVector cocycle(CoxElem v, CoxElem w);

struct ParityWitness {
  /// coefficient of s in N(s), per generator
  std::vector<std::int64_t> coefficients;
  bool all_odd = false;
};
ParityWitness splitting_parity_witness(const CoxeterGroup& group);

struct MonotonicityReport {
  std::size_t words = 0;
  std::size_t prefixes = 0;
  bool ok = true;
  std::string failure;
};
/// For each positive word v and prefix u, N(v) - N(u) must lie in NT.
/// Throws on a negative letter.
MonotonicityReport monoid_monotonicity_check(const CoxeterGroup& group,
                                             const std::vector<BraidWord>& samples);

}  // namespace purebraid
