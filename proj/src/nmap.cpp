#include "purebraid/nmap.hpp"

#include <algorithm>
#include <sstream>

namespace purebraid {

namespace {

std::vector<std::pair<CoxElem, std::int64_t>> sorted_terms(const std::map<CoxElem, std::int64_t>& m) {
  std::vector<std::pair<CoxElem, std::int64_t>> out(m.begin(), m.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
  return out;
}

}  // namespace

ZTVector ZTVector::single(CoxElem t, std::int64_t coeff) {
  ZTVector v;
  v.add(t, coeff);
  return v;
}

std::int64_t ZTVector::coefficient(CoxElem t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? 0 : it->second;
}

void ZTVector::add(CoxElem t, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool ZTVector::all_even() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

bool ZTVector::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::set<CoxElem> ZTVector::odd_support() const {
  std::set<CoxElem> out;
  for (const auto& [t, c] : coeffs_) {
    if (c % 2 != 0) out.insert(t);
  }
  return out;
}

ZTVector ZTVector::acted(CoxElem w) const {
  ZTVector out;
  for (const auto& [t, c] : coeffs_) out.add(w.group().conjugate(w, t), c);
  return out;
}

ZTVector& ZTVector::operator+=(const ZTVector& other) {
  for (const auto& [t, c] : other.coeffs_) add(t, c);
  return *this;
}

ZTVector& ZTVector::operator-=(const ZTVector& other) {
  for (const auto& [t, c] : other.coeffs_) add(t, -c);
  return *this;
}

ZTVector operator*(std::int64_t k, const ZTVector& a) {
  ZTVector out;
  for (const auto& [t, c] : a.coeffs_) out.add(t, k * c);
  return out;
}

nlohmann::json ZTVector::to_json() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [t, c] : sorted_terms(coeffs_)) doc[t.str()] = c;
  return doc;
}

ZTVector ZTVector::from_json(const CoxeterGroup& group, const nlohmann::json& doc) {
  ZTVector v;
  for (const auto& [key, value] : doc.items()) {
    CoxElem t = group.parse(key);
    if (!group.is_reflection(t)) throw CoxeterError("'" + key + "' is not a reflection");
    v.add(t, value.get<std::int64_t>());
  }
  return v;
}

std::string ZTVector::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : sorted_terms(coeffs_)) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag;
    out << '[' << t.str() << ']';
    first = false;
  }
  return out.str();
}

SemidirectElem operator*(const SemidirectElem& a, const SemidirectElem& b) {
  return {a.vector + b.vector.acted(a.element), a.element * b.element};
}

ZTVector eval_N(const CoxeterGroup& group, const BraidWord& word) {
  ZTVector out;
  CoxElem prefix = group.identity();
  for (const auto& l : word.letters) {
    out.add(group.conjugate(prefix, group.generator(l.gen)), l.exp);
    prefix = group.right_multiply(prefix, l.gen);
  }
  return out;
}

SemidirectElem eval_Np(const CoxeterGroup& group, const BraidWord& word) {
  return {eval_N(group, word), project(group, word)};
}

std::set<CoxElem> nbar(CoxElem w) { return eval_N(w.group(), lift(w).word()).odd_support(); }

std::optional<CoxElem> is_admissible(const CoxeterGroup& group, const std::set<CoxElem>& A) {
  // Any simple reflection s in an inversion set N(w) is a left descent of w,
  // and N(w) = {s} u s N(sw) s, so a single greedy peel decides membership.
  std::set<CoxElem> current = A;
  Word peeled;
  while (!current.empty()) {
    std::optional<Gen> simple;
    for (Gen s = 0; s < group.rank() && !simple; ++s) {
      if (current.count(group.generator(s))) simple = s;
    }
    if (!simple) return std::nullopt;
    const CoxElem s = group.generator(*simple);
    std::set<CoxElem> next;
    for (CoxElem t : current) {
      if (t != s) next.insert(group.conjugate(s, t));
    }
    peeled.push_back(*simple);
    current = std::move(next);
  }
  const CoxElem w = group.normal_form(peeled);
  if (w.length() != static_cast<int>(peeled.size())) return std::nullopt;
  return w;
}

std::optional<BraidWord> in_image_of_N(const CoxeterGroup& group, const ZTVector& x) {
  auto w = is_admissible(group, x.odd_support());
  if (!w) return std::nullopt;
  const BraidWord tail = lift(*w).word();
  const ZTVector rest = x - eval_N(group, tail);
  BraidWord out;
  for (const auto& [t, c] : rest.terms()) {
    const Reflection r = group.make_reflection(t);
    const BraidWord u = lift(r.u).word();
    BraidWord piece = u;
    const int half = static_cast<int>(c / 2);
    for (int k = 0; k < (half < 0 ? -half : half) * 2; ++k) piece.letters.push_back({r.s, half < 0 ? -1 : 1});
    piece *= u.inverse();
    out *= piece;
  }
  out *= tail;
  if (!(eval_N(group, out) == x)) throw CoxeterError("in_image_of_N: witness failed to verify");
  return out;
}

bool equal_mod_derived(const CoxeterGroup& group, const BraidWord& b, const BraidWord& b2) {
  return eval_Np(group, b) == eval_Np(group, b2);
}

ZTVector cocycle(CoxElem v, CoxElem w) {
  const CoxeterGroup& g = v.group();
  return eval_N(g, lift(v).word()) + eval_N(g, lift(w).word()).acted(v) -
         eval_N(g, lift(v * w).word());
}

ParityWitness splitting_parity_witness(const CoxeterGroup& group) {
  ParityWitness out;
  out.all_odd = true;
  for (Gen s = 0; s < group.rank(); ++s) {
    const std::int64_t c = eval_N(group, BraidWord::positive({s})).coefficient(group.generator(s));
    out.coefficients.push_back(c);
    out.all_odd = out.all_odd && c % 2 != 0;
  }
  return out;
}

MonotonicityReport monoid_monotonicity_check(const CoxeterGroup& group,
                                             const std::vector<BraidWord>& samples) {
  MonotonicityReport report;
  for (const auto& v : samples) {
    if (!v.is_positive()) throw CoxeterError("monotonicity check needs positive words");
    const ZTVector total = eval_N(group, v);
    BraidWord prefix;
    for (std::size_t k = 0; k <= v.size(); ++k) {
      ++report.prefixes;
      const ZTVector diff = total - eval_N(group, prefix);
      if (!diff.all_nonnegative() && report.ok) {
        report.ok = false;
        report.failure = format_braid(group.system(), v) + " at prefix length " + std::to_string(k);
      }
      if (k < v.size()) prefix.letters.push_back(v.letters[k]);
    }
    ++report.words;
  }
  return report;
}

}  // namespace purebraid
