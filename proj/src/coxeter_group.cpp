#include <algorithm>
#include <climits>
#include <deque>
#include <unordered_set>

#include "purebraid/coxeter.hpp"

namespace purebraid {

namespace {

Word from_key(const std::string& k) {
  Word w;
  w.reserve(k.size());
  for (char c : k) w.push_back(static_cast<Gen>(static_cast<unsigned char>(c)));
  return w;
}

bool key_shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool shortlex_less(const CoxElem& a, const CoxElem& b) { return shortlex_less(a.word(), b.word()); }

Word CoxElem::word() const { return group_->word(*this); }
int CoxElem::length() const { return group_->length(*this); }
bool CoxElem::is_identity() const { return id_ == 0; }
std::string CoxElem::str() const { return group_->format(*this); }
CoxElem CoxElem::operator*(CoxElem other) const { return group_->multiply(*this, other); }
CoxElem CoxElem::inverse() const { return group_->inverse(*this); }

CoxeterGroup::CoxeterGroup(CoxeterSystem system, GroupLimits limits)
    : system_(std::move(system)), limits_(limits) {
  std::lock_guard lock(mutex_);
  intern_locked(std::string{});
}

void CoxeterGroup::check_same(CoxElem a) const {
  if (!a.valid() || &a.group() != this) throw CoxeterError("element belongs to a different Coxeter group");
}

std::vector<std::string> CoxeterGroup::braid_class(const std::string& word) const {
  std::unordered_set<std::string> seen{word};
  std::vector<std::string> order{word};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::string cur = order[head];
    const int len = static_cast<int>(cur.size());
    for (int i = 0; i + 1 < len; ++i) {
      const int a = static_cast<unsigned char>(cur[i]);
      const int b = static_cast<unsigned char>(cur[i + 1]);
      if (a == b) continue;
      const int m = system_.m(a, b);
      if (m == kInfinity || i + m > len) continue;
      bool alternating = true;
      for (int k = 2; k < m && alternating; ++k) {
        alternating = static_cast<unsigned char>(cur[i + k]) == (k % 2 == 0 ? a : b);
      }
      if (!alternating) continue;
      std::string next = cur;
      for (int k = 0; k < m; ++k) next[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  return order;
}

std::uint32_t CoxeterGroup::intern_locked(const std::string& reduced_word) const {
  if (auto it = index_.find(reduced_word); it != index_.end()) return it->second;
  if (nodes_.size() >= limits_.max_elements) {
    throw CoxeterError("element cache exceeds the configured cap of " +
                       std::to_string(limits_.max_elements));
  }
  auto cls = braid_class(reduced_word);
  const int rank = system_.rank();
  Node node;
  node.key = *std::min_element(cls.begin(), cls.end(), key_shortlex_less);
  node.ends_with.assign(rank, {});
  node.starts_with.assign(rank, {});
  node.right.assign(rank, -1);
  node.left.assign(rank, -1);
  for (const auto& w : cls) {
    if (w.empty()) continue;
    const int first = static_cast<unsigned char>(w.front());
    const int last = static_cast<unsigned char>(w.back());
    node.ldes |= std::uint64_t{1} << first;
    node.rdes |= std::uint64_t{1} << last;
    if (node.starts_with[first].empty() || w < node.starts_with[first]) node.starts_with[first] = w;
    if (node.ends_with[last].empty() || w < node.ends_with[last]) node.ends_with[last] = w;
  }
  for (char c : node.key) node.support |= std::uint64_t{1} << static_cast<unsigned char>(c);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  for (auto& w : cls) index_.emplace(std::move(w), id);
  return id;
}

std::uint32_t CoxeterGroup::right_locked(std::uint32_t id, Gen s) const {
  if (auto cached = nodes_[id].right[s]; cached >= 0) return static_cast<std::uint32_t>(cached);
  std::uint32_t result;
  if ((nodes_[id].rdes >> s) & 1U) {
    std::string w = nodes_[id].ends_with[s];
    w.pop_back();
    result = intern_locked(w);
  } else {
    result = intern_locked(nodes_[id].key + static_cast<char>(s));
  }
  nodes_[id].right[s] = result;
  nodes_[result].right[s] = id;
  return result;
}

std::uint32_t CoxeterGroup::left_locked(Gen s, std::uint32_t id) const {
  if (auto cached = nodes_[id].left[s]; cached >= 0) return static_cast<std::uint32_t>(cached);
  std::uint32_t result;
  if ((nodes_[id].ldes >> s) & 1U) {
    result = intern_locked(nodes_[id].starts_with[s].substr(1));
  } else {
    result = intern_locked(static_cast<char>(s) + nodes_[id].key);
  }
  nodes_[id].left[s] = result;
  nodes_[result].left[s] = id;
  return result;
}

CoxElem CoxeterGroup::generator(Gen s) const {
  system_.check_gen(s);
  std::lock_guard lock(mutex_);
  return CoxElem(this, right_locked(0, s));
}

CoxElem CoxeterGroup::normal_form(const Word& word) const {
  for (Gen g : word) system_.check_gen(g);
  std::lock_guard lock(mutex_);
  std::uint32_t id = 0;
  for (Gen g : word) id = right_locked(id, g);
  return CoxElem(this, id);
}

CoxElem CoxeterGroup::multiply(CoxElem a, CoxElem b) const {
  check_same(a);
  check_same(b);
  std::lock_guard lock(mutex_);
  std::uint32_t id = a.id();
  const std::string key = nodes_[b.id()].key;
  for (char c : key) id = right_locked(id, static_cast<unsigned char>(c));
  return CoxElem(this, id);
}

CoxElem CoxeterGroup::inverse(CoxElem a) const {
  check_same(a);
  std::lock_guard lock(mutex_);
  std::string k = nodes_[a.id()].key;
  std::reverse(k.begin(), k.end());
  return CoxElem(this, intern_locked(k));
}

CoxElem CoxeterGroup::right_multiply(CoxElem a, Gen s) const {
  check_same(a);
  system_.check_gen(s);
  std::lock_guard lock(mutex_);
  return CoxElem(this, right_locked(a.id(), s));
}

CoxElem CoxeterGroup::left_multiply(Gen s, CoxElem a) const {
  check_same(a);
  system_.check_gen(s);
  std::lock_guard lock(mutex_);
  return CoxElem(this, left_locked(s, a.id()));
}

CoxElem CoxeterGroup::conjugate(CoxElem v, CoxElem a) const {
  return multiply(multiply(v, a), inverse(v));
}

Word CoxeterGroup::word(CoxElem a) const {
  check_same(a);
  std::lock_guard lock(mutex_);
  return from_key(nodes_[a.id()].key);
}

int CoxeterGroup::length(CoxElem a) const {
  check_same(a);
  std::lock_guard lock(mutex_);
  return static_cast<int>(nodes_[a.id()].key.size());
}

bool CoxeterGroup::is_reduced(const Word& word) const {
  return length(normal_form(word)) == static_cast<int>(word.size());
}

GenSet CoxeterGroup::right_descents(CoxElem a) const {
  check_same(a);
  std::lock_guard lock(mutex_);
  return GenSet(nodes_[a.id()].rdes);
}

GenSet CoxeterGroup::left_descents(CoxElem a) const {
  check_same(a);
  std::lock_guard lock(mutex_);
  return GenSet(nodes_[a.id()].ldes);
}

GenSet CoxeterGroup::support(CoxElem a) const {
  check_same(a);
  std::lock_guard lock(mutex_);
  return GenSet(nodes_[a.id()].support);
}

std::vector<Word> CoxeterGroup::reduced_words(CoxElem a) const {
  check_same(a);
  std::string key;
  {
    std::lock_guard lock(mutex_);
    key = nodes_[a.id()].key;
  }
  auto cls = braid_class(key);
  std::sort(cls.begin(), cls.end());
  std::vector<Word> out;
  out.reserve(cls.size());
  for (const auto& w : cls) out.push_back(from_key(w));
  return out;
}

ExchangeCertificate CoxeterGroup::exchange_witness(CoxElem b, Gen s, Gen t) const {
  check_same(b);
  system_.check_gen(s);
  system_.check_gen(t);
  if (left_descents(b).contains(s)) throw CoxeterError("exchange precondition: s b is not reduced");
  if (right_descents(b).contains(t)) throw CoxeterError("exchange precondition: b t is not reduced");
  const CoxElem sbt = right_multiply(left_multiply(s, b), t);
  if (length(sbt) == length(b) + 2) throw CoxeterError("exchange precondition: s b t is reduced");
  ExchangeCertificate cert;
  cert.lhs.push_back(s);
  for (Gen g : word(b)) cert.lhs.push_back(g);
  cert.rhs = word(b);
  cert.rhs.push_back(t);
  cert.verified = normal_form(cert.lhs) == normal_form(cert.rhs);
  if (!cert.verified) throw CoxeterError("exchange identity failed to verify");
  return cert;
}

std::pair<CoxElem, Gen> CoxeterGroup::palindromize(const Word& w) const {
  if (!is_reduced(w)) throw CoxeterError("palindromize: word is not reduced");
  const Reflection r = make_reflection(normal_form(w));
  return {r.u, r.s};
}

bool CoxeterGroup::is_reflection(CoxElem a) const {
  if (length(a) % 2 == 0) return false;
  for (const auto& w : reduced_words(a)) {
    if (std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin())) return true;
  }
  return false;
}

Reflection CoxeterGroup::make_reflection(CoxElem a) const {
  if (length(a) % 2 == 1) {
    // reduced_words is sorted, so the first palindrome is the ShortLex-least one
    for (const auto& w : reduced_words(a)) {
      if (!std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin())) continue;
      const std::size_t half = w.size() / 2;
      Reflection r;
      r.element = a;
      r.u = normal_form(Word(w.begin(), w.begin() + half));
      r.s = w[half];
      return r;
    }
  }
  throw CoxeterError("'" + format(a) + "' is not a reflection");
}

std::vector<Reflection> CoxeterGroup::reflections(int max_length) const {
  const int cap = is_finite() ? INT_MAX : max_length;
  std::vector<CoxElem> found;
  std::unordered_set<std::uint32_t> seen;
  for (Gen s = 0; s < rank(); ++s) {
    CoxElem g = generator(s);
    if (cap >= 1 && seen.insert(g.id()).second) found.push_back(g);
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    const CoxElem r = found[head];
    for (Gen s = 0; s < rank(); ++s) {
      const CoxElem c = right_multiply(left_multiply(s, r), s);
      if (length(c) <= cap && seen.insert(c.id()).second) found.push_back(c);
    }
  }
  std::sort(found.begin(), found.end(),
            [this](CoxElem a, CoxElem b) { return shortlex_less(word(a), word(b)); });
  std::vector<Reflection> out;
  out.reserve(found.size());
  for (CoxElem e : found) out.push_back(make_reflection(e));
  return out;
}

Reflection CoxeterGroup::conjugate_reflection(CoxElem w, const Reflection& r) const {
  return make_reflection(conjugate(w, r.element));
}

Sphericity CoxeterGroup::sphericity(GenSet I) const {
  for (const GenSet comp : connected_components(system_, I)) {
    if (!classify_finite_component(system_, comp)) return Sphericity::infinite;
  }
  return Sphericity::finite;
}

std::optional<std::size_t> CoxeterGroup::parabolic_order(GenSet I) const {
  std::size_t count = 1;
  std::vector<CoxElem> level{identity()};
  for (int len = 1; !level.empty(); ++len) {
    if (len > limits_.max_length + 1) return std::nullopt;
    std::unordered_set<std::uint32_t> next_ids;
    std::vector<CoxElem> next;
    for (CoxElem w : level) {
      for (Gen s : (I - right_descents(w)).members()) {
        CoxElem ws = right_multiply(w, s);
        if (next_ids.insert(ws.id()).second) next.push_back(ws);
      }
    }
    if (!next.empty() && len > limits_.max_length) return std::nullopt;
    count += next.size();
    if (count > limits_.max_elements) return std::nullopt;
    level = std::move(next);
  }
  return count;
}

CoxElem CoxeterGroup::longest_element(GenSet I) const {
  if (!is_spherical(I)) throw CoxeterError("W_" + system_.format_set(I) + " is not finite");
  CoxElem w = identity();
  for (;;) {
    const GenSet ascents = I - right_descents(w);
    if (ascents.empty()) return w;
    w = right_multiply(w, ascents.members().front());
  }
}

CoxElem CoxeterGroup::coset_rep(CoxElem w, GenSet I) const {
  for (;;) {
    const GenSet d = left_descents(w) & I;
    if (d.empty()) return w;
    w = left_multiply(d.members().front(), w);
  }
}

CoxElem CoxeterGroup::right_coset_rep(CoxElem w, GenSet J) const {
  for (;;) {
    const GenSet d = right_descents(w) & J;
    if (d.empty()) return w;
    w = right_multiply(w, d.members().front());
  }
}

namespace {

template <typename Keep>
std::vector<CoxElem> bfs_by_length(const CoxeterGroup& g, GenSet gens, int max_length, Keep keep) {
  if (max_length < 0) {
    if (!g.is_spherical(gens)) throw CoxeterError("unbounded enumeration of an infinite group");
    max_length = INT_MAX;
  }
  std::vector<CoxElem> out{g.identity()};
  std::vector<CoxElem> level{g.identity()};
  for (int len = 1; len <= max_length && !level.empty(); ++len) {
    std::unordered_set<std::uint32_t> seen;
    std::vector<CoxElem> next;
    for (CoxElem w : level) {
      for (Gen s : (gens - g.right_descents(w)).members()) {
        CoxElem ws = g.right_multiply(w, s);
        if (keep(ws) && seen.insert(ws.id()).second) next.push_back(ws);
      }
    }
    std::sort(next.begin(), next.end(),
              [&g](CoxElem a, CoxElem b) { return g.word(a) < g.word(b); });
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<CoxElem> CoxeterGroup::enumerate_elements(int max_length) const {
  return bfs_by_length(*this, GenSet::all(rank()), max_length, [](CoxElem) { return true; });
}

std::vector<CoxElem> CoxeterGroup::enumerate_I_reduced(GenSet I, int max_length) const {
  if (max_length < 0 && !is_finite()) throw CoxeterError("unbounded enumeration of an infinite group");
  return bfs_by_length(*this, GenSet::all(rank()), max_length < 0 ? INT_MAX : max_length,
                       [this, I](CoxElem w) { return is_I_reduced(w, I); });
}

std::vector<CoxElem> CoxeterGroup::enumerate_parabolic(GenSet J, int max_length) const {
  return bfs_by_length(*this, J, max_length, [](CoxElem) { return true; });
}

std::size_t CoxeterGroup::cache_size() const {
  std::lock_guard lock(mutex_);
  return nodes_.size();
}

}  // namespace purebraid
