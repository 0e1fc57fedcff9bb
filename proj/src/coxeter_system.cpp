#include "purebraid/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace purebraid {

std::vector<Gen> GenSet::members() const {
  std::vector<Gen> out;
  for (int s = 0; s < 64; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

namespace {

bool valid_label(const std::string& label) {
  if (label.empty() || label == "1") return false;
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == ';' || c == '.' ||
        c == '[' || c == ']' || c == '^' || c == '{' || c == '}') {
      return false;
    }
  }
  return true;
}

std::vector<std::string> default_labels(int rank) {
  std::vector<std::string> labels;
  for (int i = 1; i <= rank; ++i) labels.push_back("s" + std::to_string(i));
  return labels;
}

std::vector<std::vector<int>> all_commuting(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

void set_edge(std::vector<std::vector<int>>& m, int a, int b, int order) {
  m[a][b] = order;
  m[b][a] = order;
}

std::vector<std::vector<int>> path_matrix(int rank) {
  auto m = all_commuting(rank);
  for (int i = 0; i + 1 < rank; ++i) set_edge(m, i, i + 1, 3);
  return m;
}

int parse_positive(std::string_view text, std::string_view type) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    throw CoxeterError("unknown Coxeter type '" + std::string(type) + "'");
  }
  return value;
}

std::vector<std::string> split_tokens(std::string_view text, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string_view::npos || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::vector<int>> matrix, std::vector<std::string> labels,
                             std::string name)
    : rank_(static_cast<int>(matrix.size())),
      matrix_(std::move(matrix)),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (rank_ == 0) throw CoxeterError("Coxeter matrix is empty");
  if (rank_ > kMaxRank) throw CoxeterError("rank exceeds " + std::to_string(kMaxRank));
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(matrix_[i].size()) != rank_) {
      throw CoxeterError("Coxeter matrix is not square");
    }
  }
  for (int i = 0; i < rank_; ++i) {
    if (matrix_[i][i] != 1) throw CoxeterError("diagonal entry " + std::to_string(i) + " is not 1");
    for (int j = 0; j < rank_; ++j) {
      if (matrix_[i][j] != matrix_[j][i]) throw CoxeterError("Coxeter matrix is asymmetric");
      if (i != j && matrix_[i][j] != kInfinity && matrix_[i][j] < 2) {
        throw CoxeterError("off-diagonal entry below 2 at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
    }
  }
  if (labels_.empty()) labels_ = default_labels(rank_);
  if (static_cast<int>(labels_.size()) != rank_) throw CoxeterError("label count differs from rank");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) throw CoxeterError("invalid generator label '" + labels_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw CoxeterError("duplicate label '" + labels_[i] + "'");
    }
  }
}

CoxeterSystem CoxeterSystem::named(std::string_view type) {
  const std::string name(type);
  if (type.starts_with("I2(") && type.ends_with(")")) {
    auto inner = type.substr(3, type.size() - 4);
    int m = (inner == "inf" || inner == "0") ? kInfinity : parse_positive(inner, type);
    if (m == 1) throw CoxeterError("I2(m) needs m >= 2");
    std::vector<std::vector<int>> mat{{1, m}, {m, 1}};
    return CoxeterSystem(mat, {"s", "t"}, name);
  }
  if (type.starts_with("Atilde")) {
    int n = parse_positive(type.substr(6), type);
    if (n == 1) {
      return CoxeterSystem({{1, kInfinity}, {kInfinity, 1}}, {"s0", "s1"}, name);
    }
    auto m = all_commuting(n + 1);
    for (int i = 0; i <= n; ++i) set_edge(m, i, (i + 1) % (n + 1), 3);
    std::vector<std::string> labels;
    if (n == 2) {
      labels = {"r", "s", "t"};
    } else {
      for (int i = 0; i <= n; ++i) labels.push_back("s" + std::to_string(i));
    }
    return CoxeterSystem(m, labels, name);
  }
  if (type.empty()) throw CoxeterError("empty Coxeter type");
  const char family = type[0];
  const int n = parse_positive(type.substr(1), type);
  switch (family) {
    case 'A':
      return CoxeterSystem(path_matrix(n), default_labels(n), name);
    case 'B':
    case 'C': {
      auto m = path_matrix(n);
      if (n >= 2) set_edge(m, 0, 1, 4);
      return CoxeterSystem(m, default_labels(n), name);
    }
    case 'D': {
      if (n < 2) throw CoxeterError("D<n> needs n >= 2");
      // index 0 = s2, 1 = s2', k >= 2 = s(k+1)
      auto m = all_commuting(n);
      if (n >= 3) {
        set_edge(m, 0, 2, 3);
        set_edge(m, 1, 2, 3);
      }
      for (int k = 2; k + 1 < n; ++k) set_edge(m, k, k + 1, 3);
      std::vector<std::string> labels{"s2", "s2'"};
      for (int k = 3; k <= n; ++k) labels.push_back("s" + std::to_string(k));
      return CoxeterSystem(m, labels, name);
    }
    case 'E': {
      if (n < 6 || n > 8) throw CoxeterError("E<n> needs 6 <= n <= 8");
      auto m = all_commuting(n);
      set_edge(m, 0, 2, 3);
      set_edge(m, 1, 3, 3);
      for (int k = 2; k + 1 < n; ++k) set_edge(m, k, k + 1, 3);
      return CoxeterSystem(m, default_labels(n), name);
    }
    case 'F': {
      if (n != 4) throw CoxeterError("only F4 exists");
      auto m = path_matrix(4);
      set_edge(m, 1, 2, 4);
      return CoxeterSystem(m, default_labels(4), name);
    }
    case 'G': {
      if (n != 2) throw CoxeterError("only G2 exists");
      return CoxeterSystem({{1, 6}, {6, 1}}, default_labels(2), name);
    }
    case 'H': {
      if (n != 3 && n != 4) throw CoxeterError("H<n> needs n in {3,4}");
      auto m = path_matrix(n);
      set_edge(m, 0, 1, 5);
      return CoxeterSystem(m, default_labels(n), name);
    }
    default:
      throw CoxeterError("unknown Coxeter type '" + name + "'");
  }
}

CoxeterSystem CoxeterSystem::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("m")) throw CoxeterError("system JSON needs an \"m\" matrix");
  const auto& rows = doc.at("m");
  if (!rows.is_array()) throw CoxeterError("\"m\" must be an array of rows");
  std::vector<std::vector<int>> matrix;
  for (const auto& row : rows) {
    if (!row.is_array()) throw CoxeterError("\"m\" must be an array of rows");
    std::vector<int> r;
    for (const auto& entry : row) {
      if (entry.is_null()) {
        r.push_back(kInfinity);
      } else if (entry.is_string()) {
        auto s = entry.get<std::string>();
        if (s != "inf" && s != "infinity" && s != "∞") throw CoxeterError("bad matrix entry '" + s + "'");
        r.push_back(kInfinity);
      } else if (entry.is_number_integer()) {
        r.push_back(entry.get<int>());
      } else {
        throw CoxeterError("bad matrix entry " + entry.dump());
      }
    }
    matrix.push_back(std::move(r));
  }
  if (doc.contains("rank") && doc.at("rank").get<int>() != static_cast<int>(matrix.size())) {
    throw CoxeterError("\"rank\" does not match the matrix size");
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
  std::string name = doc.value("name", std::string{});
  return CoxeterSystem(std::move(matrix), std::move(labels), std::move(name));
}

nlohmann::json CoxeterSystem::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& row : matrix_) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) {
      if (v == kInfinity) {
        r.push_back("inf");
      } else {
        r.push_back(v);
      }
    }
    m.push_back(std::move(r));
  }
  nlohmann::json doc{{"rank", rank_}, {"m", std::move(m)}, {"labels", labels_}};
  if (!name_.empty()) doc["name"] = name_;
  return doc;
}

std::optional<Gen> CoxeterSystem::find_gen(std::string_view label) const {
  for (int i = 0; i < rank_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Gen CoxeterSystem::gen(std::string_view label) const {
  if (auto g = find_gen(label)) return *g;
  throw CoxeterError("unknown generator '" + std::string(label) + "'");
}

void CoxeterSystem::check_gen(Gen s) const {
  if (s < 0 || s >= rank_) throw CoxeterError("generator index " + std::to_string(s) + " out of range");
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  Word word;
  for (const auto& tok : split_tokens(text, ".")) {
    if (tok == "1") continue;
    word.push_back(gen(tok));
  }
  return word;
}

std::string CoxeterSystem::format_word(const Word& word, std::string_view sep) const {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += sep;
    out += label(word[i]);
  }
  return out;
}

GenSet CoxeterSystem::parse_set(std::string_view text) const {
  GenSet set;
  for (const auto& tok : split_tokens(text, ",{}")) {
    if (tok == "∅") continue;
    set.insert(gen(tok));
  }
  return set;
}

std::string CoxeterSystem::format_set(GenSet set) const {
  std::string out = "{";
  bool first = true;
  for (Gen s : set.members()) {
    if (!first) out += ",";
    out += label(s);
    first = false;
  }
  return out + "}";
}

std::pair<CoxeterSystem, std::vector<Gen>> CoxeterSystem::parabolic(GenSet J) const {
  std::vector<Gen> emb = J.members();
  if (emb.empty()) throw CoxeterError("parabolic subsystem on the empty set");
  std::vector<std::vector<int>> m(emb.size(), std::vector<int>(emb.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < emb.size(); ++i) {
    labels.push_back(labels_[emb[i]]);
    for (std::size_t j = 0; j < emb.size(); ++j) m[i][j] = matrix_[emb[i]][emb[j]];
  }
  return {CoxeterSystem(std::move(m), std::move(labels)), std::move(emb)};
}

std::vector<GenSet> connected_components(const CoxeterSystem& system, GenSet J) {
  std::vector<GenSet> comps;
  GenSet left = J;
  while (!left.empty()) {
    Gen start = left.members().front();
    GenSet comp{start};
    std::vector<Gen> stack{start};
    while (!stack.empty()) {
      Gen a = stack.back();
      stack.pop_back();
      for (Gen b : left.members()) {
        if (!comp.contains(b) && system.m(a, b) != 2) {
          comp.insert(b);
          stack.push_back(b);
        }
      }
    }
    comps.push_back(comp);
    left = left - comp;
  }
  return comps;
}

std::optional<std::string> classify_finite_component(const CoxeterSystem& system, GenSet J) {
  const auto v = J.members();
  const int n = static_cast<int>(v.size());
  if (n == 0) return std::string("trivial");
  if (n == 1) return std::string("A1");
  struct Edge {
    Gen a, b;
    int m;
  };
  std::vector<Edge> edges;
  std::map<Gen, std::vector<Gen>> adj;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int m = system.m(v[i], v[j]);
      if (m == 2) continue;
      if (m == kInfinity) return std::nullopt;
      edges.push_back({v[i], v[j], m});
      adj[v[i]].push_back(v[j]);
      adj[v[j]].push_back(v[i]);
    }
  }
  if (n == 2) {
    int m = edges.at(0).m;
    if (m == 3) return std::string("A2");
    if (m == 4) return std::string("B2");
    if (m == 6) return std::string("G2");
    return "I2(" + std::to_string(m) + ")";
  }
  if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;  // contains a cycle
  std::vector<Edge> heavy;
  for (const auto& e : edges) {
    if (e.m >= 4) heavy.push_back(e);
  }
  int max_degree = 0;
  std::vector<Gen> branch;
  for (Gen s : v) {
    int d = static_cast<int>(adj[s].size());
    max_degree = std::max(max_degree, d);
    if (d >= 3) branch.push_back(s);
  }
  const std::string ns = std::to_string(n);
  if (heavy.empty()) {
    if (max_degree <= 2) return "A" + ns;
    if (branch.size() != 1 || max_degree != 3) return std::nullopt;
    std::vector<int> arms;
    for (Gen first : adj[branch[0]]) {
      int len = 1;
      Gen prev = branch[0];
      Gen cur = first;
      while (adj[cur].size() == 2) {
        Gen next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + ns;
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + ns;
    return std::nullopt;
  }
  if (heavy.size() != 1 || max_degree > 2) return std::nullopt;
  const Edge& e = heavy[0];
  const bool at_end = adj[e.a].size() == 1 || adj[e.b].size() == 1;
  if (e.m == 4) {
    if (at_end) return "B" + ns;
    if (n == 4) return std::string("F4");
    return std::nullopt;
  }
  if (e.m == 5 && at_end && (n == 3 || n == 4)) return "H" + ns;
  return std::nullopt;
}

}  // namespace purebraid
