#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "purebraid/schreier.hpp"

namespace purebraid::testing {

/// A relation table transcribed by hand, in table names (a1, b2, ...).
struct RelationTable {
  std::vector<std::string> generators;
  std::map<std::string, std::string> substitute;
  std::vector<std::pair<std::string, std::string>> relations;
};

inline std::string golden_path(const std::string& file) { return std::string(PUREBRAID_GOLDEN_DIR) + "/" + file; }

inline RelationTable load_table(const std::string& file) {
  std::ifstream in(golden_path(file));
  if (!in) throw std::runtime_error("cannot open golden file " + file);
  RelationTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.starts_with("generators:")) {
      std::istringstream ss(line.substr(11));
      for (std::string g; ss >> g;) t.generators.push_back(g);
    } else if (line.starts_with("substitute:")) {
      std::istringstream ss(line.substr(11));
      std::string from, to;
      ss >> from >> to;
      t.substitute[from] = to;
    } else {
      const auto eq = line.find('=');
      t.relations.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
  }
  return t;
}

struct TableComparison {
  bool generators_match = false;
  std::set<std::string> only_computed;  // canonical relators, printed in table names
  std::set<std::string> only_table;
  bool ok() const { return generators_match && only_computed.empty() && only_table.empty(); }
};

/// Compares relation sets up to free reduction, cyclic rotation and inversion,
/// after renaming computed generators through the table aliases.
inline TableComparison compare_with_table(const Presentation& p, const RelationTable& t) {
  TableComparison out;
  const auto display = alias_display(*p.group);
  std::vector<int> to_table;
  std::set<std::string> seen;
  for (const auto& name : p.names()) {
    std::string alias = display.count(name) ? display.at(name) : name;
    seen.insert(alias);
    if (t.substitute.count(alias)) alias = t.substitute.at(alias);
    const auto it = std::find(t.generators.begin(), t.generators.end(), alias);
    to_table.push_back(it == t.generators.end() ? -1 : static_cast<int>(it - t.generators.begin()));
  }
  std::set<std::string> expected(t.generators.begin(), t.generators.end());
  for (const auto& [from, to] : t.substitute) expected.insert(from);
  out.generators_match = expected == seen && std::find(to_table.begin(), to_table.end(), -1) == to_table.end();
  if (!out.generators_match) return out;

  auto rename = [&](const FreeWord& w) {
    FreeWord r;
    for (const auto& l : w.letters()) r.push_back({to_table[l.sym], l.exp});
    return r;
  };
  std::set<std::string> computed, table;
  for (const auto& [l, r] : p.relations) {
    const FreeWord c = canonical_relator(rename(l), rename(r));
    if (!c.empty()) computed.insert(c.format(t.generators));
  }
  for (const auto& [l, r] : t.relations) {
    const FreeWord c = canonical_relator(parse_free_word(l, t.generators), parse_free_word(r, t.generators));
    if (!c.empty()) table.insert(c.format(t.generators));
  }
  std::set_difference(computed.begin(), computed.end(), table.begin(), table.end(),
                      std::inserter(out.only_computed, out.only_computed.end()));
  std::set_difference(table.begin(), table.end(), computed.begin(), computed.end(),
                      std::inserter(out.only_table, out.only_table.end()));
  return out;
}

}  // namespace purebraid::testing
