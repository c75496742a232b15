// Copyright 2026 The storemine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "storemine/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "storemine/csv.hpp"
#include "storemine/error.hpp"

namespace storemine {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

class LineParser {
 public:
  LineParser(std::string source, std::size_t line) : source_(std::move(source)), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  double fraction(std::string_view text, std::string_view what) const {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) fail("bad number '" + std::string(text) + "' for " + std::string(what));
    if (!(value >= 0.0 && value <= 1.0)) {
      fail(std::string(what) + " must lie in [0, 1], got " + std::string(text));
    }
    return value;
  }

  std::uint64_t integer(std::string_view text, std::string_view what) const {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) fail("bad integer '" + std::string(text) + "' for " + std::string(what));
    return value;
  }

  std::pair<std::string_view, std::string_view> key_value(std::string_view token) const {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0) fail("expected key=value, got '" + std::string(token) + "'");
    return {token.substr(0, eq), token.substr(eq + 1)};
  }

 private:
  std::string source_;
  std::size_t line_;
};

Count to_count(double fraction, Count n) {
  return static_cast<Count>(std::llround(fraction * static_cast<double>(n)));
}

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorKind::InfeasibleScenario, what);
}

}  // namespace

GroupLayout GroupLayout::per_store(const Dataset& dataset) {
  return from_store_groups(dataset.stores().labels());
}

GroupLayout GroupLayout::from_store_groups(std::vector<std::string> store_groups) {
  GroupLayout layout{std::move(store_groups), {}};
  for (const auto& g : layout.store_groups) {
    if (std::find(layout.groups.begin(), layout.groups.end(), g) == layout.groups.end()) {
      layout.groups.push_back(g);
    }
  }
  return layout;
}

PlantedScenario parse_scenario(std::istream& in, std::string_view source) {
  const std::string src(source);
  PlantedScenario scenario;
  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const LineParser p(src, line_no);
    const std::string& directive = tokens[0];

    if (directive == "seed") {
      if (tokens.size() != 2) p.fail("usage: seed <integer>");
      scenario.seed = p.integer(tokens[1], "seed");
    } else if (directive == "filler") {
      if (tokens.size() != 2) p.fail("usage: filler <label>");
      scenario.filler = tokens[1];
    } else if (directive == "store") {
      if (tokens.size() < 3 || tokens.size() > 4) p.fail("usage: store <label> <txn_count> [group=<label>]");
      ScenarioStore store{tokens[1], p.integer(tokens[2], "txn_count"), {}};
      if (store.txn_count == 0) p.fail("store '" + store.label + "' needs at least one transaction");
      if (tokens.size() == 4) {
        auto [key, value] = p.key_value(tokens[3]);
        if (key != "group" || value.empty()) p.fail("expected group=<label>");
        store.group = std::string(value);
      }
      for (const auto& s : scenario.stores) {
        if (s.label == store.label) p.fail("store '" + store.label + "' declared twice");
      }
      scenario.stores.push_back(std::move(store));
    } else if (directive == "item") {
      if (tokens.size() < 2) p.fail("usage: item <label> [default=<f>] [<store>=<f> ...]");
      ScenarioItem item{tokens[1], std::nullopt, {}};
      for (std::size_t t = 2; t < tokens.size(); ++t) {
        auto [key, value] = p.key_value(tokens[t]);
        if (key == "default") {
          item.default_support = p.fraction(value, "default support");
        } else {
          item.per_store.emplace_back(std::string(key), p.fraction(value, "item support"));
        }
      }
      scenario.items.push_back(std::move(item));
    } else if (directive == "section") {
      const auto start = raw.find("section") + 7;
      section = std::string(raw.substr(start));
      section.erase(0, section.find_first_not_of(" \t"));
      section.erase(section.find_last_not_of(" \t") + 1);
    } else if (directive == "rule") {
      if (tokens.size() < 4) p.fail("usage: rule <antecedent> <consequent> <store>=<joint>[:<a>:<c>] ...");
      ScenarioRule rule{tokens[1], tokens[2], section, {}};
      if (rule.antecedent == rule.consequent) p.fail("rule needs two distinct items");
      for (std::size_t t = 3; t < tokens.size(); ++t) {
        std::string_view token = tokens[t];
        RuleCell cell;
        if (token.front() == '~') {
          cell.planted = false;
          token.remove_prefix(1);
        }
        auto [key, value] = p.key_value(token);
        cell.store = std::string(key);
        const auto c1 = value.find(':');
        if (c1 == std::string_view::npos) {
          cell.joint = p.fraction(value, "joint support");
        } else {
          const auto c2 = value.find(':', c1 + 1);
          if (c2 == std::string_view::npos) p.fail("cell marginals need both antecedent and consequent");
          cell.joint = p.fraction(value.substr(0, c1), "joint support");
          cell.antecedent = p.fraction(value.substr(c1 + 1, c2 - c1 - 1), "antecedent support");
          cell.consequent = p.fraction(value.substr(c2 + 1), "consequent support");
        }
        rule.cells.push_back(std::move(cell));
      }
      scenario.rules.push_back(std::move(rule));
    } else {
      p.fail("unknown directive '" + directive + "'");
    }
  }
  if (scenario.stores.empty()) throw ParseError(src, line_no, "scenario declares no stores");
  return scenario;
}

PlantedScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open scenario '" + path.string() + "'");
  return parse_scenario(in, path.string());
}

GeneratedScenario generate(const PlantedScenario& scenario) {
  if (scenario.stores.empty()) infeasible("scenario declares no stores");
  DatasetBuilder builder;
  std::map<std::string, std::uint32_t> store_index;
  for (const auto& s : scenario.stores) {
    store_index[s.label] = builder.add_store(s.label).value;
  }
  auto store_of = [&](const std::string& label) {
    auto it = store_index.find(label);
    if (it == store_index.end()) infeasible("undeclared store '" + label + "'");
    return it->second;
  };

  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    const auto id = builder.add_item(label).value;
    if (id == labels.size()) labels.push_back(label);
    return id;
  };
  std::vector<std::uint32_t> item_ids;
  for (const auto& item : scenario.items) item_ids.push_back(intern(item.label));
  struct RulePlan {
    std::uint32_t a;
    std::uint32_t b;
  };
  std::vector<RulePlan> plans;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen_pairs;
  for (const auto& rule : scenario.rules) {
    const auto a = intern(rule.antecedent);
    const auto b = intern(rule.consequent);
    if (!seen_pairs.insert(std::minmax(a, b)).second) {
      infeasible("pair (" + rule.antecedent + ", " + rule.consequent + ") is declared twice");
    }
    plans.push_back(RulePlan{a, b});
  }
  // Filler is interned lazily, only if some transaction would be empty.
  const auto item_count = static_cast<std::uint32_t>(labels.size());

  // Every rule pair is controlled in every store.
  std::vector<std::vector<std::uint32_t>> partners(item_count);
  for (const auto& plan : plans) {
    partners[plan.a].push_back(plan.b);
    partners[plan.b].push_back(plan.a);
  }

  std::optional<ItemId> filler;
  for (std::uint32_t s = 0; s < scenario.stores.size(); ++s) {
    const auto& store = scenario.stores[s];
    const Count n = store.txn_count;
    std::vector<std::optional<Count>> marginal(item_count);
    std::vector<char> from_cell(item_count, 0);

    auto set_marginal = [&](std::uint32_t item, double fraction) {
      const Count c = to_count(fraction, n);
      if (from_cell[item] && *marginal[item] != c) {
        infeasible("conflicting marginal counts for item '" +
                   labels[item] + "' in store '" + store.label + "': " +
                   std::to_string(*marginal[item]) + " vs " + std::to_string(c));
      }
      marginal[item] = c;
      from_cell[item] = 1;
    };

    for (std::size_t i = 0; i < scenario.items.size(); ++i) {
      const auto& item = scenario.items[i];
      const auto id = item_ids[i];
      std::optional<double> f = item.default_support;
      for (const auto& [label, value] : item.per_store) {
        store_of(label);
        if (label == store.label) f = value;
      }
      if (f) marginal[id] = to_count(*f, n);
    }

    std::vector<Count> joint(plans.size(), 0);
    for (std::size_t r = 0; r < plans.size(); ++r) {
      for (const auto& cell : scenario.rules[r].cells) {
        store_of(cell.store);
        if (cell.store != store.label) continue;
        joint[r] = to_count(cell.joint, n);
        if (cell.antecedent) set_marginal(plans[r].a, *cell.antecedent);
        if (cell.consequent) set_marginal(plans[r].b, *cell.consequent);
      }
    }

    std::vector<Count> used(item_count, 0);
    Count block_rows = 0;
    for (std::size_t r = 0; r < plans.size(); ++r) {
      used[plans[r].a] += joint[r];
      used[plans[r].b] += joint[r];
      block_rows += joint[r];
    }
    if (block_rows > n) {
      infeasible("joint counts in store '" + store.label + "' need " + std::to_string(block_rows) +
                 " disjoint transactions but the store has " + std::to_string(n));
    }

    // Joint blocks first: each controlled pair gets its own rows.
    std::vector<std::vector<std::uint32_t>> rows(n);
    Count cursor = 0;
    for (std::size_t r = 0; r < plans.size(); ++r) {
      for (Count k = 0; k < joint[r]; ++k, ++cursor) {
        rows[cursor] = {plans[r].a, plans[r].b};
      }
    }

    std::mt19937_64 rng(scenario.seed ^ (0x9E3779B97F4A7C15ULL * (s + 1)));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

    std::vector<char> blocked(item_count, 0);
    for (std::uint32_t item = 0; item < item_count; ++item) {
      const Count target = marginal[item].value_or(used[item]);
      if (target < used[item]) {
        infeasible("item '" + labels[item] + "' in store '" + store.label +
                   "' has marginal count " + std::to_string(target) +
                   " below its joint counts " + std::to_string(used[item]));
      }
      if (target > n) {
        infeasible("item marginal exceeds store size in '" + store.label + "'");
      }
      Count extra = target - used[item];
      if (extra == 0) continue;
      blocked[item] = 1;
      for (auto p : partners[item]) blocked[p] = 1;
      const std::size_t start = rng() % n;
      for (std::size_t k = 0; k < n && extra > 0; ++k) {
        auto& row = rows[order[(start + k) % n]];
        const bool clash = std::any_of(row.begin(), row.end(), [&](auto x) { return blocked[x] != 0; });
        if (clash) continue;
        row.push_back(item);
        --extra;
      }
      blocked[item] = 0;
      for (auto p : partners[item]) blocked[p] = 0;
      if (extra > 0) {
        infeasible("cannot place " + std::to_string(extra) + " more occurrences of item '" +
                   labels[item] + "' in store '" + store.label +
                   "' without touching a controlled pair");
      }
    }

    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].empty()) {
        if (!filler) filler = builder.add_item(scenario.filler);
        rows[r].push_back(filler->value);
      }
      std::vector<ItemId> ids;
      ids.reserve(rows[r].size());
      for (auto x : rows[r]) ids.push_back(ItemId{x});
      builder.add_transaction(StoreId{s}, ids, store.label + "-" + std::to_string(r + 1));
    }
  }

  std::vector<std::string> store_groups;
  for (const auto& store : scenario.stores) {
    store_groups.push_back(store.group.empty() ? store.label : store.group);
  }
  GeneratedScenario out{std::move(builder).build(), {},
                        GroupLayout::from_store_groups(std::move(store_groups))};
  for (std::size_t r = 0; r < plans.size(); ++r) {
    PlantedRule planted{Rule(ItemId{plans[r].a}, ItemId{plans[r].b}), {}, scenario.rules[r].section};
    for (const auto& st : scenario.stores) {
      for (const auto& cell : scenario.rules[r].cells) {
        if (cell.planted && cell.store == st.label) {
          planted.stores.push_back(StoreId{store_index.at(st.label)});
        }
      }
    }
    if (!planted.stores.empty()) out.truth.push_back(std::move(planted));
  }
  return out;
}

void write_ground_truth(const GeneratedScenario& generated, std::ostream& out) {
  const auto& ds = generated.dataset;
  out << "antecedent,consequent,store,group,section\n";
  for (std::uint32_t s = 0; s < ds.store_count(); ++s) {
    out << ",," << quote_csv_field(ds.store_label(StoreId{s})) << ','
        << quote_csv_field(generated.layout.store_groups[s]) << ",\n";
  }
  for (const auto& planted : generated.truth) {
    for (StoreId s : planted.stores) {
      out << quote_csv_field(ds.item_label(planted.rule.antecedent())) << ','
          << quote_csv_field(ds.item_label(planted.rule.consequent())) << ','
          << quote_csv_field(ds.store_label(s)) << ','
          << quote_csv_field(generated.layout.store_groups[s.value]) << ','
          << quote_csv_field(planted.section) << '\n';
    }
  }
}

void write_ground_truth(const GeneratedScenario& generated, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  write_ground_truth(generated, out);
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

TruthFile read_ground_truth(std::istream& in, const Dataset& dataset, std::string_view source) {
  const std::string src(source);
  std::string line;
  std::vector<std::string> fields;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line()) throw ParseError(src, 1, "missing header row");
  if (line != "antecedent,consequent,store,group,section") {
    throw ParseError(src, line_no, "expected header antecedent,consequent,store,group,section");
  }

  std::vector<std::string> store_groups = dataset.stores().labels();
  std::vector<std::optional<std::string>> declared(dataset.store_count());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
  GroundTruth truth;
  while (next_line()) {
    if (line.empty()) continue;
    if (!split_csv_record(line, fields)) throw ParseError(src, line_no, "unterminated quote");
    if (fields.size() != 5) {
      throw ParseError(src, line_no, "expected 5 fields, found " + std::to_string(fields.size()));
    }
    const auto store = dataset.find_store(fields[2]);
    if (!store) throw ParseError(src, line_no, "unknown store '" + fields[2] + "'");
    if (!fields[3].empty()) {
      auto& d = declared[store->value];
      if (d && *d != fields[3]) throw ParseError(src, line_no, "store '" + fields[2] + "' has two groups");
      d = fields[3];
      store_groups[store->value] = fields[3];
    }
    if (fields[0].empty() && fields[1].empty()) continue;
    const auto a = dataset.find_item(fields[0]);
    const auto b = dataset.find_item(fields[1]);
    if (!a) throw ParseError(src, line_no, "unknown item '" + fields[0] + "'");
    if (!b) throw ParseError(src, line_no, "unknown item '" + fields[1] + "'");
    if (*a == *b) throw ParseError(src, line_no, "rule needs two distinct items");
    auto [it, inserted] = index.try_emplace({a->value, b->value}, truth.size());
    if (inserted) truth.push_back(PlantedRule{Rule(*a, *b), {}, fields[4]});
    auto& stores = truth[it->second].stores;
    if (std::find(stores.begin(), stores.end(), *store) == stores.end()) stores.push_back(*store);
  }
  return TruthFile{std::move(truth), GroupLayout::from_store_groups(std::move(store_groups))};
}

TruthFile load_ground_truth(const std::filesystem::path& path, const Dataset& dataset) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
  return read_ground_truth(in, dataset, path.string());
}

GroundTruth remap_truth(const GeneratedScenario& generated, const Dataset& target) {
  const auto& src = generated.dataset;
  auto item = [&](ItemId id) {
    const auto& label = src.item_label(id);
    auto found = target.find_item(label);
    if (!found) throw Error(ErrorKind::UnknownItem, "item '" + label + "' not in dataset");
    return *found;
  };
  GroundTruth out;
  for (const auto& planted : generated.truth) {
    PlantedRule mapped{Rule(item(planted.rule.antecedent()), item(planted.rule.consequent())), {},
                       planted.section};
    for (StoreId s : planted.stores) {
      const auto& label = src.store_label(s);
      auto found = target.find_store(label);
      if (!found) throw Error(ErrorKind::UnknownStore, "store '" + label + "' not in dataset");
      mapped.stores.push_back(*found);
    }
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace storemine
