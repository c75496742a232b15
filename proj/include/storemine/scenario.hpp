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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "storemine/dataset.hpp"
#include "storemine/paradox.hpp"

namespace storemine {

// A planted scenario describes a multi-store dataset by its exact counts:
// per-store item marginals and per-store joint counts for a list of rule
// pairs. Fractions are converted to counts as round(fraction * txn_count).
//
// Text form, one directive per line, '#' starts a comment:
//
//   seed 42
//   filler _misc
//   store t1a 1500 group=T1
//   item A1 default=0.30 t2a=0.175
//   section Type 2 rules
//   rule A1 A2 t2a=0.05 t3a=0.05:0.062:0.062 ~t1a=0.002
//
// `rule` cells are `store=joint[:antecedent:consequent]`. A leading `~`
// marks a context cell: its counts are laid out but the store is not part
// of the rule's ground truth.

struct ScenarioStore {
  std::string label;
  Count txn_count = 0;
  std::string group;  // empty: the store is its own group
};

struct ScenarioItem {
  std::string label;
  std::optional<double> default_support;
  std::vector<std::pair<std::string, double>> per_store;
};

struct RuleCell {
  std::string store;
  double joint = 0.0;
  std::optional<double> antecedent;
  std::optional<double> consequent;
  bool planted = true;
};

struct ScenarioRule {
  std::string antecedent;
  std::string consequent;
  std::string section;
  std::vector<RuleCell> cells;
};

struct PlantedScenario {
  std::uint64_t seed = 0;
  std::string filler = "_misc";
  std::vector<ScenarioStore> stores;
  std::vector<ScenarioItem> items;
  std::vector<ScenarioRule> rules;
};

PlantedScenario parse_scenario(std::istream& in, std::string_view source = "<stream>");
PlantedScenario load_scenario(const std::filesystem::path& path);

/// `store_groups[s]` is the group of store `s`; `groups` lists the distinct
/// groups in order of first appearance by store id.
struct GroupLayout {
  std::vector<std::string> store_groups;
  std::vector<std::string> groups;

  /// Every store is its own group.
  static GroupLayout per_store(const Dataset& dataset);
  static GroupLayout from_store_groups(std::vector<std::string> store_groups);
};

struct GeneratedScenario {
  Dataset dataset;
  GroundTruth truth;
  GroupLayout layout;
};

/// Lays transactions out so every declared count holds exactly. Transactions
/// that would otherwise be empty get the filler item. The seed only moves
/// items between rows: declared marginals and rule-pair counts do not depend
/// on it, co-occurrence of other pairs does.
///
/// Throws InfeasibleScenario when the counts cannot be realized: a
/// marginal smaller than the joint counts it must cover, joint blocks
/// that do not fit in the store, or conflicting marginals for one item.
GeneratedScenario generate(const PlantedScenario& scenario);

/// Ground truth as CSV: `antecedent,consequent,store,group,section`. The
/// first rows declare every store's group with empty rule fields; then one
/// row per (rule, store).
void write_ground_truth(const GeneratedScenario& generated, std::ostream& out);
void write_ground_truth(const GeneratedScenario& generated, const std::filesystem::path& path);

struct TruthFile {
  GroundTruth truth;
  GroupLayout layout;
};

/// Reads the format written by write_ground_truth against `dataset`. Rules
/// keep first-appearance order. Stores the file does not mention form their
/// own group.
TruthFile read_ground_truth(std::istream& in, const Dataset& dataset,
                            std::string_view source = "<stream>");
TruthFile load_ground_truth(const std::filesystem::path& path, const Dataset& dataset);

/// Maps scenario truth onto a dataset loaded elsewhere (for example the CSV
/// that `generate` produced), matching items and stores by label.
GroundTruth remap_truth(const GeneratedScenario& generated, const Dataset& target);

}  // namespace storemine
