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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "storemine/mining.hpp"
#include "storemine/paradox.hpp"
#include "storemine/scenario.hpp"

namespace storemine {

/// table: aligned text, percentages at two decimals.
/// csv: one header row, full precision.
/// jsonl: one JSON object per line, full precision.
enum class OutputFormat { Table, Delimited, Records };

/// Accepts "table", "csv"/"delimited", "jsonl"/"records".
OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format) noexcept;

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

struct MineRow {
  ScoredRule scored;
  Classification classification = Classification::Absent;
};

/// Mines, classifies and sorts: sl_entropy descending (undefined last),
/// then support descending, then antecedent and consequent labels.
std::vector<MineRow> mine_rows(const Dataset& dataset, const ThresholdPolicy& policy,
                               MiningOptions options = {});

void sort_mine_rows(const Dataset& dataset, std::vector<MineRow>& rows);

void write_mine_report(const Dataset& dataset, std::span<const MineRow> rows,
                       OutputFormat format, std::ostream& out);

/// One row per ground-truth rule with a 0/1 column per group and per
/// detector, a subtotal row after each section, a total row, then the
/// per-detector rates. Throws MissingGroundTruth when the matrix is empty.
void write_compare_report(const Dataset& dataset, const DetectionMatrix& matrix,
                          const GroupLayout& layout, OutputFormat format, std::ostream& out);

/// Support levels 1, 2, 3, 4, 5, 10, 20, 30, 40, 50 percent.
std::span<const double> table1_supports() noexcept;

void write_table1(OutputFormat format, std::ostream& out);

}  // namespace storemine
