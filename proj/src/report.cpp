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

#include "storemine/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "storemine/csv.hpp"
#include "storemine/error.hpp"

namespace storemine {
namespace {

using nlohmann::ordered_json;

std::string percent(double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f%%", fraction * 100.0);
  return buf;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string opt_percent(const std::optional<double>& v) { return v ? percent(*v) : "-"; }
std::string opt_fixed(const std::optional<double>& v, int digits) {
  return v ? fixed(*v, digits) : "-";
}
std::string opt_full(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

ordered_json opt_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// Aligned text table. By default only column 0 is left-aligned.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header, std::vector<bool> left = {})
      : left_(std::move(left)) {
    if (left_.empty()) left_.push_back(true);
    left_.resize(header.size(), false);
    rows_.push_back(std::move(header));
  }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void rule() { rows_.emplace_back(); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(left_.size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::size_t total = 0;
    for (auto w : width) total += w;
    total += width.empty() ? 0 : 2 * (width.size() - 1);
    bool first = true;
    for (const auto& row : rows_) {
      if (row.empty()) {
        out << std::string(total, '-') << '\n';
        continue;
      }
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) line += "  ";
        const std::string pad(width[c] - row[c].size(), ' ');
        line += left_[c] ? row[c] + pad : pad + row[c];
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
      if (first) {
        out << std::string(total, '-') << '\n';
        first = false;
      }
    }
  }

 private:
  std::vector<bool> left_;
  std::vector<std::vector<std::string>> rows_;
};

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << quote_csv_field(fields[i]);
  }
  out << '\n';
}

std::string flag(bool b) { return b ? "1" : "0"; }

constexpr std::array<double, 10> kTable1 = {0.01, 0.02, 0.03, 0.04, 0.05,
                                            0.10, 0.20, 0.30, 0.40, 0.50};

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv" || name == "delimited") return OutputFormat::Delimited;
  if (name == "jsonl" || name == "records") return OutputFormat::Records;
  throw Error(ErrorKind::InvalidArgument,
              "unknown format '" + std::string(name) + "' (expected table, csv or jsonl)");
}

std::string_view to_string(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Delimited: return "csv";
    case OutputFormat::Records: return "jsonl";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void sort_mine_rows(const Dataset& dataset, std::vector<MineRow>& rows) {
  auto key = [&](const MineRow& r) {
    const auto& sl = r.scored.aggregate.sl_entropy;
    return std::tuple(sl.has_value(), sl.value_or(0.0), r.scored.aggregate.support);
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const MineRow& a, const MineRow& b) {
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) return ka > kb;
    const auto& la = dataset.item_label(a.scored.rule.antecedent());
    const auto& lb = dataset.item_label(b.scored.rule.antecedent());
    if (la != lb) return la < lb;
    return dataset.item_label(a.scored.rule.consequent()) <
           dataset.item_label(b.scored.rule.consequent());
  });
}

std::vector<MineRow> mine_rows(const Dataset& dataset, const ThresholdPolicy& policy,
                               MiningOptions options) {
  auto scored = mine_frequent_pairs(dataset, policy, options);
  std::vector<MineRow> rows;
  rows.reserve(scored.size());
  for (auto& s : scored) {
    std::vector<MeasureVector> stores;
    stores.reserve(s.counts.per_store->size());
    for (const auto& c : *s.counts.per_store) stores.push_back(measure_vector(c, s.stores_total));
    const auto cls =
        classify(s.rule, s.aggregate, s.stores_present, std::move(stores), policy).classification;
    rows.push_back(MineRow{std::move(s), cls});
  }
  sort_mine_rows(dataset, rows);
  return rows;
}

void write_mine_report(const Dataset& dataset, std::span<const MineRow> rows,
                       OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Table: {
      TextTable table({"rule", "support", "confidence", "interest", "cosine", "jaccard", "entropy",
                       "sl_entropy", "X/Y", "S", "I", "C", "J", "E", "SL", "classification"});
      for (const auto& row : rows) {
        const auto& s = row.scored;
        const auto& v = s.aggregate;
        const auto& d = s.verdicts;
        table.add({dataset.item_label(s.rule.antecedent()) + " => " +
                       dataset.item_label(s.rule.consequent()),
                   percent(v.support), opt_percent(v.confidence), opt_fixed(v.interest, 4),
                   opt_percent(v.cosine), opt_percent(v.jaccard), percent(v.entropy),
                   opt_fixed(v.sl_entropy, 4),
                   std::to_string(s.stores_present) + "/" + std::to_string(s.stores_total),
                   flag(d.support), flag(d.interest), flag(d.cosine), flag(d.jaccard),
                   flag(d.entropy), flag(d.sl_entropy), std::string(to_string(row.classification))});
      }
      table.print(out);
      out << rows.size() << (rows.size() == 1 ? " rule\n" : " rules\n");
      break;
    }
    case OutputFormat::Delimited: {
      write_csv_row(out, {"antecedent", "consequent", "support", "confidence",
                          "reverse_confidence", "interest", "cosine", "jaccard", "entropy",
                          "sl_entropy", "stores_present", "stores_total", "verdicts.support",
                          "verdicts.interest", "verdicts.cosine", "verdicts.jaccard",
                          "verdicts.entropy", "verdicts.sl_entropy", "classification"});
      for (const auto& row : rows) {
        const auto& s = row.scored;
        const auto& v = s.aggregate;
        const auto& d = s.verdicts;
        write_csv_row(out, {dataset.item_label(s.rule.antecedent()),
                            dataset.item_label(s.rule.consequent()), format_double(v.support),
                            opt_full(v.confidence), opt_full(s.reverse_confidence),
                            opt_full(v.interest), opt_full(v.cosine), opt_full(v.jaccard),
                            format_double(v.entropy), opt_full(v.sl_entropy),
                            std::to_string(s.stores_present), std::to_string(s.stores_total),
                            flag(d.support), flag(d.interest), flag(d.cosine), flag(d.jaccard),
                            flag(d.entropy), flag(d.sl_entropy),
                            std::string(to_string(row.classification))});
      }
      break;
    }
    case OutputFormat::Records: {
      for (const auto& row : rows) {
        const auto& s = row.scored;
        const auto& v = s.aggregate;
        const auto& d = s.verdicts;
        ordered_json rec;
        rec["antecedent"] = dataset.item_label(s.rule.antecedent());
        rec["consequent"] = dataset.item_label(s.rule.consequent());
        rec["support"] = v.support;
        rec["confidence"] = opt_json(v.confidence);
        rec["reverse_confidence"] = opt_json(s.reverse_confidence);
        rec["interest"] = opt_json(v.interest);
        rec["cosine"] = opt_json(v.cosine);
        rec["jaccard"] = opt_json(v.jaccard);
        rec["entropy"] = v.entropy;
        rec["sl_entropy"] = opt_json(v.sl_entropy);
        rec["stores_present"] = s.stores_present;
        rec["stores_total"] = s.stores_total;
        rec["verdicts"] = {{"support", d.support},   {"interest", d.interest},
                           {"cosine", d.cosine},     {"jaccard", d.jaccard},
                           {"entropy", d.entropy},   {"sl_entropy", d.sl_entropy}};
        rec["classification"] = to_string(row.classification);
        out << rec.dump() << '\n';
      }
      break;
    }
  }
}

void write_compare_report(const Dataset& dataset, const DetectionMatrix& matrix,
                          const GroupLayout& layout, OutputFormat format, std::ostream& out) {
  if (matrix.rows.empty()) {
    throw Error(ErrorKind::MissingGroundTruth, "no ground-truth rules to compare against");
  }
  const std::size_t ngroups = layout.groups.size();
  auto group_index = [&](StoreId s) -> std::size_t {
    const auto& g = layout.store_groups.at(s.value);
    return std::find(layout.groups.begin(), layout.groups.end(), g) - layout.groups.begin();
  };

  struct Tally {
    std::string kind;
    std::string section;
    std::string antecedent;
    std::string consequent;
    std::size_t rules = 0;
    std::vector<std::size_t> groups;
    std::array<std::size_t, kDetectors.size()> detectors{};
  };
  auto empty_tally = [&](std::string kind, std::string section) {
    return Tally{std::move(kind), std::move(section), {}, {}, 0,
                 std::vector<std::size_t>(ngroups, 0), {}};
  };
  auto absorb = [](Tally& into, const Tally& row) {
    into.rules += row.rules;
    for (std::size_t g = 0; g < into.groups.size(); ++g) into.groups[g] += row.groups[g];
    for (std::size_t d = 0; d < into.detectors.size(); ++d) into.detectors[d] += row.detectors[d];
  };

  std::vector<Tally> lines;
  Tally total = empty_tally("total", "");
  std::optional<Tally> subtotal;
  auto close_section = [&] {
    if (subtotal && !subtotal->section.empty()) lines.push_back(*subtotal);
    subtotal.reset();
  };
  for (const auto& row : matrix.rows) {
    if (!subtotal || subtotal->section != row.truth.section) {
      close_section();
      subtotal = empty_tally("subtotal", row.truth.section);
    }
    Tally t = empty_tally("rule", row.truth.section);
    t.antecedent = dataset.item_label(row.truth.rule.antecedent());
    t.consequent = dataset.item_label(row.truth.rule.consequent());
    t.rules = 1;
    for (StoreId s : row.truth.stores) t.groups[group_index(s)] = 1;
    for (std::size_t d = 0; d < kDetectors.size(); ++d) t.detectors[d] = row.detected[d] ? 1 : 0;
    absorb(*subtotal, t);
    absorb(total, t);
    lines.push_back(std::move(t));
  }
  close_section();
  lines.push_back(total);

  const std::size_t n = matrix.total();
  switch (format) {
    case OutputFormat::Table: {
      std::vector<std::string> header{"rule"};
      for (const auto& g : layout.groups) header.push_back(g);
      for (auto d : kDetectors) header.emplace_back(to_string(d));
      TextTable table(header);
      bool ruled = false;
      for (const auto& t : lines) {
        std::vector<std::string> cells;
        if (t.kind == "rule") {
          cells.push_back(t.antecedent + " => " + t.consequent);
        } else {
          if (!ruled) table.rule();
          cells.push_back(t.kind == "total" ? "Total" : "Subtotal (" + t.section + ")");
        }
        for (auto g : t.groups) cells.push_back(std::to_string(g));
        for (auto d : t.detectors) cells.push_back(std::to_string(d));
        table.add(std::move(cells));
        ruled = t.kind == "subtotal";
        if (ruled) table.rule();
      }
      table.print(out);
      out << '\n';
      TextTable rates({"detector", "detected", "rate", "percent"});
      for (std::size_t d = 0; d < kDetectors.size(); ++d) {
        const auto k = matrix.detected(kDetectors[d]);
        rates.add({std::string(to_string(kDetectors[d])), std::to_string(k),
                   std::to_string(k) + "/" + std::to_string(n), percent(*matrix.rate(kDetectors[d]))});
      }
      rates.print(out);
      break;
    }
    case OutputFormat::Delimited: {
      std::vector<std::string> header{"kind", "section", "antecedent", "consequent", "rules"};
      for (const auto& g : layout.groups) header.push_back(g);
      for (auto d : kDetectors) header.emplace_back(to_string(d));
      write_csv_row(out, header);
      for (const auto& t : lines) {
        std::vector<std::string> cells{t.kind, t.section, t.antecedent, t.consequent,
                                       std::to_string(t.rules)};
        for (auto g : t.groups) cells.push_back(std::to_string(g));
        for (auto d : t.detectors) cells.push_back(std::to_string(d));
        write_csv_row(out, cells);
      }
      std::vector<std::string> rate_row{"rate", "", "", "", std::to_string(n)};
      rate_row.resize(rate_row.size() + ngroups);
      for (auto d : kDetectors) rate_row.push_back(format_double(*matrix.rate(d)));
      write_csv_row(out, rate_row);
      break;
    }
    case OutputFormat::Records: {
      for (const auto& t : lines) {
        ordered_json rec;
        rec["kind"] = t.kind;
        rec["section"] = t.section;
        if (t.kind == "rule") {
          rec["antecedent"] = t.antecedent;
          rec["consequent"] = t.consequent;
        }
        rec["rules"] = t.rules;
        ordered_json groups = ordered_json::object();
        for (std::size_t g = 0; g < ngroups; ++g) groups[layout.groups[g]] = t.groups[g];
        rec["groups"] = std::move(groups);
        ordered_json detectors = ordered_json::object();
        for (std::size_t d = 0; d < kDetectors.size(); ++d) {
          detectors[std::string(to_string(kDetectors[d]))] = t.detectors[d];
        }
        rec["detectors"] = std::move(detectors);
        out << rec.dump() << '\n';
      }
      for (auto d : kDetectors) {
        ordered_json rec;
        rec["kind"] = "rate";
        rec["detector"] = to_string(d);
        rec["detected"] = matrix.detected(d);
        rec["total"] = n;
        rec["rate"] = *matrix.rate(d);
        out << rec.dump() << '\n';
      }
      break;
    }
  }
}

std::span<const double> table1_supports() noexcept { return kTable1; }

void write_table1(OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Table: {
      TextTable table({"support", "entropy"}, {false, false});
      for (double p : kTable1) table.add({percent(p), percent(binary_entropy(p))});
      table.print(out);
      break;
    }
    case OutputFormat::Delimited:
      out << "support,entropy\n";
      for (double p : kTable1) out << format_double(p) << ',' << format_double(binary_entropy(p)) << '\n';
      break;
    case OutputFormat::Records:
      for (double p : kTable1) {
        ordered_json rec;
        rec["support"] = p;
        rec["entropy"] = binary_entropy(p);
        out << rec.dump() << '\n';
      }
      break;
  }
}

}  // namespace storemine
