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

#include "storemine/csv.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <unordered_map>

#include "storemine/error.hpp"

namespace storemine {

bool split_csv_record(std::string_view line, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return !quoted;
}

std::string quote_csv_field(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

Dataset read_csv(std::istream& in, const CsvSchema& schema, std::string_view source) {
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

  // Header; tolerate a UTF-8 byte order mark.
  if (!next_line()) throw ParseError(src, 1, "missing header row");
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (!split_csv_record(line, fields)) throw ParseError(src, line_no, "unterminated quote");
  std::optional<std::size_t> store_col, txn_col, item_col;
  for (std::size_t c = 0; c < fields.size(); ++c) {
    if (fields[c] == schema.store) store_col = c;
    if (fields[c] == schema.transaction) txn_col = c;
    if (fields[c] == schema.item) item_col = c;
  }
  if (!store_col || !txn_col || !item_col) {
    throw ParseError(src, line_no, "header must name columns '" + schema.store + "', '" +
                                       schema.transaction + "' and '" + schema.item + "'");
  }
  const std::size_t width = fields.size();

  DatasetBuilder builder;
  struct Pending {
    StoreId store;
    std::string label;
    std::vector<ItemId> items;
  };
  std::vector<Pending> pending;
  std::unordered_map<std::string, std::size_t> index;

  while (next_line()) {
    if (line.empty()) continue;
    if (!split_csv_record(line, fields)) throw ParseError(src, line_no, "unterminated quote");
    if (fields.size() != width) {
      throw ParseError(src, line_no, "expected " + std::to_string(width) + " fields, found " +
                                         std::to_string(fields.size()));
    }
    const std::string& store = fields[*store_col];
    const std::string& txn = fields[*txn_col];
    const std::string& item = fields[*item_col];
    if (store.empty()) throw ParseError(src, line_no, "empty store field");
    const StoreId sid = builder.add_store(store);
    if (txn.empty() && item.empty()) continue;  // store declaration
    if (txn.empty()) throw ParseError(src, line_no, "empty transaction field");
    if (item.empty()) throw ParseError(src, line_no, "empty item field");

    std::string key = store;
    key.push_back('\x1f');
    key += txn;
    auto [it, inserted] = index.try_emplace(std::move(key), pending.size());
    if (inserted) pending.push_back(Pending{sid, txn, {}});
    pending[it->second].items.push_back(builder.add_item(item));
  }

  for (auto& p : pending) builder.add_transaction(p.store, p.items, std::move(p.label));
  if (builder.transaction_count() == 0) {
    throw Error(ErrorKind::EmptyDataset, src + ": no transactions");
  }
  return std::move(builder).build();
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
  return read_csv(in, schema, path.string());
}

void write_csv(const Dataset& dataset, std::ostream& out) {
  out << "store,transaction,item\n";
  const auto txns = dataset.transactions();
  std::vector<std::vector<std::size_t>> by_store(dataset.store_count());
  for (std::size_t t = 0; t < txns.size(); ++t) by_store[txns[t].store.value].push_back(t);
  for (std::uint32_t s = 0; s < dataset.store_count(); ++s) {
    const std::string store = quote_csv_field(dataset.store_label(StoreId{s}));
    for (std::size_t t : by_store[s]) {
      const std::string label = quote_csv_field(txns[t].label);
      for (ItemId item : txns[t].items) {
        out << store << ',' << label << ',' << quote_csv_field(dataset.item_label(item)) << '\n';
      }
    }
  }
}

void write_csv(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  write_csv(dataset, out);
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace storemine
