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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "storemine/dataset.hpp"

namespace storemine {

/// Column names to read from the header row. Other columns are ignored.
struct CsvSchema {
  std::string store = "store";
  std::string transaction = "transaction";
  std::string item = "item";
};

/// Reads one item occurrence per row. Rows sharing (store, transaction) form
/// one transaction; repeated items are dropped. Ids are assigned in order of
/// first appearance. A row with empty transaction and item fields declares a
/// store; a declared store that never gets a transaction is an EmptyStore
/// error.
Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema = {});
Dataset read_csv(std::istream& in, const CsvSchema& schema = {},
                 std::string_view source = "<stream>");

/// Writes `store,transaction,item` rows ordered by store id, then
/// transaction position, then item id. Items that occur in no transaction
/// have no row and are not written.
void write_csv(const Dataset& dataset, const std::filesystem::path& path);
void write_csv(const Dataset& dataset, std::ostream& out);

/// Splits one CSV record. Handles double-quoted fields with "" escapes.
/// Returns false on an unterminated quote.
bool split_csv_record(std::string_view line, std::vector<std::string>& fields);

/// Quotes a field when it holds a comma, quote or leading/trailing space.
std::string quote_csv_field(std::string_view field);

}  // namespace storemine
