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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "expect_error.hpp"
#include "oracle.hpp"
#include "storemine/csv.hpp"
#include "storemine/scenario.hpp"

namespace storemine {
namespace {

namespace fs = std::filesystem;

Dataset parse(const std::string& text) {
  std::istringstream in(text);
  return read_csv(in, {}, "mem.csv");
}

std::string to_csv(const Dataset& ds) {
  std::ostringstream out;
  write_csv(ds, out);
  return out.str();
}

void expect_parse_error(const std::string& text, std::size_t line) {
  try {
    parse(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("mem.csv:" + std::to_string(line)), std::string::npos)
        << e.what();
  }
}

fs::path scenario_path(const std::string& name) {
  return fs::path(STOREMINE_SCENARIO_DIR) / name;
}

PlantedScenario scenario_from(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in, "mem.scn");
}

TEST(LoadCsv, ThreeRowExample) {
  const auto ds = parse("store,transaction,item\ns1,t1,A\ns1,t1,B\ns1,t2,A\n");
  EXPECT_EQ(ds.store_count(), 1u);
  EXPECT_EQ(ds.total_txn_count(), 2u);
  EXPECT_EQ(ds.items().labels(), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(ds.transactions()[0].items.size(), 2u);
  EXPECT_EQ(ds.transactions()[1].items.size(), 1u);
}

TEST(LoadCsv, DuplicateRowsCollapse) {
  const auto once = parse("store,transaction,item\ns1,t1,A\ns1,t1,B\ns1,t2,A\n");
  const auto twice = parse("store,transaction,item\ns1,t1,A\ns1,t1,A\ns1,t1,B\ns1,t2,A\n");
  EXPECT_TRUE(testing::same_by_labels(once, twice));
  EXPECT_EQ(to_csv(once), to_csv(twice));
}

TEST(LoadCsv, HeaderOrderExtraColumnsQuotingAndBom) {
  const auto ds = parse(
      "\xEF\xBB\xBFqty,item,store,transaction\r\n"
      "3,\"milk, whole\",\"north\",\"a\"\"1\"\r\n"
      "1,bread,north,\"a\"\"1\"\r\n");
  ASSERT_EQ(ds.total_txn_count(), 1u);
  EXPECT_TRUE(ds.find_item("milk, whole").has_value());
  EXPECT_EQ(ds.transactions()[0].label, "a\"1");
  EXPECT_EQ(ds.store_label(StoreId{0}), "north");
}

TEST(LoadCsv, CustomSchema) {
  std::istringstream in("shop,basket,sku\nx,1,p\nx,1,q\n");
  const auto ds = read_csv(in, CsvSchema{"shop", "basket", "sku"});
  EXPECT_EQ(ds.item_count(), 2u);
}

TEST(LoadCsv, SameTransactionLabelInDifferentStores) {
  const auto ds = parse("store,transaction,item\na,t1,X\nb,t1,Y\na,t1,Z\n");
  EXPECT_EQ(ds.total_txn_count(), 2u);
  EXPECT_EQ(ds.transactions()[0].items.size(), 2u);
}

TEST(LoadCsv, MalformedRowsReportLineNumbers) {
  expect_parse_error("", 1);
  expect_parse_error("store,item\ns,A\n", 1);
  expect_parse_error("store,transaction,item\ns1,t1,A\ns1,t1\n", 3);
  expect_parse_error("store,transaction,item\ns1,t1,A\ns1,t1,A,extra\n", 3);
  expect_parse_error("store,transaction,item\n,t1,A\n", 2);
  expect_parse_error("store,transaction,item\ns1,,A\n", 2);
  expect_parse_error("store,transaction,item\ns1,t1,A\n\ns1,t2,\n", 4);
  expect_parse_error("store,transaction,item\ns1,t1,\"A\n", 2);
}

TEST(LoadCsv, EmptyDatasetAndEmptyStore) {
  EXPECT_ERROR_KIND(parse("store,transaction,item\n"), ErrorKind::EmptyDataset);
  EXPECT_ERROR_KIND(parse("store,transaction,item\nghost,,\ns1,t1,A\n"), ErrorKind::EmptyStore);
}

TEST(LoadCsv, MissingFileIsIoError) {
  EXPECT_ERROR_KIND(load_csv("/nonexistent/dir/data.csv"), ErrorKind::Io);
}

TEST(WriteCsv, StableOrdering) {
  DatasetBuilder b;
  b.add_store("s1");
  b.add_store("s0");
  b.add_transaction("s0", std::vector<std::string>{"Z", "A"}, "first");
  b.add_transaction("s1", std::vector<std::string>{"A"}, "x");
  b.add_transaction("s0", std::vector<std::string>{"A"}, "second");
  const auto ds = std::move(b).build();
  EXPECT_EQ(to_csv(ds),
            "store,transaction,item\n"
            "s1,x,A\n"
            "s0,first,Z\n"
            "s0,first,A\n"
            "s0,second,A\n");
}

TEST(WriteCsv, RoundTripRandomDatasets) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 120; ++k) {
    const testing::RandomShape shape{
        std::uniform_int_distribution<std::uint32_t>(1, 6)(rng),
        std::uniform_int_distribution<std::uint32_t>(1, 40)(rng),
        std::uniform_int_distribution<std::uint32_t>(6, 300)(rng), 0.2};
    const auto ds = testing::random_dataset(rng, shape);
    const auto text = to_csv(ds);
    const auto back = parse(text);
    std::string why;
    ASSERT_TRUE(testing::same_by_labels(ds, back, &why)) << why;
    // Ids are re-interned on load, so bytes settle after one pass.
    const auto settled = to_csv(back);
    ASSERT_EQ(to_csv(parse(settled)), settled);
  }
}

TEST(WriteCsv, RoundTripThroughFile) {
  std::mt19937_64 rng(5);
  const auto ds = testing::random_dataset(rng, {3, 10, 50, 0.3});
  const auto path = fs::temp_directory_path() / "storemine_roundtrip_test.csv";
  write_csv(ds, path);
  const auto back = load_csv(path);
  fs::remove(path);
  EXPECT_TRUE(testing::same_by_labels(ds, back));
  EXPECT_ERROR_KIND(write_csv(ds, fs::path("/nonexistent/dir/out.csv")), ErrorKind::Io);
}

TEST(ParseScenario, AllDirectives) {
  const auto sc = scenario_from(
      "# comment\n"
      "seed 99\n"
      "filler none\n"
      "store a 100 group=G1   # trailing comment\n"
      "store b 50\n"
      "item P default=0.2 b=0.4\n"
      "section First  block \n"
      "rule P Q a=0.1:0.3:0.2 ~b=0.02\n");
  EXPECT_EQ(sc.seed, 99u);
  EXPECT_EQ(sc.filler, "none");
  ASSERT_EQ(sc.stores.size(), 2u);
  EXPECT_EQ(sc.stores[0].group, "G1");
  EXPECT_EQ(sc.stores[1].group, "");
  ASSERT_EQ(sc.items.size(), 1u);
  EXPECT_EQ(*sc.items[0].default_support, 0.2);
  EXPECT_EQ(sc.items[0].per_store.size(), 1u);
  ASSERT_EQ(sc.rules.size(), 1u);
  EXPECT_EQ(sc.rules[0].section, "First  block");
  ASSERT_EQ(sc.rules[0].cells.size(), 2u);
  EXPECT_TRUE(sc.rules[0].cells[0].planted);
  EXPECT_EQ(*sc.rules[0].cells[0].antecedent, 0.3);
  EXPECT_FALSE(sc.rules[0].cells[1].planted);
  EXPECT_FALSE(sc.rules[0].cells[1].antecedent.has_value());
}

TEST(ParseScenario, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      scenario_from(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("store a 10\nbogus\n"), 2u);
  EXPECT_EQ(line_of("store a ten\n"), 1u);
  EXPECT_EQ(line_of("store a 0\n"), 1u);
  EXPECT_EQ(line_of("store a 10\nstore a 20\n"), 2u);
  EXPECT_EQ(line_of("store a 10\nrule A A a=0.1\n"), 2u);
  EXPECT_EQ(line_of("store a 10\nrule A B a=1.5\n"), 2u);
  EXPECT_EQ(line_of("store a 10\nrule A B a=0.1:0.2\n"), 2u);
  EXPECT_EQ(line_of("store a 10\nitem A oops\n"), 2u);
  EXPECT_EQ(line_of("seed\n"), 1u);
  EXPECT_EQ(line_of("# nothing\n"), 1u);
}

TEST(Generate, WorkedExampleCountsAreExact) {
  const auto gen = generate(load_scenario(scenario_path("worked_example.scn")));
  const auto& ds = gen.dataset;
  const Rule r(*ds.find_item("A"), *ds.find_item("B"));
  const Counts agg = testing::naive_counts(ds, r.antecedent(), r.consequent());
  EXPECT_EQ(agg, (Counts{8000, 200, 100, 20000}));
  EXPECT_EQ(testing::naive_counts(ds, r.antecedent(), r.consequent(), *ds.find_store("X")),
            (Counts{300, 100, 70, 1000}));
  EXPECT_EQ(support(agg), 0.005);
  EXPECT_EQ(interest(agg), 1.25);
  ASSERT_EQ(gen.truth.size(), 1u);
  EXPECT_EQ(gen.truth[0].stores, (std::vector<StoreId>{*ds.find_store("X")}));
}

TEST(Generate, OneStoreFullSupport) {
  const auto gen = generate(scenario_from("store s 25\nrule A B s=1.0\n"));
  const auto& ds = gen.dataset;
  EXPECT_EQ(ds.item_count(), 2u);  // no filler needed
  for (const auto& t : ds.transactions()) EXPECT_EQ(t.items.size(), 2u);
}

TEST(Generate, SameSeedSameBytesOtherSeedSameCounts) {
  const auto sc = load_scenario(scenario_path("store_types.scn"));
  const auto a = generate(sc);
  const auto b = generate(sc);
  EXPECT_EQ(to_csv(a.dataset), to_csv(b.dataset));
  auto other = sc;
  other.seed += 1;
  const auto c = generate(other);
  EXPECT_NE(to_csv(a.dataset), to_csv(c.dataset));
  // Declared marginals and controlled pairs do not move with the seed; the
  // filler count does.
  for (std::uint32_t s = 0; s < a.dataset.store_count(); ++s) {
    for (std::uint32_t i = 0; i < a.dataset.item_count(); ++i) {
      const ItemId ia{i};
      if (a.dataset.item_label(ia) == sc.filler) continue;
      const ItemId ic = *c.dataset.find_item(a.dataset.item_label(ia));
      ASSERT_EQ(testing::naive_counts(a.dataset, ia, ia, StoreId{s}).n_i,
                testing::naive_counts(c.dataset, ic, ic, StoreId{s}).n_i);
    }
    for (const auto& rule : sc.rules) {
      const Rule ra(*a.dataset.find_item(rule.antecedent), *a.dataset.find_item(rule.consequent));
      const Rule rc(*c.dataset.find_item(rule.antecedent), *c.dataset.find_item(rule.consequent));
      ASSERT_EQ(count_pair(a.dataset, ra, StoreId{s}), count_pair(c.dataset, rc, StoreId{s}));
    }
  }
}

TEST(Generate, StoreTypesScenarioIsExact) {
  const auto sc = load_scenario(scenario_path("store_types.scn"));
  const auto gen = generate(sc);
  const auto& ds = gen.dataset;
  EXPECT_EQ(gen.truth.size(), sc.rules.size());
  EXPECT_GE(gen.truth.size(), 30u);
  EXPECT_EQ(gen.layout.groups, (std::vector<std::string>{"T1", "T2", "T3"}));
  for (std::uint32_t s = 0; s < sc.stores.size(); ++s) {
    const auto& store = sc.stores[s];
    const StoreId sid = *ds.find_store(store.label);
    EXPECT_EQ(ds.store_txn_count(sid), store.txn_count);
    const double n = static_cast<double>(store.txn_count);
    for (const auto& rule : sc.rules) {
      Count want = 0;
      for (const auto& cell : rule.cells) {
        if (cell.store == store.label) want = static_cast<Count>(std::llround(cell.joint * n));
      }
      const Rule r(*ds.find_item(rule.antecedent), *ds.find_item(rule.consequent));
      const auto got = testing::naive_counts(ds, r.antecedent(), r.consequent(), sid);
      ASSERT_EQ(got.n_ij, want) << rule.antecedent << "," << rule.consequent << " @" << store.label;
    }
    for (const auto& item : sc.items) {
      std::optional<double> f = item.default_support;
      for (const auto& [label, v] : item.per_store) {
        if (label == store.label) f = v;
      }
      if (!f) continue;
      const auto got = testing::naive_counts(ds, *ds.find_item(item.label), *ds.find_item(item.label), sid);
      ASSERT_EQ(got.n_i, static_cast<Count>(std::llround(*f * n))) << item.label << " @" << store.label;
    }
  }
}

TEST(Generate, InfeasibleScenarios) {
  auto infeasible = [](const std::string& text) {
    SCOPED_TRACE(text);
    EXPECT_ERROR_KIND(generate(scenario_from(text)), ErrorKind::InfeasibleScenario);
  };
  infeasible("store s 100\nrule A B s=0.2:0.1:0.5\n");             // marginal below joint
  infeasible("store s 100\nrule A B s=0.6\nrule C D s=0.5\n");      // blocks overflow the store
  infeasible("store s 100\nrule A B s=0.1:0.3:0.2\nrule A C s=0.1:0.4:0.2\n");  // conflict
  infeasible("store s 100\nrule A B t=0.1\n");                      // undeclared store
  infeasible("store s 100\nitem A t=0.1\n");
  infeasible("store s 100\nrule A B s=0.1\nrule B A s=0.1\n");      // pair twice
  // A has to avoid every B row and every C row: 60 + 50 > 100 - 0.
  infeasible("store s 100\nitem A s=0.6\nrule B C s=0.5:0.5:0.5\nrule A B s=0.0\n");
}

TEST(Generate, ContextCellsAreNotTruth) {
  const auto gen = generate(scenario_from("store a 100\nstore b 100\nrule A B a=0.1 ~b=0.05\nrule C D ~a=0.1\n"));
  ASSERT_EQ(gen.truth.size(), 1u);
  EXPECT_EQ(gen.truth[0].stores, (std::vector<StoreId>{StoreId{0}}));
  const Rule cd(*gen.dataset.find_item("C"), *gen.dataset.find_item("D"));
  EXPECT_EQ(count_pair(gen.dataset, cd, StoreId{0}).n_ij, 10u);
}

TEST(Generate, ReversalScenario) {
  const auto gen = generate(load_scenario(scenario_path("simpson_reversal.scn")));
  const auto& ds = gen.dataset;
  const Rule r(*ds.find_item("A"), *ds.find_item("B"));
  const double agg = interest(count_pair(ds, r));
  EXPECT_LT(agg, 1.0);
  for (std::uint32_t s = 0; s < ds.store_count(); ++s) {
    EXPECT_GT(interest(count_pair(ds, r, StoreId{s})), agg);
  }
}

TEST(GroundTruthFile, RoundTripAndRemap) {
  const auto gen = generate(load_scenario(scenario_path("store_types.scn")));
  std::ostringstream out;
  write_ground_truth(gen, out);
  // Reload the dataset from its CSV so item ids are re-interned.
  const auto reloaded = parse(to_csv(gen.dataset));
  std::istringstream in(out.str());
  const auto tf = read_ground_truth(in, reloaded, "truth.csv");
  const auto remapped = remap_truth(gen, reloaded);
  ASSERT_EQ(tf.truth.size(), gen.truth.size());
  ASSERT_EQ(remapped.size(), gen.truth.size());
  for (std::size_t k = 0; k < tf.truth.size(); ++k) {
    EXPECT_EQ(tf.truth[k].rule, remapped[k].rule);
    EXPECT_EQ(tf.truth[k].stores, remapped[k].stores);
    EXPECT_EQ(tf.truth[k].section, gen.truth[k].section);
  }
  EXPECT_EQ(tf.layout.store_groups, gen.layout.store_groups);
  EXPECT_EQ(tf.layout.groups, gen.layout.groups);
}

TEST(GroundTruthFile, Errors) {
  const auto ds = testing::make_dataset({{"s", {"A", "B"}}});
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    return read_ground_truth(in, ds, "t.csv");
  };
  EXPECT_THROW(read("wrong,header\n"), ParseError);
  EXPECT_THROW(read("antecedent,consequent,store,group,section\nA,B,nowhere,G,\n"), ParseError);
  EXPECT_THROW(read("antecedent,consequent,store,group,section\nA,C,s,G,\n"), ParseError);
  EXPECT_THROW(read("antecedent,consequent,store,group,section\nA,B,s\n"), ParseError);
  EXPECT_TRUE(read("antecedent,consequent,store,group,section\n,,s,G,\n").truth.empty());
}

}  // namespace
}  // namespace storemine
