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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "storemine/csv.hpp"
#include "storemine/error.hpp"
#include "storemine/report.hpp"
#include "storemine/scenario.hpp"

namespace fs = std::filesystem;
using namespace storemine;

namespace {

struct Source {
  std::string input;
  std::string scenario;
  std::optional<std::uint64_t> seed;
};

struct Sink {
  std::string format = "table";
  std::string output;
};

void add_source(CLI::App& cmd, Source& src) {
  auto* input = cmd.add_option("--input", src.input, "Transaction CSV (store,transaction,item)");
  auto* scenario = cmd.add_option("--scenario", src.scenario, "Scenario file to generate from");
  input->excludes(scenario);
  cmd.add_option("--seed", src.seed, "Override the scenario seed")->needs(scenario);
}

void add_sink(CLI::App& cmd, Sink& sink) {
  cmd.add_option("--format", sink.format, "table, csv or jsonl")
      ->check(CLI::IsMember({"table", "csv", "jsonl", "delimited", "records"}))
      ->capture_default_str();
  cmd.add_option("--output", sink.output, "Write the report here instead of stdout");
}

void add_policy(CLI::App& cmd, ThresholdPolicy& p, unsigned& threads) {
  cmd.add_option("--min-support", p.min_support, "Lower support bound")->capture_default_str();
  cmd.add_option("--max-support", p.max_support, "Upper support bound")->capture_default_str();
  cmd.add_option("--interest-cutoff", p.interest_cutoff)->capture_default_str();
  cmd.add_option("--cosine-cutoff", p.cosine_cutoff)->capture_default_str();
  cmd.add_option("--jaccard-cutoff", p.jaccard_cutoff)->capture_default_str();
  cmd.add_option("--entropy-low", p.entropy_low, "Default: entropy of --min-support");
  cmd.add_option("--entropy-high", p.entropy_high, "Default: entropy of --max-support");
  cmd.add_option("--sl-entropy-cutoff", p.sl_entropy_cutoff, "Default: the lower entropy bound");
  cmd.add_option("--per-store-min-support", p.per_store_min_support,
                 "Within-store support that counts a store as present")
      ->capture_default_str();
  cmd.add_option("--candidate-support", p.candidate_support,
                 "Pairs below this aggregate support are not scored (default: --min-support)");
  cmd.add_option("--threads", threads, "Counting threads, 0 for all cores")->capture_default_str();
}

std::optional<GeneratedScenario> generate_from(const Source& src) {
  if (src.scenario.empty()) return std::nullopt;
  auto scenario = load_scenario(src.scenario);
  if (src.seed) scenario.seed = *src.seed;
  return generate(scenario);
}

Dataset load_input(const Source& src) {
  if (src.input.empty()) {
    throw Error(ErrorKind::InvalidArgument, "one of --input or --scenario is required");
  }
  return load_csv(src.input);
}

void emit(const Sink& sink, const std::string& text) {
  if (sink.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(sink.output, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + sink.output + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + sink.output + "'");
}

fs::path truth_path_for(const fs::path& csv) {
  return csv.parent_path() / (csv.stem().string() + ".truth.csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Store-aware association rule mining"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "storemine 0.1.0");

  Source src;
  Sink sink;
  ThresholdPolicy policy;
  unsigned threads = 1;
  std::string truth;

  auto* mine = app.add_subcommand("mine", "Score every frequent item pair");
  add_source(*mine, src);
  add_sink(*mine, sink);
  add_policy(*mine, policy, threads);

  auto* compare = app.add_subcommand("compare", "Detection table against planted ground truth");
  add_source(*compare, src);
  add_sink(*compare, sink);
  add_policy(*compare, policy, threads);
  compare->add_option("--truth", truth, "Ground-truth CSV written by gen (with --input)");

  auto* gen = app.add_subcommand("gen", "Generate a CSV dataset and its ground truth");
  std::string gen_out;
  gen->add_option("--scenario", src.scenario, "Scenario file")->required();
  gen->add_option("--seed", src.seed, "Override the scenario seed");
  gen->add_option("--output", gen_out, "Dataset CSV; truth goes to <stem>.truth.csv")->required();

  auto* table1 = app.add_subcommand("table1", "Support and entropy at ten support levels");
  add_sink(*table1, sink);

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream report;
    const OutputFormat format = parse_output_format(sink.format);
    const MiningOptions options{threads};

    if (mine->parsed()) {
      policy.validate();
      auto generated = generate_from(src);
      const Dataset dataset = generated ? std::move(generated->dataset) : load_input(src);
      write_mine_report(dataset, mine_rows(dataset, policy, options), format, report);
      emit(sink, report.str());
    } else if (compare->parsed()) {
      policy.validate();
      std::optional<Dataset> dataset;
      TruthFile tf;
      if (auto generated = generate_from(src)) {
        if (!truth.empty()) {
          throw Error(ErrorKind::InvalidArgument, "--truth cannot be combined with --scenario");
        }
        tf = TruthFile{std::move(generated->truth), std::move(generated->layout)};
        dataset.emplace(std::move(generated->dataset));
      } else {
        dataset.emplace(load_input(src));
        if (truth.empty()) {
          throw Error(ErrorKind::MissingGroundTruth,
                      "compare needs --scenario, or --input with --truth");
        }
        tf = load_ground_truth(truth, *dataset);
      }
      if (tf.truth.empty()) {
        throw Error(ErrorKind::MissingGroundTruth, "the ground truth lists no planted rules");
      }
      const auto matrix = detection_matrix(*dataset, tf.truth, policy);
      write_compare_report(*dataset, matrix, tf.layout, format, report);
      emit(sink, report.str());
    } else if (gen->parsed()) {
      const auto generated = *generate_from(src);
      const fs::path csv = gen_out;
      const fs::path truth_csv = truth_path_for(csv);
      write_csv(generated.dataset, csv);
      write_ground_truth(generated, truth_csv);
      std::cout << "wrote " << csv.string() << " (" << generated.dataset.total_txn_count()
                << " transactions, " << generated.dataset.store_count() << " stores)\n"
                << "wrote " << truth_csv.string() << " (" << generated.truth.size()
                << " planted rules)\n";
    } else if (table1->parsed()) {
      write_table1(format, report);
      emit(sink, report.str());
    }
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
