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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "storemine/csv.hpp"
#include "storemine/error.hpp"
#include "storemine/measures.hpp"
#include "storemine/mining.hpp"
#include "storemine/paradox.hpp"
#include "storemine/report.hpp"
#include "storemine/scenario.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace storemine;

namespace {

ItemId item_of(const Dataset& ds, const std::string& label) {
  auto id = ds.find_item(label);
  if (!id) throw Error(ErrorKind::UnknownItem, "unknown item '" + label + "'");
  return *id;
}

StoreId store_of(const Dataset& ds, const std::string& label) {
  auto id = ds.find_store(label);
  if (!id) throw Error(ErrorKind::UnknownStore, "unknown store '" + label + "'");
  return *id;
}

Rule rule_of(const Dataset& ds, const std::string& a, const std::string& b) {
  return Rule(item_of(ds, a), item_of(ds, b));
}

py::dict counts_dict(const Counts& c) {
  return py::dict("n_i"_a = c.n_i, "n_j"_a = c.n_j, "n_ij"_a = c.n_ij, "n"_a = c.n);
}

py::dict measures_dict(const MeasureVector& m) {
  return py::dict("support"_a = m.support, "confidence"_a = m.confidence,
                  "interest"_a = m.interest, "cosine"_a = m.cosine, "jaccard"_a = m.jaccard,
                  "entropy"_a = m.entropy, "sl_entropy"_a = m.sl_entropy);
}

py::dict verdicts_dict(const Verdicts& v) {
  py::dict out;
  for (Detector d : kDetectors) out[py::str(std::string(to_string(d)))] = v.passes(d);
  return out;
}

py::dict mine_row_dict(const Dataset& ds, const MineRow& row) {
  const auto& s = row.scored;
  return py::dict("antecedent"_a = ds.item_label(s.rule.antecedent()),
                  "consequent"_a = ds.item_label(s.rule.consequent()),
                  "counts"_a = counts_dict(s.counts), "measures"_a = measures_dict(s.aggregate),
                  "reverse_confidence"_a = s.reverse_confidence,
                  "stores_present"_a = s.stores_present, "stores_total"_a = s.stores_total,
                  "verdicts"_a = verdicts_dict(s.verdicts),
                  "classification"_a = std::string(to_string(row.classification)));
}

GroundTruth truth_from(const Dataset& ds, const py::iterable& rows) {
  GroundTruth truth;
  for (auto obj : rows) {
    auto d = obj.cast<py::dict>();
    PlantedRule planted{rule_of(ds, d["antecedent"].cast<std::string>(),
                                d["consequent"].cast<std::string>()),
                        {},
                        d.contains("section") ? d["section"].cast<std::string>() : ""};
    for (const auto& s : d["stores"].cast<std::vector<std::string>>()) {
      planted.stores.push_back(store_of(ds, s));
    }
    truth.push_back(std::move(planted));
  }
  return truth;
}

py::list truth_list(const Dataset& ds, const GroundTruth& truth) {
  py::list out;
  for (const auto& t : truth) {
    std::vector<std::string> stores;
    for (StoreId s : t.stores) stores.push_back(ds.store_label(s));
    out.append(py::dict("antecedent"_a = ds.item_label(t.rule.antecedent()),
                        "consequent"_a = ds.item_label(t.rule.consequent()),
                        "stores"_a = stores, "section"_a = t.section));
  }
  return out;
}

Counts counts_from(Count n_i, Count n_j, Count n_ij, Count n) { return Counts{n_i, n_j, n_ij, n}; }

}  // namespace

PYBIND11_MODULE(_storemine, m) {
  m.doc() = "Store-aware association rule mining over multi-store transaction data.";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Counts>(m, "Counts")
      .def(py::init(&counts_from), "n_i"_a, "n_j"_a, "n_ij"_a, "n"_a)
      .def_readwrite("n_i", &Counts::n_i)
      .def_readwrite("n_j", &Counts::n_j)
      .def_readwrite("n_ij", &Counts::n_ij)
      .def_readwrite("n", &Counts::n)
      .def("__eq__", [](const Counts& a, const Counts& b) { return a == b; })
      .def("__repr__", [](const Counts& c) {
        std::ostringstream s;
        s << "Counts(n_i=" << c.n_i << ", n_j=" << c.n_j << ", n_ij=" << c.n_ij
          << ", n=" << c.n << ")";
        return s.str();
      });

  m.def("support", &support, "counts"_a);
  m.def("confidence", &confidence, "counts"_a);
  m.def("interest", &interest, "counts"_a);
  m.def("cosine", &cosine, "counts"_a);
  m.def("jaccard", &jaccard, "counts"_a);
  m.def("binary_entropy", &binary_entropy, "p"_a);
  m.def("sl_entropy", &sl_entropy, "p"_a, "stores_total"_a, "stores_present"_a);
  m.def(
      "measures",
      [](const Counts& c, std::uint32_t stores_total, std::optional<std::uint32_t> present) {
        return measures_dict(measure_vector(c, stores_total, present));
      },
      "counts"_a, "stores_total"_a = 1, "stores_present"_a = py::none(),
      "All measures for one scope; undefined ones are None.");

  py::class_<ThresholdPolicy>(m, "ThresholdPolicy")
      .def(py::init([](py::kwargs kw) {
        ThresholdPolicy p;
        py::object obj = py::cast(p);
        for (auto [key, value] : kw) obj.attr(key) = value;
        p = obj.cast<ThresholdPolicy>();
        p.validate();
        return p;
      }))
      .def_readwrite("min_support", &ThresholdPolicy::min_support)
      .def_readwrite("max_support", &ThresholdPolicy::max_support)
      .def_readwrite("interest_cutoff", &ThresholdPolicy::interest_cutoff)
      .def_readwrite("cosine_cutoff", &ThresholdPolicy::cosine_cutoff)
      .def_readwrite("jaccard_cutoff", &ThresholdPolicy::jaccard_cutoff)
      .def_readwrite("entropy_low", &ThresholdPolicy::entropy_low)
      .def_readwrite("entropy_high", &ThresholdPolicy::entropy_high)
      .def_readwrite("sl_entropy_cutoff", &ThresholdPolicy::sl_entropy_cutoff)
      .def_readwrite("per_store_min_support", &ThresholdPolicy::per_store_min_support)
      .def_readwrite("candidate_support", &ThresholdPolicy::candidate_support)
      .def_property_readonly("entropy_band",
                             [](const ThresholdPolicy& p) {
                               const auto band = p.entropy_band();
                               return py::make_tuple(band.low, band.high);
                             })
      .def_property_readonly("resolved_sl_entropy_cutoff",
                             &ThresholdPolicy::resolved_sl_entropy_cutoff)
      .def("validate", &ThresholdPolicy::validate);

  py::class_<Dataset>(m, "Dataset")
      .def_static(
          "from_transactions",
          [](const std::vector<std::tuple<std::string, std::string, std::vector<std::string>>>&
                 rows) {
            DatasetBuilder b;
            for (const auto& [store, label, items] : rows) b.add_transaction(store, items, label);
            return std::move(b).build();
          },
          "rows"_a, "Builds from (store, transaction, [items]) tuples.")
      .def_property_readonly("items", [](const Dataset& d) { return d.items().labels(); })
      .def_property_readonly("stores", [](const Dataset& d) { return d.stores().labels(); })
      .def("__len__", &Dataset::total_txn_count)
      .def("store_size",
           [](const Dataset& d, const std::string& s) { return d.store_txn_count(store_of(d, s)); })
      .def(
          "counts",
          [](const Dataset& d, const std::string& a, const std::string& b,
             std::optional<std::string> store) -> Counts {
            const Rule r = rule_of(d, a, b);
            if (store) return count_pair(d, r, store_of(d, *store));
            return count_pair(d, r);
          },
          "antecedent"_a, "consequent"_a, "store"_a = py::none())
      .def("to_csv", [](const Dataset& d) {
        std::ostringstream out;
        write_csv(d, out);
        return out.str();
      });

  m.def("load_csv", [](const std::filesystem::path& p) { return load_csv(p); }, "path"_a);
  m.def(
      "read_csv",
      [](const std::string& text) {
        std::istringstream in(text);
        return read_csv(in);
      },
      "text"_a);
  m.def("write_csv",
        [](const Dataset& d, const std::filesystem::path& p) { write_csv(d, p); }, "dataset"_a,
        "path"_a);

  py::class_<GeneratedScenario>(m, "GeneratedScenario")
      .def_property_readonly("dataset",
                             [](const GeneratedScenario& g) -> const Dataset& { return g.dataset; },
                             py::return_value_policy::reference_internal)
      .def_property_readonly("truth",
                             [](const GeneratedScenario& g) { return truth_list(g.dataset, g.truth); })
      .def_property_readonly("groups",
                             [](const GeneratedScenario& g) { return g.layout.store_groups; })
      .def("truth_csv", [](const GeneratedScenario& g) {
        std::ostringstream out;
        write_ground_truth(g, out);
        return out.str();
      });

  m.def(
      "generate",
      [](const std::filesystem::path& path, std::optional<std::uint64_t> seed) {
        auto scenario = load_scenario(path);
        if (seed) scenario.seed = *seed;
        return generate(scenario);
      },
      "path"_a, "seed"_a = py::none());
  m.def(
      "generate_text",
      [](const std::string& text, std::optional<std::uint64_t> seed) {
        std::istringstream in(text);
        auto scenario = parse_scenario(in);
        if (seed) scenario.seed = *seed;
        return generate(scenario);
      },
      "text"_a, "seed"_a = py::none());

  m.def(
      "mine",
      [](const Dataset& d, const ThresholdPolicy& p, unsigned workers) {
        p.validate();
        std::vector<MineRow> rows;
        {
          py::gil_scoped_release release;
          rows = mine_rows(d, p, MiningOptions{workers});
        }
        py::list out;
        for (const auto& row : rows) out.append(mine_row_dict(d, row));
        return out;
      },
      "dataset"_a, "policy"_a = ThresholdPolicy{}, "workers"_a = 1);

  m.def(
      "analyze_rule",
      [](const Dataset& d, const std::string& a, const std::string& b, const ThresholdPolicy& p) {
        const auto r = analyze_rule(d, rule_of(d, a, b), p);
        py::list stores;
        for (std::uint32_t s = 0; s < d.store_count(); ++s) {
          stores.append(py::dict("store"_a = d.store_label(StoreId{s}),
                                 "measures"_a = measures_dict(r.per_store_vectors[s]),
                                 "detected"_a = static_cast<bool>(r.store_detected[s])));
        }
        return py::dict("aggregate"_a = measures_dict(r.aggregate_vector),
                        "verdicts"_a = verdicts_dict(r.aggregate_detected), "stores"_a = stores,
                        "classification"_a = std::string(to_string(r.classification)));
      },
      "dataset"_a, "antecedent"_a, "consequent"_a, "policy"_a = ThresholdPolicy{});

  m.def(
      "detection_matrix",
      [](const Dataset& d, const py::iterable& truth, const ThresholdPolicy& p) {
        const auto matrix = detection_matrix(d, truth_from(d, truth), p);
        py::list rows;
        for (const auto& row : matrix.rows) {
          py::dict detected;
          for (std::size_t k = 0; k < kDetectors.size(); ++k) {
            detected[py::str(std::string(to_string(kDetectors[k])))] = row.detected[k];
          }
          rows.append(py::dict("antecedent"_a = d.item_label(row.truth.rule.antecedent()),
                               "consequent"_a = d.item_label(row.truth.rule.consequent()),
                               "section"_a = row.truth.section, "detected"_a = detected));
        }
        py::dict rates;
        for (Detector det : kDetectors) rates[py::str(std::string(to_string(det)))] = matrix.rate(det);
        return py::dict("rows"_a = rows, "rates"_a = rates);
      },
      "dataset"_a, "truth"_a, "policy"_a = ThresholdPolicy{},
      "`truth` is a list of dicts with antecedent, consequent, stores and optional section.");

  m.def(
      "mine_report",
      [](const Dataset& d, const ThresholdPolicy& p, const std::string& format) {
        p.validate();
        std::ostringstream out;
        write_mine_report(d, mine_rows(d, p), parse_output_format(format), out);
        return out.str();
      },
      "dataset"_a, "policy"_a = ThresholdPolicy{}, "format"_a = "table");
  m.def(
      "compare_report",
      [](const GeneratedScenario& g, const ThresholdPolicy& p, const std::string& format) {
        p.validate();
        std::ostringstream out;
        write_compare_report(g.dataset, detection_matrix(g.dataset, g.truth, p), g.layout,
                             parse_output_format(format), out);
        return out.str();
      },
      "generated"_a, "policy"_a = ThresholdPolicy{}, "format"_a = "table");
  m.def(
      "table1",
      [](const std::string& format) {
        std::ostringstream out;
        write_table1(parse_output_format(format), out);
        return out.str();
      },
      "format"_a = "table");
}
