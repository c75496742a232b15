# Copyright 2026 The storemine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Store-aware association rule mining."""

from ._storemine import (
    Counts,
    Dataset,
    Error,
    GeneratedScenario,
    ThresholdPolicy,
    analyze_rule,
    binary_entropy,
    compare_report,
    confidence,
    cosine,
    detection_matrix,
    generate,
    generate_text,
    interest,
    jaccard,
    load_csv,
    measures,
    mine,
    mine_report,
    read_csv,
    sl_entropy,
    support,
    table1,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "Counts",
    "Dataset",
    "Error",
    "GeneratedScenario",
    "ThresholdPolicy",
    "analyze_rule",
    "binary_entropy",
    "compare_report",
    "confidence",
    "cosine",
    "detection_matrix",
    "generate",
    "generate_text",
    "interest",
    "jaccard",
    "load_csv",
    "measures",
    "mine",
    "mine_report",
    "read_csv",
    "sl_entropy",
    "support",
    "table1",
    "write_csv",
]
