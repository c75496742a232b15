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

#include "storemine/error.hpp"

namespace storemine {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownItem: return "UnknownItem";
    case ErrorKind::UnknownStore: return "UnknownStore";
    case ErrorKind::EmptyScope: return "EmptyScope";
    case ErrorKind::UndefinedMeasure: return "UndefinedMeasure";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::EmptyStore: return "EmptyStore";
    case ErrorKind::InfeasibleScenario: return "InfeasibleScenario";
    case ErrorKind::MissingGroundTruth: return "MissingGroundTruth";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

ParseError::ParseError(std::string source, std::size_t line, const std::string& what)
    : Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

}  // namespace storemine
