//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chembench {

// Exit-code classes used by the CLI: config = 2, data = 3, internal = 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// SMILES/SMARTS rejection with the byte offset of the offending token.
struct ParseError : DataError {
  ParseError(const std::string& what, std::size_t offset)
      : DataError(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

struct PackError : ConfigError {
  using ConfigError::ConfigError;
};

struct SchemaError : DataError {
  using DataError::DataError;
};

struct EmptyDatasetError : DataError {
  using DataError::DataError;
};

struct DegenerateError : DataError {
  using DataError::DataError;
};

struct MismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FeatureMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UndefinedMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnmappedModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AllFoldsUndefinedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chembench
