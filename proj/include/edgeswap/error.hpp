// Copyright 2026 The edgeswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgeswap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A topology spec or generator parameter is out of range.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input. `line()` is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An exact/enumerative computation would exceed its size budget.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// link() on two vertices of the same tree.
class CycleViolation : public ContractError {
 public:
  using ContractError::ContractError;
};

/// cut() of an edge that is not in the forest.
class MissingEdge : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Path query between vertices of different trees.
class NotConnected : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Positional argument out of range.
class IndexError : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace edgeswap
