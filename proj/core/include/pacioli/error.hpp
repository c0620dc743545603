// Copyright 2026 The Pacioli Authors
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

#ifndef PACIOLI_ERROR_HPP
#define PACIOLI_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pacioli/amount.hpp"
#include "pacioli/source_span.hpp"

namespace pacioli {

enum class ErrorKind {
  invalid_path,
  duplicate_declaration,
  unknown_account,
  non_leaf_posting,
  empty_transaction,
  single_posting,
  imbalance,
  partition_mismatch,
  child_collision,
  inverted_interval,
  unknown_root,
  insufficient_balance,
  empty_movement,
  invalid_schedule,
  missing_basis,
  internal_inconsistency,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by ledger operations. Imbalance and
/// partition errors carry the signed residual; posting errors carry the
/// source location of the offending transaction when it is known.
class LedgerError : public std::runtime_error {
 public:
  LedgerError(ErrorKind kind, const std::string& message,
              std::optional<SignedAmount> residual = std::nullopt,
              std::optional<SourceSpan> where = std::nullopt)
      : std::runtime_error(message), kind_(kind), residual_(std::move(residual)), where_(std::move(where)) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<SignedAmount>& residual() const { return residual_; }
  const std::optional<SourceSpan>& where() const { return where_; }

 private:
  ErrorKind kind_;
  std::optional<SignedAmount> residual_;
  std::optional<SourceSpan> where_;
};

}  // namespace pacioli

#endif  // PACIOLI_ERROR_HPP
