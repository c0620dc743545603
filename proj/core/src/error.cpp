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

#include "pacioli/error.hpp"

namespace pacioli {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_path: return "invalid-path";
    case ErrorKind::duplicate_declaration: return "duplicate-declaration";
    case ErrorKind::unknown_account: return "unknown-account";
    case ErrorKind::non_leaf_posting: return "non-leaf-posting";
    case ErrorKind::empty_transaction: return "empty-transaction";
    case ErrorKind::single_posting: return "single-posting";
    case ErrorKind::imbalance: return "imbalance";
    case ErrorKind::partition_mismatch: return "partition-mismatch";
    case ErrorKind::child_collision: return "child-collision";
    case ErrorKind::inverted_interval: return "inverted-interval";
    case ErrorKind::unknown_root: return "unknown-root";
    case ErrorKind::insufficient_balance: return "insufficient-balance";
    case ErrorKind::empty_movement: return "empty-movement";
    case ErrorKind::invalid_schedule: return "invalid-schedule";
    case ErrorKind::missing_basis: return "missing-basis";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace pacioli
