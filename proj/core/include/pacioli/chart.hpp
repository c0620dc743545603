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

#ifndef PACIOLI_CHART_HPP
#define PACIOLI_CHART_HPP

#include <map>
#include <vector>

#include "pacioli/account_path.hpp"

namespace pacioli {

/// The chart of accounts: a forest of account paths in which every node's
/// ancestors are present. Leaves are postable; interior nodes only aggregate.
///
/// Nodes remember insertion order, which is the order reports list them in.
/// Charts are values: declare() returns the extended chart.
class Chart {
 public:
  enum class Origin { declared, implicit };

  /// Adds `path` and any missing ancestors. An implicit node may be declared
  /// later; declaring a path twice throws LedgerError(duplicate_declaration).
  Chart declare(const AccountPath& path) const&;
  Chart declare(const AccountPath& path) &&;

  /// Like declare(), but a no-op when the path already exists. Used for
  /// accounts generated by schedules.
  Chart ensure(const AccountPath& path) const&;
  Chart ensure(const AccountPath& path) &&;

  bool contains(const AccountPath& path) const { return nodes_.count(path) != 0; }
  bool is_declared(const AccountPath& path) const;
  bool is_leaf(const AccountPath& path) const;
  bool empty() const { return order_.empty(); }
  std::size_t size() const { return order_.size(); }

  /// All nodes, ancestors before descendants, otherwise in insertion order.
  const std::vector<AccountPath>& nodes() const { return order_; }
  const std::vector<AccountPath>& roots() const { return roots_; }
  /// Throws LedgerError(unknown_account).
  const std::vector<AccountPath>& children(const AccountPath& path) const;
  std::vector<AccountPath> leaves() const;
  /// Leaves in the subtree rooted at `path` (the path itself if it is a
  /// leaf). Throws LedgerError(unknown_account).
  std::vector<AccountPath> leaves_under(const AccountPath& path) const;

 private:
  struct Node {
    Origin origin;
    std::vector<AccountPath> children;
  };

  void insert(const AccountPath& path, bool strict);

  std::map<AccountPath, Node> nodes_;
  std::vector<AccountPath> order_;
  std::vector<AccountPath> roots_;
};

}  // namespace pacioli

#endif  // PACIOLI_CHART_HPP
