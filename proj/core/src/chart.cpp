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

#include "pacioli/chart.hpp"

#include "pacioli/error.hpp"

namespace pacioli {

void Chart::insert(const AccountPath& path, bool strict) {
  if (auto it = nodes_.find(path); it != nodes_.end()) {
    if (it->second.origin == Origin::declared) {
      if (strict) throw LedgerError(ErrorKind::duplicate_declaration, "account '" + path.str() + "' declared twice");
      return;
    }
    it->second.origin = Origin::declared;
    return;
  }
  // Materialize missing ancestors top-down so order_ stays parent-first.
  std::vector<AccountPath> missing{path};
  for (auto p = path.parent(); p && !contains(*p); p = p->parent()) missing.push_back(*p);
  for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
    const Origin origin = (*it == path) ? Origin::declared : Origin::implicit;
    nodes_.emplace(*it, Node{origin, {}});
    order_.push_back(*it);
    if (auto parent = it->parent()) {
      nodes_.at(*parent).children.push_back(*it);
    } else {
      roots_.push_back(*it);
    }
  }
}

Chart Chart::declare(const AccountPath& path) const& { return Chart(*this).declare(path); }

Chart Chart::declare(const AccountPath& path) && {
  insert(path, true);
  return std::move(*this);
}

Chart Chart::ensure(const AccountPath& path) const& { return Chart(*this).ensure(path); }

Chart Chart::ensure(const AccountPath& path) && {
  insert(path, false);
  return std::move(*this);
}

bool Chart::is_declared(const AccountPath& path) const {
  const auto it = nodes_.find(path);
  return it != nodes_.end() && it->second.origin == Origin::declared;
}

bool Chart::is_leaf(const AccountPath& path) const {
  const auto it = nodes_.find(path);
  return it != nodes_.end() && it->second.children.empty();
}

const std::vector<AccountPath>& Chart::children(const AccountPath& path) const {
  const auto it = nodes_.find(path);
  if (it == nodes_.end()) throw LedgerError(ErrorKind::unknown_account, "unknown account '" + path.str() + "'");
  return it->second.children;
}

std::vector<AccountPath> Chart::leaves() const {
  std::vector<AccountPath> out;
  for (const auto& p : order_) {
    if (is_leaf(p)) out.push_back(p);
  }
  return out;
}

std::vector<AccountPath> Chart::leaves_under(const AccountPath& path) const {
  std::vector<AccountPath> out;
  std::vector<const AccountPath*> stack{&path};
  if (!contains(path)) throw LedgerError(ErrorKind::unknown_account, "unknown account '" + path.str() + "'");
  while (!stack.empty()) {
    const AccountPath* p = stack.back();
    stack.pop_back();
    const auto& kids = nodes_.at(*p).children;
    if (kids.empty()) {
      out.push_back(*p);
      continue;
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

}  // namespace pacioli
