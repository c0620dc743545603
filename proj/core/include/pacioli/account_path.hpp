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

#ifndef PACIOLI_ACCOUNT_PATH_HPP
#define PACIOLI_ACCOUNT_PATH_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pacioli {

/// True for an ASCII letter followed by letters, digits, '_' or '-'.
bool is_identifier(std::string_view segment);

/// A hierarchical account name such as `assets:cash`. Never empty; every
/// segment is an identifier. Comparison is exact and case-sensitive.
class AccountPath {
 public:
  /// Throws LedgerError(invalid_path).
  explicit AccountPath(std::vector<std::string> segments);
  /// Throws LedgerError(invalid_path).
  static AccountPath parse(std::string_view text);
  static std::optional<AccountPath> try_parse(std::string_view text);

  const std::vector<std::string>& segments() const { return segments_; }
  std::size_t depth() const { return segments_.size(); }
  const std::string& name() const { return segments_.back(); }

  std::optional<AccountPath> parent() const;
  AccountPath child(std::string_view segment) const;
  /// Same parent, different last segment.
  AccountPath sibling(std::string_view segment) const;

  /// Strict ancestry: `a:b` is an ancestor of `a:b:c`, not of itself.
  bool is_ancestor_of(const AccountPath& other) const;
  bool is_self_or_ancestor_of(const AccountPath& other) const {
    return *this == other || is_ancestor_of(other);
  }

  /// Segments joined by ':'.
  std::string str() const;

  friend bool operator==(const AccountPath&, const AccountPath&) = default;
  friend std::strong_ordering operator<=>(const AccountPath&, const AccountPath&) = default;

 private:
  std::vector<std::string> segments_;
};

}  // namespace pacioli

#endif  // PACIOLI_ACCOUNT_PATH_HPP
