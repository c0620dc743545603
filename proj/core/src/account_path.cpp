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

#include "pacioli/account_path.hpp"

#include <algorithm>

#include "pacioli/error.hpp"

namespace pacioli {
namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    out.emplace_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return out;
}

}  // namespace

bool is_identifier(std::string_view segment) {
  if (segment.empty() || !is_letter(segment.front())) return false;
  return std::all_of(segment.begin() + 1, segment.end(),
                     [](char c) { return is_letter(c) || is_digit(c) || c == '_' || c == '-'; });
}

AccountPath::AccountPath(std::vector<std::string> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw LedgerError(ErrorKind::invalid_path, "account path has no segments");
  for (const auto& s : segments_) {
    if (!is_identifier(s)) {
      throw LedgerError(ErrorKind::invalid_path, "invalid account segment '" + s + "'");
    }
  }
}

AccountPath AccountPath::parse(std::string_view text) { return AccountPath(split(text)); }

std::optional<AccountPath> AccountPath::try_parse(std::string_view text) {
  auto segments = split(text);
  if (!std::all_of(segments.begin(), segments.end(), [](const auto& s) { return is_identifier(s); })) {
    return std::nullopt;
  }
  return AccountPath(std::move(segments));
}

std::optional<AccountPath> AccountPath::parent() const {
  if (segments_.size() == 1) return std::nullopt;
  return AccountPath(std::vector<std::string>(segments_.begin(), segments_.end() - 1));
}

AccountPath AccountPath::child(std::string_view segment) const {
  auto segments = segments_;
  segments.emplace_back(segment);
  return AccountPath(std::move(segments));
}

AccountPath AccountPath::sibling(std::string_view segment) const {
  auto segments = segments_;
  segments.back() = std::string(segment);
  return AccountPath(std::move(segments));
}

bool AccountPath::is_ancestor_of(const AccountPath& other) const {
  return segments_.size() < other.segments_.size() &&
         std::equal(segments_.begin(), segments_.end(), other.segments_.begin());
}

std::string AccountPath::str() const {
  std::string out = segments_.front();
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    out += ':';
    out += segments_[i];
  }
  return out;
}

}  // namespace pacioli
