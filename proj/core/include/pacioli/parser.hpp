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

#ifndef PACIOLI_PARSER_HPP
#define PACIOLI_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pacioli/journal.hpp"
#include "pacioli/source_span.hpp"

namespace pacioli {

struct ParseDiagnostic {
  enum class Severity { error, warning };

  Severity severity = Severity::error;
  std::string message;
  SourceSpan span;
};

/// "file:line:column: error: message".
std::string format(const ParseDiagnostic& diagnostic);

struct ParseOptions {
  std::string file_name = "<input>";
  /// Every posted account and every schedule source must be declared with an
  /// `account` directive. When false, undeclared accounts are declared
  /// implicitly in order of first use.
  bool strict = true;
};

struct ParseResult {
  /// Present only when there are no error diagnostics.
  std::optional<Journal> journal;
  std::vector<ParseDiagnostic> diagnostics;

  bool has_errors() const;
};

/// Parses the line-oriented journal format:
///
///   ; comment (anywhere outside a quoted description)
///   basis 1234567.89
///   account assets:cash
///   schedule machine expenses:interest 2/5 over 5 yearly from 2024-01-31 mode direct
///
///   2024-01-01 "Opening position"
///       assets:cash dr 1234567.89
///       claims:capital cr 1234567.89
///
/// Amounts are `123`, `123.45` or `p/q`, always exact. Sides are `dr`/`cr`
/// (or `debit`/`credit`). A transaction block ends at a blank line or at
/// end of input. LF and CRLF line endings are accepted.
///
/// After an error the parser skips to the next blank line and carries on, so
/// one pass reports every independent problem. Never throws.
ParseResult parse_journal(std::string_view text, const ParseOptions& options = {});

/// Canonical text: basis, account and schedule directives, then
/// transactions in date order, postings indented four spaces, amounts as
/// reduced rationals, LF line endings. An empty journal serializes to "".
std::string serialize_journal(const Journal& journal);

struct FileReport {
  enum class Status { ok, validation_failure, parse_error };

  Status status = Status::ok;
  std::vector<ParseDiagnostic> diagnostics;
  std::optional<Journal> journal;
  /// Effective transactions posted (written plus schedule-emitted).
  std::size_t transactions = 0;
  /// One line: "ok: N transactions, root ≡ 0" or a failure count.
  std::string summary;
};

/// Parse, then check every transaction sums to zero, post them in order and
/// confirm the whole chart stays a zero T-account after each one. All
/// problems come back as diagnostics; nothing is thrown.
FileReport validate_file(std::string_view text, const ParseOptions& options = {});

}  // namespace pacioli

#endif  // PACIOLI_PARSER_HPP
