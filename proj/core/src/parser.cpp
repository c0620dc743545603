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

#include "pacioli/parser.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pacioli/error.hpp"

namespace pacioli {
namespace {

constexpr unsigned kMaxPeriods = 1000;

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool is_blank_line(std::string_view s) { return std::all_of(s.begin(), s.end(), is_blank); }

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

// 1-based column of byte `offset`, counting UTF-8 code points.
std::size_t column_of(std::string_view line, std::size_t offset) {
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < line.size(); ++i) {
    if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
  }
  return col;
}

std::size_t char_length(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

struct Token {
  std::string_view text;
  std::size_t offset;  // byte offset within the line
};

std::vector<Token> split_tokens(std::string_view code, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < code.size()) {
    while (i < code.size() && is_blank(code[i])) ++i;
    const std::size_t start = i;
    while (i < code.size() && !is_blank(code[i])) ++i;
    if (i > start) out.push_back({code.substr(start, i - start), base + start});
  }
  return out;
}

// The part of a line before any comment. A ';' inside a quoted description
// does not start a comment.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ';') {
      return line.substr(0, i);
    }
  }
  return line;
}

// First byte in `code` that cannot appear in a journal, or npos. Outside
// quotes only printable ASCII and tabs are allowed; inside, any byte except
// control characters.
std::size_t find_bad_character(std::string_view code) {
  bool quoted = false;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto c = static_cast<unsigned char>(code[i]);
    if (c == '\t') continue;
    if (c < 0x20 || c == 0x7F) return i;
    if (quoted) {
      if (c == '\\') {
        if (i + 1 < code.size() && static_cast<unsigned char>(code[i + 1]) >= 0x20) ++i;
      } else if (c == '"') {
        quoted = false;
      }
      continue;
    }
    if (c >= 0x80) return i;
    if (c == '"') quoted = true;
  }
  return std::string_view::npos;
}

std::optional<Side> parse_side(std::string_view word) {
  if (word == "dr" || word == "debit") return Side::debit;
  if (word == "cr" || word == "credit") return Side::credit;
  return std::nullopt;
}

bool looks_like_amount(std::string_view word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == '/';
  });
}

std::string escape_description(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

class JournalParser {
 public:
  JournalParser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  ParseResult run();

 private:
  struct Pending {
    Transaction tx;
    std::vector<SourceSpan> spans;
  };

  SourceSpan span(std::size_t offset, std::size_t length) const {
    return {options_.file_name, line_no_, column_of(line_, offset), char_length(line_.substr(offset, length))};
  }
  SourceSpan span(const Token& t) const { return span(t.offset, t.text.size()); }

  void error(SourceSpan where, std::string message) {
    diagnostics_.push_back({ParseDiagnostic::Severity::error, std::move(message), std::move(where)});
    pending_.reset();
    skipping_ = true;
  }
  void warning(SourceSpan where, std::string message) {
    diagnostics_.push_back({ParseDiagnostic::Severity::warning, std::move(message), std::move(where)});
  }

  void handle_line(std::string_view code);
  void finish_transaction();
  void parse_header(std::string_view code);
  void parse_posting(std::string_view code);
  void parse_directive(const std::vector<Token>& tokens);
  void parse_basis(const std::vector<Token>& tokens);
  void parse_account(const std::vector<Token>& tokens);
  void parse_schedule(const std::vector<Token>& tokens);
  std::optional<Amount> amount(const Token& t);
  std::optional<AccountPath> path(const Token& t);
  std::optional<Date> date(const Token& t);
  void check_references();

  std::string_view text_;
  const ParseOptions& options_;
  std::string_view line_;
  std::size_t line_no_ = 0;

  Journal journal_;
  std::vector<Transaction> transactions_;
  std::vector<ParseDiagnostic> diagnostics_;
  std::optional<Pending> pending_;
  bool skipping_ = false;
  bool basis_seen_ = false;
  std::set<AccountPath> declared_;
  std::vector<std::pair<AccountPath, SourceSpan>> references_;
};

ParseResult JournalParser::run() {
  std::size_t start = 0;
  while (start <= text_.size()) {
    std::size_t end = text_.find('\n', start);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view raw = text_.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no_;
    line_ = raw;

    if (is_blank_line(raw)) {
      finish_transaction();
      skipping_ = false;
    } else if (!skipping_) {
      const std::string_view code = trim_right(strip_comment(raw));
      if (!is_blank_line(code)) handle_line(code);
    }
    if (end == text_.size()) break;
    start = end + 1;
  }
  finish_transaction();
  journal_.add_transactions(std::move(transactions_));
  check_references();

  ParseResult result;
  result.diagnostics = std::move(diagnostics_);
  if (!result.has_errors()) result.journal = std::move(journal_);
  return result;
}

void JournalParser::handle_line(std::string_view code) {
  if (const auto bad = find_bad_character(code); bad != std::string_view::npos) {
    error(span(bad, 1), "bad character");
    return;
  }
  if (is_blank(code.front())) {
    if (!pending_) {
      const auto first = code.find_first_not_of(" \t");
      error(span(first, code.size() - first), "posting outside of a transaction");
      return;
    }
    parse_posting(code);
    return;
  }
  if (pending_) {
    warning(span(0, code.size()), "transaction block not separated from the next line by a blank line");
    finish_transaction();
  }
  const char c = code.front();
  if (c >= '0' && c <= '9') {
    parse_header(code);
  } else if (c == '"') {
    error(span(0, code.size()), "missing date before transaction description");
  } else {
    parse_directive(split_tokens(code, 0));
  }
}

void JournalParser::finish_transaction() {
  if (!pending_) return;
  for (std::size_t i = 0; i < pending_->tx.postings.size(); ++i) {
    references_.emplace_back(pending_->tx.postings[i].account, pending_->spans[i]);
  }
  transactions_.push_back(std::move(pending_->tx));
  pending_.reset();
}

void JournalParser::parse_header(std::string_view code) {
  const auto date_end = std::min(code.find_first_of(" \t"), code.size());
  const Token date_token{code.substr(0, date_end), 0};
  const auto d = date(date_token);
  if (!d) return;

  const auto open = code.find_first_not_of(" \t", date_end);
  if (open == std::string_view::npos) {
    error(span(date_end, 0), "missing transaction description");
    return;
  }
  if (code[open] != '"') {
    error(span(open, code.size() - open), "expected a quoted transaction description");
    return;
  }
  std::string description;
  std::size_t i = open + 1;
  bool closed = false;
  for (; i < code.size(); ++i) {
    const char c = code[i];
    if (c == '"') {
      closed = true;
      break;
    }
    if (c != '\\') {
      description += c;
      continue;
    }
    if (i + 1 >= code.size()) break;
    const char next = code[++i];
    switch (next) {
      case '"': description += '"'; break;
      case '\\': description += '\\'; break;
      case 'n': description += '\n'; break;
      default: error(span(i - 1, 2), std::string("unknown escape '\\") + next + "' in description"); return;
    }
  }
  if (!closed) {
    error(span(open, code.size() - open), "unterminated transaction description");
    return;
  }
  if (const auto rest = code.find_first_not_of(" \t", i + 1); rest != std::string_view::npos) {
    error(span(rest, code.size() - rest), "unexpected text after transaction description");
    return;
  }
  pending_ = Pending{Transaction{*d, std::move(description), {}, span(0, code.size())}, {}};
}

void JournalParser::parse_posting(std::string_view code) {
  const auto tokens = split_tokens(code, 0);
  if (tokens.size() == 1) {
    error(span(tokens[0]), "missing side keyword ('dr' or 'cr') and amount");
    return;
  }
  const auto side = parse_side(tokens[1].text);
  if (!side) {
    if (looks_like_amount(tokens[1].text)) {
      error(span(tokens[1]), "missing side keyword ('dr' or 'cr') before amount");
    } else {
      error(span(tokens[1]), "expected side keyword 'dr' or 'cr', found '" + std::string(tokens[1].text) + "'");
    }
    return;
  }
  if (tokens.size() == 2) {
    error(span(tokens[1].offset + tokens[1].text.size(), 0), "missing amount");
    return;
  }
  if (tokens.size() > 3) {
    error(span(tokens[3].offset, code.size() - tokens[3].offset), "unexpected text after amount");
    return;
  }
  auto account = path(tokens[0]);
  if (!account) return;
  auto value = amount(tokens[2]);
  if (!value) return;
  const SourceSpan where = span(tokens[0].offset, code.size() - tokens[0].offset);
  pending_->tx.postings.push_back(*side == Side::debit ? Posting::debit(std::move(*account), std::move(*value))
                                                       : Posting::credit(std::move(*account), std::move(*value)));
  pending_->spans.push_back(where);
}

void JournalParser::parse_directive(const std::vector<Token>& tokens) {
  const auto& keyword = tokens.front().text;
  if (keyword == "basis") {
    parse_basis(tokens);
  } else if (keyword == "account") {
    parse_account(tokens);
  } else if (keyword == "schedule") {
    parse_schedule(tokens);
  } else if (tokens.size() >= 2 && parse_side(tokens[1].text)) {
    error(span(tokens.front()), "posting must be indented under a transaction header");
  } else {
    error(span(tokens.front()), "unknown directive '" + std::string(keyword) + "'");
  }
}

void JournalParser::parse_basis(const std::vector<Token>& tokens) {
  if (tokens.size() != 2) {
    error(span(tokens.front()), "expected 'basis <amount>'");
    return;
  }
  auto value = amount(tokens[1]);
  if (!value) return;
  if (value->is_zero()) {
    error(span(tokens[1]), "basis must be positive");
    return;
  }
  if (basis_seen_) {
    error(span(tokens.front()), "basis declared more than once");
    return;
  }
  basis_seen_ = true;
  journal_.set_basis(std::move(*value));
}

void JournalParser::parse_account(const std::vector<Token>& tokens) {
  if (tokens.size() != 2) {
    error(span(tokens.front()), "expected 'account <path>'");
    return;
  }
  auto p = path(tokens[1]);
  if (!p) return;
  if (!declared_.insert(*p).second) {
    error(span(tokens[1]), "duplicate declaration of account '" + p->str() + "'");
    return;
  }
  journal_.declare(std::move(*p));
}

void JournalParser::parse_schedule(const std::vector<Token>& tokens) {
  // schedule <source> <counterpart> <amount> over <n> yearly from <date> [mode <direct|contra>]
  const auto keyword_at = [&](std::size_t i, std::string_view expected) {
    if (i >= tokens.size()) {
      const auto& last = tokens.back();
      error(span(last.offset + last.text.size(), 0), "expected '" + std::string(expected) + "'");
      return false;
    }
    if (tokens[i].text != expected) {
      error(span(tokens[i]), "expected '" + std::string(expected) + "', found '" + std::string(tokens[i].text) + "'");
      return false;
    }
    return true;
  };
  if (tokens.size() < 4) {
    error(span(tokens.front()), "expected 'schedule <source> <counterpart> <amount> over <n> yearly from <date>'");
    return;
  }
  auto source = path(tokens[1]);
  if (!source) return;
  auto counterpart = path(tokens[2]);
  if (!counterpart) return;
  auto total = amount(tokens[3]);
  if (!total) return;
  if (total->is_zero()) {
    error(span(tokens[3]), "schedule total must be positive");
    return;
  }
  if (!keyword_at(4, "over")) return;
  if (tokens.size() <= 5) {
    error(span(tokens[4].offset + tokens[4].text.size(), 0), "missing period count");
    return;
  }
  const auto& count = tokens[5].text;
  unsigned periods = 0;
  const bool numeric = !count.empty() && count.size() <= 4 &&
                       std::all_of(count.begin(), count.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (numeric) periods = static_cast<unsigned>(std::stoul(std::string(count)));
  if (!numeric || periods < 1 || periods > kMaxPeriods) {
    error(span(tokens[5]), "period count must be an integer from 1 to " + std::to_string(kMaxPeriods));
    return;
  }
  if (tokens.size() > 6 && tokens[6].text != "yearly") {
    error(span(tokens[6]), "unsupported cadence '" + std::string(tokens[6].text) + "' (only 'yearly')");
    return;
  }
  if (!keyword_at(6, "yearly") || !keyword_at(7, "from")) return;
  if (tokens.size() <= 8) {
    error(span(tokens[7].offset + tokens[7].text.size(), 0), "missing start date");
    return;
  }
  const auto start = date(tokens[8]);
  if (!start) return;
  ScheduleMode mode = ScheduleMode::direct;
  if (tokens.size() > 9) {
    if (!keyword_at(9, "mode")) return;
    if (tokens.size() <= 10) {
      error(span(tokens[9].offset + tokens[9].text.size(), 0), "missing schedule mode");
      return;
    }
    if (tokens[10].text == "contra") {
      mode = ScheduleMode::contra;
    } else if (tokens[10].text != "direct") {
      error(span(tokens[10]), "schedule mode must be 'direct' or 'contra'");
      return;
    }
    if (tokens.size() > 11) {
      error(span(tokens[11]), "unexpected text after schedule mode");
      return;
    }
  }
  const SourceSpan where = span(0, line_.size());
  ScheduleDirective directive{*source, *counterpart, *total, periods, *start, mode, where};
  try {
    (void)directive.to_schedule();
  } catch (const LedgerError& e) {
    error(where, e.what());
    return;
  }
  references_.emplace_back(*source, span(tokens[1]));
  journal_.add_schedule(std::move(directive));
}

std::optional<Amount> JournalParser::amount(const Token& t) {
  try {
    return Amount::parse(t.text);
  } catch (const std::invalid_argument& e) {
    error(span(t), std::string(e.what()) + " '" + std::string(t.text) + "'");
  }
  return std::nullopt;
}

std::optional<AccountPath> JournalParser::path(const Token& t) {
  auto p = AccountPath::try_parse(t.text);
  if (!p) error(span(t), "invalid account path '" + std::string(t.text) + "'");
  return p;
}

std::optional<Date> JournalParser::date(const Token& t) {
  auto d = parse_date(t.text);
  if (!d) error(span(t), "invalid date '" + std::string(t.text) + "' (expected YYYY-MM-DD)");
  return d;
}

void JournalParser::check_references() {
  std::set<AccountPath> known = declared_;
  for (const auto& directive : journal_.schedules()) {
    for (auto& p : directive.to_schedule().generated_accounts()) known.insert(std::move(p));
  }
  for (const auto& [account, where] : references_) {
    if (known.count(account) != 0) continue;
    if (options_.strict) {
      diagnostics_.push_back(
          {ParseDiagnostic::Severity::error, "undeclared account '" + account.str() + "'", where});
    } else {
      known.insert(account);
      journal_.declare(account);
    }
  }
}

}  // namespace

bool ParseResult::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const ParseDiagnostic& d) { return d.severity == ParseDiagnostic::Severity::error; });
}

std::string format(const ParseDiagnostic& diagnostic) {
  const char* level = diagnostic.severity == ParseDiagnostic::Severity::error ? "error" : "warning";
  return to_string(diagnostic.span) + ": " + level + ": " + diagnostic.message;
}

ParseResult parse_journal(std::string_view text, const ParseOptions& options) {
  return JournalParser(text, options).run();
}

std::string serialize_journal(const Journal& journal) {
  std::vector<std::string> sections;
  if (journal.basis()) sections.push_back("basis " + journal.basis()->to_string() + "\n");
  if (!journal.accounts().empty()) {
    std::string s;
    for (const auto& p : journal.accounts()) s += "account " + p.str() + "\n";
    sections.push_back(std::move(s));
  }
  if (!journal.schedules().empty()) {
    std::string s;
    for (const auto& d : journal.schedules()) {
      s += "schedule " + d.source.str() + " " + d.counterpart.str() + " " + d.total.to_string() + " over " +
           std::to_string(d.periods) + " yearly from " + to_string(d.start) + " mode " +
           (d.mode == ScheduleMode::direct ? "direct" : "contra") + "\n";
    }
    sections.push_back(std::move(s));
  }
  for (const auto& tx : journal.transactions()) {
    std::string s = to_string(tx.date) + " \"" + escape_description(tx.description) + "\"\n";
    for (const auto& p : tx.postings) {
      const bool has_debit = !p.entry.debit.is_zero();
      const bool has_credit = !p.entry.credit.is_zero();
      if (has_debit || !has_credit) s += "    " + p.account.str() + " dr " + p.entry.debit.to_string() + "\n";
      if (has_credit) s += "    " + p.account.str() + " cr " + p.entry.credit.to_string() + "\n";
    }
    sections.push_back(std::move(s));
  }
  std::string out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out += "\n";
    out += sections[i];
  }
  return out;
}

FileReport validate_file(std::string_view text, const ParseOptions& options) {
  FileReport report;
  ParseResult parsed = parse_journal(text, options);
  report.diagnostics = std::move(parsed.diagnostics);
  if (!parsed.journal) {
    report.status = FileReport::Status::parse_error;
    const auto errors = std::count_if(report.diagnostics.begin(), report.diagnostics.end(), [](const auto& d) {
      return d.severity == ParseDiagnostic::Severity::error;
    });
    report.summary = "parse failed: " + std::to_string(errors) + " error(s)";
    return report;
  }

  const Journal& journal = *parsed.journal;
  const SourceSpan file_start{options.file_name, 1, 1, 0};
  std::size_t problems = 0;
  const auto fail = [&](const std::optional<SourceSpan>& where, std::string message) {
    ++problems;
    report.diagnostics.push_back({ParseDiagnostic::Severity::error, std::move(message), where.value_or(file_start)});
  };

  std::optional<Ledger> ledger;
  try {
    ledger.emplace(journal.chart());
  } catch (const LedgerError& e) {
    fail(std::nullopt, e.what());
  }

  if (ledger) {
    for (const auto& tx : journal.effective_transactions()) {
      const TransactionCheck check = validate_transaction(tx);
      switch (check.status) {
        case TransactionCheck::Status::ok: break;
        case TransactionCheck::Status::empty: fail(tx.origin, "transaction has no postings"); continue;
        case TransactionCheck::Status::single_posting:
          fail(tx.origin, "transaction has a single posting; double entry needs at least two");
          continue;
        case TransactionCheck::Status::imbalance:
          fail(tx.origin, "transaction does not sum to zero: postings total " + to_string(total(tx)) +
                              ", residual " + check.residual.to_string());
          continue;
      }
      try {
        ledger = post(*ledger, tx);
      } catch (const LedgerError& e) {
        fail(e.where() ? e.where() : tx.origin, e.what());
        continue;
      }
      ++report.transactions;
      if (!is_zero(aggregate_root(*ledger))) {
        fail(tx.origin, "internal inconsistency: chart total " + to_string(aggregate_root(*ledger)) +
                            " is not zero after posting");
      }
    }
  }

  if (problems == 0) {
    report.status = FileReport::Status::ok;
    report.summary = "ok: " + std::to_string(report.transactions) + " transactions, root ≡ 0";
  } else {
    report.status = FileReport::Status::validation_failure;
    report.summary = "invalid: " + std::to_string(problems) + " problem(s)";
  }
  report.journal = std::move(parsed.journal);
  return report;
}

}  // namespace pacioli
