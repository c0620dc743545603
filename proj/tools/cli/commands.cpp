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

#include "cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "pacioli/error.hpp"
#include "pacioli/journal.hpp"
#include "pacioli/parser.hpp"

namespace pacioli::cli {
namespace {

struct Row {
  std::string label;
  std::string debit;
  std::string credit;
  std::string note;
};

// Width in code points, so "≡" counts once.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void pad_right(std::ostream& out, const std::string& s, std::size_t width) {
  out << s << std::string(width - std::min(width, display_width(s)), ' ');
}

void pad_left(std::ostream& out, const std::string& s, std::size_t width) {
  out << std::string(width - std::min(width, display_width(s)), ' ') << s;
}

void print_table(std::ostream& out, const std::vector<Row>& body, const Row& footer) {
  const Row head{"account", "debit", "credit", ""};
  std::size_t w0 = 0;
  std::size_t w1 = 0;
  std::size_t w2 = 0;
  for (const Row* r : {&head, &footer}) {
    w0 = std::max(w0, display_width(r->label));
    w1 = std::max(w1, display_width(r->debit));
    w2 = std::max(w2, display_width(r->credit));
  }
  for (const auto& r : body) {
    w0 = std::max(w0, display_width(r.label));
    w1 = std::max(w1, display_width(r.debit));
    w2 = std::max(w2, display_width(r.credit));
  }
  const auto line = [&](const Row& r) {
    std::ostringstream text;
    pad_right(text, r.label, w0);
    text << "  ";
    pad_left(text, r.debit, w1);
    text << "  ";
    pad_left(text, r.credit, w2);
    if (!r.note.empty()) text << "  " << r.note;
    std::string s = text.str();
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << '\n';
  };
  line(head);
  for (const auto& r : body) line(r);
  out << std::string(w0 + w1 + w2 + 4, '-') << '\n';
  line(footer);
}

Row value_row(std::string label, const TAccount& reduced, const RenderOptions& render) {
  if (is_zero(reduced)) return {std::move(label), render_cell(Amount(), render), render_cell(Amount(), render), ""};
  const bool debit = !reduced.debit.is_zero();
  return {std::move(label), debit ? render_cell(reduced.debit, render) : "",
          debit ? "" : render_cell(reduced.credit, render), ""};
}

// Chart in tree order. A node is shown when it, or any leaf below it, has a
// non-zero reduced balance (or always, with show_zero).
std::vector<Row> tree_rows(const Ledger& ledger, const RenderOptions& render) {
  std::vector<Row> rows;
  const Chart& chart = ledger.chart();
  const auto visible = [&](const AccountPath& node) {
    if (render.show_zero) return true;
    const auto leaves = chart.leaves_under(node);
    return std::any_of(leaves.begin(), leaves.end(),
                       [&](const AccountPath& leaf) { return !is_zero(ledger.balances().at(leaf)); });
  };
  const auto walk = [&](const auto& self, const AccountPath& node) -> void {
    if (!visible(node)) return;
    const std::string indent(2 * (node.depth() - 1), ' ');
    rows.push_back(value_row(indent + node.name(), reduce(aggregate(ledger, node)), render));
    for (const auto& child : chart.children(node)) self(self, child);
  };
  for (const auto& root : chart.roots()) walk(walk, root);
  return rows;
}

std::optional<Journal> load(const SourceFile& file, const CommandOptions& options, std::ostream& err, int& code) {
  FileReport report = validate_file(file.text, ParseOptions{file.name, !options.loose});
  for (const auto& d : report.diagnostics) err << format(d) << '\n';
  switch (report.status) {
    case FileReport::Status::ok: code = kOk; return std::move(report.journal);
    case FileReport::Status::validation_failure: code = kValidationFailure; break;
    case FileReport::Status::parse_error: code = kParseError; break;
  }
  err << report.summary << '\n';
  return std::nullopt;
}

// 1/basis in percent mode, nullopt in raw mode. Throws missing_basis.
std::optional<Amount> normalizer(const Journal& journal, const RenderOptions& render) {
  if (render.basis_mode == RenderOptions::BasisMode::raw) return std::nullopt;
  if (!journal.basis()) {
    throw LedgerError(ErrorKind::missing_basis, "percent mode needs a 'basis' directive in the journal");
  }
  return Amount(1) / *journal.basis();
}

std::string basis_note(const Journal& journal, const RenderOptions& render) {
  if (render.basis_mode == RenderOptions::BasisMode::raw) return "";
  return ", percent of basis " + render_exact(*journal.basis());
}

std::optional<Date> last_date(const std::vector<Transaction>& txs) {
  if (txs.empty()) return std::nullopt;
  return txs.back().date;
}

Date previous_day(Date d) { return Date{std::chrono::sys_days{d} - std::chrono::days{1}}; }

// Runs `body` with the journal loaded, translating ledger errors into exit
// code 1.
template <typename Body>
int with_journal(const SourceFile& file, const CommandOptions& options, std::ostream& err, Body body) {
  int code = kOk;
  auto journal = load(file, options, err, code);
  if (!journal) return code;
  try {
    return body(*journal);
  } catch (const LedgerError& e) {
    err << file.name << ": error: " << e.what() << '\n';
    return kValidationFailure;
  }
}

}  // namespace

int cmd_check(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  const FileReport report = validate_file(file.text, ParseOptions{file.name, !options.loose});
  for (const auto& d : report.diagnostics) err << format(d) << '\n';
  switch (report.status) {
    case FileReport::Status::ok: out << report.summary << '\n'; return kOk;
    case FileReport::Status::validation_failure: err << report.summary << '\n'; return kValidationFailure;
    case FileReport::Status::parse_error: break;
  }
  err << report.summary << '\n';
  return kParseError;
}

int cmd_balance(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return with_journal(file, options, err, [&](const Journal& journal) {
    const auto scale_by = normalizer(journal, options.render);
    const auto txs = journal.effective_transactions();
    const auto cutoff = options.at ? options.at : last_date(txs);

    Ledger ledger = cutoff ? stock_at(journal, *cutoff) : Ledger(journal.chart());
    if (scale_by) ledger = ledger.scaled(*scale_by);

    out << "balance " << (cutoff ? "at " + to_string(*cutoff) : std::string("of empty journal"))
        << basis_note(journal, options.render) << '\n';
    const TAccount root = aggregate_root(ledger);
    Row footer{"root", render_cell(root.debit, options.render), render_cell(root.credit, options.render),
               is_zero(root) ? "≡ 0" : "≠ 0"};
    print_table(out, tree_rows(ledger, options.render), footer);
    return is_zero(root) ? kOk : kValidationFailure;
  });
}

int cmd_flows(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return with_journal(file, options, err, [&](const Journal& journal) {
    const auto scale_by = normalizer(journal, options.render);
    const auto txs = journal.effective_transactions();
    std::optional<Date> from = options.from;
    std::optional<Date> to = options.to;
    if (!from && !txs.empty()) from = previous_day(txs.front().date);
    if (!to) to = txs.empty() ? from : std::optional<Date>(txs.back().date);
    if (!from) from = to;

    Ledger flows = (from && to) ? flow_between(journal, *from, *to) : Ledger(journal.chart());
    if (scale_by) flows = flows.scaled(*scale_by);
    const TAccount total = aggregate_root(flows);

    out << "flows";
    if (from && to) out << " over (" << to_string(*from) << ", " << to_string(*to) << "]";
    out << basis_note(journal, options.render) << '\n';
    Row footer{"total", render_cell(total.debit, options.render), render_cell(total.credit, options.render),
               is_zero(total) ? "≡ 0" : "≠ 0"};
    print_table(out, tree_rows(flows.reduced(), options.render), footer);
    return is_zero(total) ? kOk : kValidationFailure;
  });
}

int cmd_equation(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return with_journal(file, options, err, [&](const Journal& journal) {
    const auto scale_by = normalizer(journal, options.render);
    const auto txs = journal.effective_transactions();
    const auto cutoff = options.at ? options.at : last_date(txs);
    Ledger ledger = cutoff ? stock_at(journal, *cutoff) : Ledger(journal.chart());
    if (scale_by) ledger = ledger.scaled(*scale_by);

    std::string terms;
    TAccount sum;
    for (const auto& leaf : ledger.chart().leaves()) {
      const TAccount& t = ledger.balances().at(leaf);
      if (is_zero(t) && !options.render.show_zero) continue;
      if (!terms.empty()) terms += " + ";
      terms += render_pair(t, options.render) + "_" + leaf.str();
      sum = sum + t;
    }
    out << "0 = " << (terms.empty() ? render_pair(TAccount{}, options.render) : terms) << '\n';
    out << "sum = " << render_pair(sum, options.render) << (is_zero(sum) ? " ≡ 0" : " ≠ 0") << '\n';
    return is_zero(sum) ? kOk : kValidationFailure;
  });
}

int cmd_schedule(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return with_journal(file, options, err, [&](const Journal& journal) {
    const auto scale_by = normalizer(journal, options.render);
    bool first = true;
    for (const auto& directive : journal.schedules()) {
      const MatchingSchedule schedule = directive.to_schedule();
      if (!first) out << '\n';
      first = false;
      out << "; " << schedule.source().str() << " matched against " << schedule.counterpart_prefix().str() << "1.."
          << schedule.periods().size() << ", total "
          << render_plain(scale_by ? schedule.total() * *scale_by : schedule.total(), options.render) << ", "
          << (schedule.mode() == ScheduleMode::direct ? "direct" : "contra") << " mode\n";
      bool first_tx = true;
      for (const auto& tx : emit_schedule_transactions(schedule)) {
        if (!first_tx) out << '\n';
        first_tx = false;
        out << to_string(tx.date) << " \"" << tx.description << "\"\n";
        for (const auto& p : tx.postings) {
          const bool debit = !p.entry.debit.is_zero();
          Amount value = debit ? p.entry.debit : p.entry.credit;
          if (scale_by) value = value * *scale_by;
          out << "    " << p.account.str() << (debit ? " dr " : " cr ") << render_plain(value, options.render) << '\n';
        }
      }
    }
    return kOk;
  });
}

}  // namespace pacioli::cli
