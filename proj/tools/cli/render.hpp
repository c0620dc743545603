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

#ifndef PACIOLI_CLI_RENDER_HPP
#define PACIOLI_CLI_RENDER_HPP

#include <optional>
#include <string>

#include "pacioli/amount.hpp"
#include "pacioli/taccount.hpp"

namespace pacioli::cli {

struct RenderOptions {
  enum class Form { rational, decimal };
  enum class BasisMode { raw, percent_of_basis };

  Form form = Form::rational;
  unsigned places = 2;
  BasisMode basis_mode = BasisMode::raw;
  bool show_zero = false;

  /// Decimal places must be within [0, 12]. Throws std::invalid_argument.
  static RenderOptions decimal(unsigned places);
};

/// Report cell for a value that has already been normalized (when in
/// percent mode): "2/5", "0.40", or, in percent mode, "40%" / "40.00%".
std::string render_cell(const Amount& value, const RenderOptions& options);

/// The value in its own unit, with no percent scaling: "2/5" or "0.40".
std::string render_plain(const Amount& value, const RenderOptions& options);

/// "(1, 0)" using render_plain for each component.
std::string render_pair(const TAccount& value, const RenderOptions& options);

/// Finite decimal expansion when one exists ("1234567.89"), otherwise the
/// reduced rational.
std::string render_exact(const Amount& value);

}  // namespace pacioli::cli

#endif  // PACIOLI_CLI_RENDER_HPP
