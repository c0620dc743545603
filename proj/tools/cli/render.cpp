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

#include "cli/render.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacioli::cli {

RenderOptions RenderOptions::decimal(unsigned places) {
  if (places > 12) throw std::invalid_argument("decimal places must be between 0 and 12");
  RenderOptions options;
  options.form = Form::decimal;
  options.places = places;
  return options;
}

std::string render_plain(const Amount& value, const RenderOptions& options) {
  return options.form == RenderOptions::Form::decimal ? value.to_decimal(options.places) : value.to_string();
}

std::string render_cell(const Amount& value, const RenderOptions& options) {
  if (options.basis_mode == RenderOptions::BasisMode::raw) return render_plain(value, options);
  return render_plain(value * Amount(100), options) + "%";
}

std::string render_pair(const TAccount& value, const RenderOptions& options) {
  return "(" + render_plain(value.debit, options) + ", " + render_plain(value.credit, options) + ")";
}

std::string render_exact(const Amount& value) {
  // Finite iff the denominator has no prime factors other than 2 and 5.
  mpz_class rest = value.denominator();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2) != 0) {
    rest /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5) != 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return value.to_string();
  return value.to_decimal(std::max(twos, fives));
}

}  // namespace pacioli::cli
