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

#ifndef PACIOLI_DATE_HPP
#define PACIOLI_DATE_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace pacioli {

using Date = std::chrono::year_month_day;

/// Strict ISO-8601 calendar date, "YYYY-MM-DD", zero-padded. Rejects
/// impossible dates such as 2023-02-29.
std::optional<Date> parse_date(std::string_view text);

std::string to_string(const Date& date);

/// Calendar-year stepping. A Feb 29 start lands on Feb 28 in common years.
Date add_years(const Date& date, int years);

}  // namespace pacioli

#endif  // PACIOLI_DATE_HPP
