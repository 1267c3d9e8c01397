/*
 * Copyright 2026 The hhoforms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hho {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace hho
