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

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "hho/poly.hpp"

namespace hho {

/// Parses a polynomial written with + - * ^, parentheses, integer or p/q
/// literals and identifiers. names[i] denotes variable i of the result;
/// identifiers found in `constants` are replaced by their value. Anything else
/// raises ParseError with the offending column.
MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names,
                           const std::map<std::string, Rational>& constants = {});

}  // namespace hho
