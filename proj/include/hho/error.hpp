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

#include <stdexcept>
#include <string>

namespace hho {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings of different arity, or shapes disagree.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (singular input, degenerate operator,
/// non-skew data, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a zero denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hho
