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

#include "hho/expr.hpp"

#include <cctype>

#include "hho/error.hpp"

namespace hho {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names, const std::map<std::string, Rational>& constants)
      : text_(text), names_(names), constants_(constants) {}

  MultiPoly run() {
    MultiPoly p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly sum(names_.size());
    bool negative = accept('-');
    if (!negative) accept('+');
    for (;;) {
      MultiPoly t = term();
      if (negative) {
        sum -= t;
      } else {
        sum += t;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return sum;
      }
    }
  }

  MultiPoly term() {
    MultiPoly p = power();
    while (accept('*')) p *= power();
    return p;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (accept('/')) {
        skip();
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        value /= Rational(den);
      }
      return MultiPoly::constant(names_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return MultiPoly::variable(names_.size(), i);
      }
      const auto it = constants_.find(name);
      if (it != constants_.end()) return MultiPoly::constant(names_.size(), it->second);
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  const std::map<std::string, Rational>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names,
                           const std::map<std::string, Rational>& constants) {
  return Parser(text, names, constants).run();
}

}  // namespace hho
