// Copyright 2026 The qdyn Authors.
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

#include "qdyn_cli/surd_parser.hpp"

#include <cctype>
#include <string>

#include "qdyn/errors.hpp"

namespace qdyn::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SurdSum parse() {
    SurdSum v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse surd expression \"" + std::string(text_) + "\": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  SurdSum expr() {
    SurdSum v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  SurdSum term() {
    SurdSum v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = divide(v, unary());
      } else {
        return v;
      }
    }
  }

  SurdSum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  SurdSum primary() {
    skip_space();
    if (accept('(')) {
      SurdSum v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const SurdSum arg = expr();
      expect(')');
      if (!arg.is_rational()) fail("sqrt needs a rational argument");
      if (arg.sign() < 0) fail("sqrt of a negative number");
      return SurdSum::sqrt(arg.rational_part());
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
    return SurdSum(BigRational::parse(text_.substr(start, pos_ - start)));
  }

  SurdSum divide(const SurdSum& a, const SurdSum& b) const {
    if (b.is_zero()) fail("division by zero");
    if (b.terms().size() != 1) fail("divisor must be a single term q*sqrt(m)");
    const auto& [m, q] = *b.terms().begin();
    // 1 / (q sqrt(m)) = sqrt(m) / (q m)
    return a * SurdSum::term(BigRational(1) / (q * BigRational(m)), m);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurdSum parse_surd(std::string_view text) { return Parser(text).parse(); }

}  // namespace qdyn::cli
