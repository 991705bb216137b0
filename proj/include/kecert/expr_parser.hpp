#pragma once

// Small recursive-descent parser shared by the scalar and polynomial text
// formats.  Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "kecert/error.hpp"
#include "kecert/numfield.hpp"

namespace kecert::detail {

template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;

  ExprParser(std::string_view text, const Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = ops_.add(v, term());
      } else if (accept('-')) {
        v = ops_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = ops_.mul(v, unary());
      } else if (accept('/')) {
        v = ops_.divide(v, unary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return ops_.pow(base, std::stol(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ops_.constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      try {
        return ops_.symbol(name);
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const Ops& ops_;
  std::size_t pos_ = 0;
};

template <class Ops>
typename Ops::Value parse_expression(std::string_view text, const Ops& ops) {
  return ExprParser<Ops>(text, ops).parse();
}

}  // namespace kecert::detail
