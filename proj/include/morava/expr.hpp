#pragma once

// Expression language for elements of E_0:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-'? atom ('^' nat)?
//   atom   := nat | 'h' | 'c' | 'i' | '(' expr ')'
//
// Whitespace is ignored between tokens. There is no division.

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morava/series.hpp"

namespace morava::expr {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected)
      : std::runtime_error(build_message(offset, expected)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string build_message(std::size_t offset, const std::vector<std::string>& expected) {
    std::string msg = "parse error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k) msg += k + 1 == expected.size() ? " or " : ", ";
      msg += expected[k];
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct Node {
  enum class Kind { kNat, kH, kC, kI, kAdd, kSub, kMul, kNeg, kPow };

  Kind kind;
  std::string literal;         // kNat
  std::uint64_t exponent = 0;  // kPow
  std::vector<Node> children;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return e;
  }

 private:
  Node parse_expr() {
    Node lhs = parse_term();
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') return lhs;
      const auto kind = peek() == '+' ? Node::Kind::kAdd : Node::Kind::kSub;
      ++pos_;
      Node rhs = parse_term();
      lhs = Node{kind, {}, 0, {std::move(lhs), std::move(rhs)}};
    }
  }

  Node parse_term() {
    Node lhs = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return lhs;
      ++pos_;
      Node rhs = parse_factor();
      lhs = Node{Node::Kind::kMul, {}, 0, {std::move(lhs), std::move(rhs)}};
    }
  }

  Node parse_factor() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Node base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail({"natural number"});
      std::uint64_t e = 0;
      for (char ch : digits) {
        const auto d = static_cast<std::uint64_t>(ch - '0');
        if (e > (std::numeric_limits<std::uint64_t>::max() - d) / 10) throw ParseError(start, {"exponent below 2^64"});
        e = e * 10 + d;
      }
      base = Node{Node::Kind::kPow, {}, e, {std::move(base)}};
    }
    if (negate) return Node{Node::Kind::kNeg, {}, 0, {std::move(base)}};
    return base;
  }

  Node parse_atom() {
    skip_ws();
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return Node{Node::Kind::kNat, read_digits(), 0, {}};
    if (ch == 'h' || ch == 'c' || ch == 'i') {
      ++pos_;
      return Node{ch == 'h' ? Node::Kind::kH : ch == 'c' ? Node::Kind::kC : Node::Kind::kI, {}, 0, {}};
    }
    if (ch == '(') {
      ++pos_;
      Node inner = parse_expr();
      skip_ws();
      if (peek() != ')') fail({"')'"});
      ++pos_;
      return inner;
    }
    fail({"natural number", "'h'", "'c'", "'i'", "'('"});
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(std::vector<std::string> expected) const { throw ParseError(pos_, std::move(expected)); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Node parse_element(std::string_view text) { return Parser(text).parse(); }

/// Bottom-up evaluation; c evaluates to the square root of h - 1 congruent to i.
inline DeformationElement eval_expr(const Node& e, PrecisionProfile prof) {
  using K = Node::Kind;
  switch (e.kind) {
    case K::kNat:
      return DeformationElement::constant(GaloisInt::from_decimal(e.literal, prof.p_exp), prof);
    case K::kH:
      return DeformationElement::h(prof);
    case K::kC:
      return make_c(prof);
    case K::kI:
      return DeformationElement::i(prof);
    case K::kAdd:
      return eval_expr(e.children[0], prof) + eval_expr(e.children[1], prof);
    case K::kSub:
      return eval_expr(e.children[0], prof) - eval_expr(e.children[1], prof);
    case K::kMul:
      return eval_expr(e.children[0], prof) * eval_expr(e.children[1], prof);
    case K::kNeg:
      return -eval_expr(e.children[0], prof);
    case K::kPow:
      return eval_expr(e.children[0], prof).pow(e.exponent);
  }
  throw std::logic_error("unknown expression node");
}

inline DeformationElement eval_string(std::string_view text, PrecisionProfile prof) {
  return eval_expr(parse_element(text), prof);
}

}  // namespace morava::expr
