#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "zinc/error.hpp"
#include "zinc/expr.hpp"

namespace zinc {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parse() {
    RingExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"x", "end of input"});
    return e;
  }

 private:
  // expr := term { "x" term }
  RingExpr expr() {
    RingExpr first = term();
    std::vector<RingExpr> factors;
    while (peek_product_sign()) {
      ++pos_;
      if (factors.empty()) factors.push_back(std::move(first));
      factors.push_back(term());
    }
    if (factors.empty()) return first;
    return RingExpr::Product(std::move(factors));
  }

  RingExpr term() {
    skip_ws();
    if (accept("(")) {
      RingExpr inner = expr();
      expect(")");
      return inner;
    }
    const std::size_t start = pos_;
    const std::string word = identifier();
    if (word == "Z") {
      expect("(");
      const auto n = nat();
      expect(")");
      return RingExpr::Zn(n);
    }
    if (word == "GF") {
      expect("(");
      const auto q = nat();
      expect(")");
      return RingExpr::GF(q);
    }
    if (word == "M" || word == "T") {
      expect("(");
      const auto n = nat();
      expect(",");
      RingExpr base = expr();
      expect(")");
      return word == "M" ? RingExpr::Matrix(n, std::move(base)) : RingExpr::UpperTriangular(n, std::move(base));
    }
    if (word == "H" || word == "TrivExt" || word == "Morita") {
      expect("(");
      RingExpr base = expr();
      expect(")");
      if (word == "H") return RingExpr::Quaternion(std::move(base));
      if (word == "TrivExt") return RingExpr::TrivialExtension(std::move(base));
      return RingExpr::Morita(std::move(base));
    }
    if (word == "PolyQuot") {
      expect("(");
      RingExpr base = expr();
      expect(",");
      const auto n = nat();
      expect(")");
      return RingExpr::PolyQuot(std::move(base), n);
    }
    pos_ = start;
    fail({"Z(", "GF(", "M(", "T(", "H(", "TrivExt(", "PolyQuot(", "Morita(", "("});
  }

  std::string identifier() {
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) word += text_[pos_++];
    return word;
  }

  std::uint64_t nat() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail({"natural number below 2^64"});
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail({"natural number"});
    return value;
  }

  // No ring constructor starts with a lower-case letter, so 'x' is always the product sign.
  bool peek_product_sign() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == 'x';
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({std::string(token)});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at byte " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += "'" + expected[i] + "'";
    }
    if (pos_ < text_.size())
      msg += ", found '" + std::string(1, text_[pos_]) + "'";
    else
      msg += ", found end of input";
    throw ParseError(msg, pos_, std::move(expected));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse_expr(std::string_view text) {
  RingExpr e = Parser(text).parse();
  validate(e);
  return e;
}

}  // namespace zinc
