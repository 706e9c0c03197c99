#pragma once

// Hand-written scanner shared by the term and path parsers.

#include <string>
#include <string_view>

#include "pathkit/error.hpp"

namespace pathkit::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t offset() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  /// Next non-blank character, or '\0' at the end.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_ws() const { return pos_ < text_.size() && is_ws(text_[pos_]); }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool eat(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  /// Accepts the UTF-8 lambda sign as well as a backslash.
  bool eat_lambda_sign() { return eat('\\') || eat("\xCE\xBB"); }

  bool at_ident() {
    char c = peek();
    return c >= 'a' && c <= 'z';
  }
  std::string ident() {
    if (!at_ident()) fail("identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_ws();
    std::string found = pos_ >= text_.size() ? "end of input"
                                             : "'" + std::string(text_.substr(pos_, 1)) + "'";
    throw SyntaxError(pos_, expected, found);
  }

  static bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

 private:
  static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace pathkit::detail
