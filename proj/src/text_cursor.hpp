#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "dol/error.hpp"

namespace dol::detail {

/// Character cursor tracking line and code-point column.
class Cursor {
 public:
  explicit Cursor(std::string_view text, SourcePos start = {}) : text_(text), pos_(start) {}

  bool eof() const noexcept { return offset_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const noexcept {
    return text_.substr(offset_).starts_with(s);
  }
  std::size_t offset() const noexcept { return offset_; }
  SourcePos position() const noexcept { return pos_; }
  std::string_view text() const noexcept { return text_; }

  char advance() {
    const char c = text_[offset_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos_.column;
    }
    return c;
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !eof(); ++i) advance();
  }

  /// Skips whitespace and `%` comments to end of line. A `%prefix(` opener is
  /// not a comment.
  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%' && !starts_with("%prefix(")) {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const {
    throw DolError(kind, message, pos_);
  }
  [[noreturn]] void fail_at(ErrorKind kind, const std::string& message, SourcePos at) const {
    throw DolError(kind, message, at);
  }

 private:
  std::string_view text_;
  std::size_t offset_ = 0;
  SourcePos pos_;
};

/// Throws SyntaxError at the first malformed UTF-8 sequence.
void validate_utf8(std::string_view text, SourcePos start = {});

std::string describe_char(char c);

}  // namespace dol::detail
