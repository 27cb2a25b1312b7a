#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dehn {

// Thrown by every text parser in the library; carries the offset of the
// offending token so front ends can point at it.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

namespace detail {

// Cursor over a string view. Whitespace is skipped explicitly by callers,
// which keeps grammars whitespace-insensitive inside bracketed lists.
class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool try_eat_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect_end() {
    skip_ws();
    if (!done()) fail("expected end of input");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string got;
    if (done()) {
      got = "end of input";
    } else {
      std::size_t len = 0;
      while (len < 12 && pos_ + len < text_.size() &&
             !std::isspace(static_cast<unsigned char>(text_[pos_ + len])))
        ++len;
      if (len == 0) len = 1;
      got = "'" + std::string(text_.substr(pos_, len)) + "'";
    }
    throw ParseError(msg + ", got " + got, pos_);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail
}  // namespace dehn
