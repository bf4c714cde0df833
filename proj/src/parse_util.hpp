#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "unip/errors.hpp"

namespace unip::detail {

// Tiny recursive-descent helper for the bracketed label grammars.
class Cursor {
 public:
  Cursor(std::string_view text, const char* what) : s_(text), what_(what) {}

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected non-negative integer");
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc()) fail("integer out of range");
    return value;
  }

  // `[a,b,...]` or `[]`
  std::vector<int> int_list() {
    std::vector<int> out;
    expect('[');
    if (consume(']')) return out;
    out.push_back(integer());
    while (consume(',')) out.push_back(integer());
    expect(']');
    return out;
  }

  void finish() {
    if (peek() != '\0') fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(std::string(what_) + " '" + std::string(s_) + "': " + msg);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  const char* what_;
  size_t pos_ = 0;
};

}  // namespace unip::detail
