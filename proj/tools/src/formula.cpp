#include "formula.hpp"

#include <cctype>
#include <string>

#include "umeb/errors.hpp"

namespace umeb::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Cyclo parse() {
    Cyclo v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  Cyclo expr() {
    Cyclo v = term();
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

  Cyclo term() {
    Cyclo v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  Cyclo unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  Cyclo atom() {
    skip_ws();
    if (accept('(')) {
      Cyclo v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      const long value = std::stol(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      return Cyclo(value);
    }
    if (keyword("sqrt2")) return Cyclo::sqrt2();
    if (keyword("sqrt3")) return Cyclo::sqrt3();
    if (keyword("sqrt6")) return Cyclo::sqrt6();
    if (keyword("i")) return Cyclo::i();
    fail("expected a number, i, sqrt2, sqrt3, sqrt6 or '('");
  }

  bool keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("formula '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclo eval_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace umeb::cli
