#include <cctype>
#include <string>

#include "affbraid/cyclotomic.hpp"
#include "affbraid/error.hpp"

namespace affb {

namespace {

std::string describe(std::size_t pos, const std::vector<std::string>& expected, const std::string& text) {
  std::string msg = "at position " + std::to_string(pos) + " in '" + text + "', expected one of {";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += ", ";
    msg += expected[i];
  }
  return msg + "}";
}

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := atom ('^' int)?
// atom   := rational | 'z' INT | '(' expr ')' | '-' factor
class Parser {
 public:
  explicit Parser(std::string_view t) : text_(t) {}

  Cyclotomic run() {
    Cyclotomic v = expr();
    skip();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(pos_, std::move(expected), std::string(text_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Cyclotomic expr() {
    Cyclotomic v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Cyclotomic term() {
    Cyclotomic v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Cyclotomic d = factor();
        if (d.is_zero()) {
          pos_ = at;
          throw ParseError(at, {"nonzero divisor"}, std::string(text_));
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Cyclotomic factor() {
    Cyclotomic v = atom();
    if (eat('^')) {
      bool neg = eat('-');
      std::string e = digits();
      if (e.empty()) fail({"integer exponent"});
      long long k = std::stoll(e);
      if (neg && v.is_zero()) fail({"nonzero base for negative exponent"});
      v = v.pow(neg ? -k : k);
    }
    return v;
  }

  Cyclotomic atom() {
    skip();
    if (pos_ >= text_.size()) fail({"integer", "'z'", "'('", "'-'"});
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Cyclotomic v = expr();
      if (!eat(')')) fail({"')'"});
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'z') {
      ++pos_;
      std::string n = digits();
      if (n.empty()) fail({"conductor digits after 'z'"});
      int N = std::stoi(n);
      if (N < 1) fail({"positive conductor"});
      return Cyclotomic::zeta(N, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::size_t save = pos_;
      if (eat('/')) {
        std::string den = digits();
        if (!den.empty()) {
          if (den.find_first_not_of('0') == std::string::npos) {
            pos_ -= den.size();
            fail({"nonzero denominator"});
          }
          return Cyclotomic(Rational::parse(num + "/" + den));
        }
        pos_ = save;  // '/' begins a term-level division
      }
      return Cyclotomic(Rational::parse(num));
    }
    fail({"integer", "'z'", "'('", "'-'"});
  }
};

}  // namespace

ParseError::ParseError(std::size_t pos, std::vector<std::string> expected, const std::string& text)
    : Error(Errc::ParseError, describe(pos, expected, text)), pos_(pos), expected_(std::move(expected)) {}

Cyclotomic parse_cyclo(std::string_view text) { return Parser(text).run(); }

}  // namespace affb
