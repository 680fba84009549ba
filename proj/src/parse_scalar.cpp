#include "lsa/parse_scalar.hpp"

#include <cctype>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

class Parser {
 public:
  Parser(const std::string& s, int line, int col0) : s_(s), line_(line), col0_(col0) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& m) { throw SyntaxError(m, line_, col0_ + static_cast<int>(p_)); }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        size_t at = p_;
        RatFunc d = unary();
        if (d.is_zero()) {
          p_ = at;
          throw DivisionByZero("division by zero at column " + std::to_string(col0_ + at));
        }
        r /= d;
      } else {
        return r;
      }
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (st == p_) fail("expected integer exponent");
      int k = std::stoi(s_.substr(st, p_ - st));
      if (neg && b.is_zero()) throw DivisionByZero("zero to a negative power");
      return b.pow(neg ? -k : k);
    }
    return b;
  }
  RatFunc atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      return RatFunc(Gaussian(Rational(mpz_class(s_.substr(st, p_ - st)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t st = p_;
      while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
      std::string name = s_.substr(st, p_ - st);
      if (name == "i") return RatFunc(Gaussian::I());
      return RatFunc::var(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  int line_, col0_;
  size_t p_ = 0;
};

}  // namespace

RatFunc parse_scalar(const std::string& text, int line, int col0) { return Parser(text, line, col0).parse(); }

std::string coefficient_str(const RatFunc& c) {
  std::string s = c.str();
  // parenthesize anything with a top-level sign after the first character
  int depth = 0;
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    else if (s[k] == ')') --depth;
    else if (depth == 0 && k > 0 && (s[k] == '+' || s[k] == '-')) return "(" + s + ")";
  }
  return s;
}

}  // namespace lsa
