#include "hopftwist/parse.hpp"

#include <cctype>

namespace hopftwist {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingSpec& r) : s_(text), r_(r) {}

  FieldElem run() {
    FieldElem v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "cannot parse \"" + s_ + "\" at " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  FieldElem power() {
    FieldElem base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const long e = std::stol(s_.substr(start, pos_ - start));
    if (neg && base.is_zero()) fail("zero to a negative power");
    return base.pow(neg ? -e : e);
  }

  FieldElem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return r_.from_rational(Rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (r_.degree() > 1 && name == r_.field()->symbol()) return r_.generator();
      auto it = r_.constants().find(name);
      if (it != r_.constants().end()) return it->second;
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const RingSpec& r_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_element(const std::string& text, const RingSpec& r) { return Parser(text, r).run(); }

}  // namespace hopftwist
