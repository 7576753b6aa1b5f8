#include <cctype>

#include "gzkit/errors.hpp"
#include "gzkit/expr.hpp"

namespace gzkit {

namespace {

class Parser {
public:
  Parser(const std::string& text, const Composition* lambda) : s_(text), lambda_(lambda) {}

  RationalFunction run() {
    RationalFunction r = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, p_); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  bool accept(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected an integer");
    return s_.substr(start, p_ - start);
  }

  int small_integer() {
    std::size_t at = p_;
    std::string d = digits();
    if (d.size() > 6) {
      p_ = at;
      fail("index too large");
    }
    return std::stoi(d);
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+')) r = r + term();
      else if (accept('-')) r = r - term();
      else return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (accept('*')) {
        r = r * unary();
      } else if (accept('/')) {
        std::size_t at = p_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          p_ = at;
          throw DivisionByZero("division by zero at offset " + std::to_string(at));
        }
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    std::size_t at = p_;
    std::string d = digits();
    if (d.size() > 4) {
      p_ = at;
      fail("exponent too large");
    }
    int n = std::stoi(d);
    RationalFunction r = RationalFunction::from_coprime(base.num().pow(n), base.den().pow(n));
    if (negative) {
      if (r.is_zero()) throw DivisionByZero("negative power of zero at offset " + std::to_string(at));
      r = r.inverse();
    }
    return r;
  }

  RationalFunction atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      RationalFunction r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(digits()));
    if (c == 'x') {
      std::size_t at = p_++;
      expect('[');
      int i = small_integer();
      expect(',');
      int j = small_integer();
      expect(']');
      if (i < 1 || j < 1 || i > 255 || j > 127 || (lambda_ && !lambda_->contains(Index{i, j})))
        throw NameError("variable x[" + std::to_string(i) + "," + std::to_string(j) + "] at offset " +
                        std::to_string(at) + " is outside the index set");
      return RationalFunction::var(VarId::x(i, j));
    }
    if (c == 'z') {
      std::size_t at = p_++;
      expect('[');
      int t = small_integer();
      expect(']');
      if (t < 1 || t > 32767)
        throw NameError("parameter z[" + std::to_string(t) + "] at offset " + std::to_string(at) + " is out of range");
      return RationalFunction::var(VarId::param(t));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = p_;
      while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
      throw NameError("unknown name '" + s_.substr(at, p_ - at) + "' at offset " + std::to_string(at));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const Composition* lambda_;
  std::size_t p_ = 0;
};

}  // namespace

RationalFunction parse_expr(const std::string& text) { return Parser(text, nullptr).run(); }

RationalFunction parse_expr(const std::string& text, const Composition& lambda) {
  return Parser(text, &lambda).run();
}

Polynomial parse_polynomial(const std::string& text, const Composition& lambda) {
  RationalFunction r = parse_expr(text, lambda);
  if (!r.is_polynomial()) throw ValidationError("expression is not a polynomial: " + r.render());
  return r.num();
}

}  // namespace gzkit
