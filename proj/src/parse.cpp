#include "cab/parse.hpp"

#include <cctype>

namespace cab {

namespace {

class Parser {
public:
  Parser(const std::string& text, RingPtr ring, MonomialOrder order)
      : s_(text), ring_(std::move(ring)), order_(std::move(order)) {}

  Polynomial run() {
    skip_ws();
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw parse_error("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  // expr := term (('+'|'-') term)*
  Polynomial expr() {
    Polynomial p = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+'))
        p = p + term();
      else if (accept('-'))
        p = p - term();
      else
        return p;
    }
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial p = factor();
    while (accept('*'))
      p = p * factor();
    return p;
  }

  // factor := atom ('^' uint)?
  Polynomial factor() {
    Polynomial p = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      mpz_class e = integer();
      if (e < 0 || e > 65536)
        throw parse_error("exponent out of range", at);
      p = p.pow(static_cast<unsigned>(e.get_ui()));
    }
    return p;
  }

  // atom := '(' expr ')' | rational | identifier
  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size())
      throw parse_error("unexpected end of input", pos_);
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')'))
        throw parse_error("expected ')'", pos_);
      return p;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        mpz_class den = integer();
        if (den == 0)
          throw parse_error("zero denominator", at);
        mpq_class q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, q, order_);
      }
      return Polynomial::constant(ring_, mpq_class(num), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name.push_back(s_[pos_++]);
      int idx = ring_->var_index(name);
      if (idx < 0)
        throw parse_error("unknown variable '" + name + "'", at);
      return Polynomial::variable(ring_, idx, 1, order_);
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  mpz_class integer() {
    skip_ws();
    std::size_t at = pos_;
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits.push_back(s_[pos_++]);
    if (digits.empty())
      throw parse_error("expected integer", at);
    return mpz_class(digits);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  MonomialOrder order_;
};

} // namespace

Polynomial parse(const std::string& text, const RingPtr& ring, const MonomialOrder& order) {
  return Parser(text, ring, order).run();
}

} // namespace cab
