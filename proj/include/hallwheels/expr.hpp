#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/laurent.hpp"

namespace hallwheels {

/// Parses arithmetic expressions such as "c1^2 - 4*c2 - (xi-eta)^2" or
/// "1 - q1^-1*z2/z1" into a LaurentPoly over the named variables.
///
/// Grammar: sums and differences of products; '*' and '/' between factors;
/// '^' with a signed integer exponent; integer literals; parentheses. Division
/// and negative powers are only allowed for single terms (units of the Laurent
/// ring). Names may contain letters, digits, '_' and '\''.
class ExpressionParser {
 public:
  ExpressionParser(std::vector<std::string> names, std::size_t t_rank)
      : names_(std::move(names)), t_rank_(t_rank) {
    if (t_rank_ > names_.size()) throw InvalidArgument("T rank exceeds number of variable names");
  }

  LaurentPoly parse(const std::string& text) {
    text_ = text;
    pos_ = 0;
    LaurentPoly p = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::size_t ts_rank() const { return names_.size() - t_rank_; }
  LaurentPoly constant(const Rational& c) const { return LaurentPoly::constant(c, t_rank_, ts_rank()); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly sum() {
    LaurentPoly acc(t_rank_, ts_rank());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    LaurentPoly t = product();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else return acc;
    }
  }

  LaurentPoly product() {
    LaurentPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        acc *= inverse(power());
      } else {
        return acc;
      }
    }
  }

  LaurentPoly inverse(const LaurentPoly& p) {
    if (p.size() != 1) fail("division by a non-monomial");
    const auto& [e, c] = *p.terms().begin();
    return LaurentPoly::monomial(-e, Rational(1) / c);
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    unsigned long k = std::stoul(text_.substr(start, pos_ - start));
    LaurentPoly r = base.pow(static_cast<unsigned>(k));
    return neg ? inverse(r) : r;
  }

  LaurentPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(BigInt(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return LaurentPoly::variable(i, t_rank_, ts_rank());
      throw InvalidArgument("unknown variable '" + name + "' in '" + text_ + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::vector<std::string> names_;
  std::size_t t_rank_;
  std::string text_;
  std::size_t pos_ = 0;
};

inline LaurentPoly parse_expression(const std::string& text, const std::vector<std::string>& names,
                                    std::size_t t_rank) {
  return ExpressionParser(names, t_rank).parse(text);
}

}  // namespace hallwheels
