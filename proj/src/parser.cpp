#include "snk/parser.hpp"

#include <cctype>
#include <map>

#include "snk/errors.hpp"

namespace snk {

namespace {

struct Token {
  enum Kind { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;   // Ident
  Rational value;     // Num
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) return {Token::End, "", 0, start};
    char c = s_[i_];
    if (std::isdigit((unsigned char)c)) {
      std::string num;
      while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_]))
        num += s_[i_++];
      // A '/' directly attached to digits is a rational literal.
      if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size() &&
          std::isdigit((unsigned char)s_[i_ + 1])) {
        ++i_;
        std::string den;
        while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_]))
          den += s_[i_++];
        if (den == "0") throw InputError(err(start, "zero denominator"));
        return {Token::Num, "", Rational(mpq_class(num + "/" + den)), start};
      }
      return {Token::Num, "", Rational::from_decimal_string(num), start};
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string id;
      while (i_ < s_.size() &&
             (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_'))
        id += s_[i_++];
      return {Token::Ident, id, 0, start};
    }
    ++i_;
    switch (c) {
      case '+': return {Token::Plus, "", 0, start};
      case '-': return {Token::Minus, "", 0, start};
      case '*': return {Token::Star, "", 0, start};
      case '^': return {Token::Caret, "", 0, start};
      case '(': return {Token::LParen, "", 0, start};
      case ')': return {Token::RParen, "", 0, start};
      default:
        throw InputError(err(start, std::string("unexpected character '") +
                                        c + "'"));
    }
  }

  std::string err(size_t pos, const std::string& what) const {
    return "polynomial syntax error at column " + std::to_string(pos + 1) +
           ": " + what + " in \"" + s_ + "\"";
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& s, const std::vector<std::string>& vars)
      : lex_(s), src_(s) {
    for (size_t i = 0; i < vars.size(); ++i) var_index_[vars[i]] = (int)i;
    nvars_ = (int)vars.size();
    advance();
  }

  Polynomial parse() {
    Polynomial p = expr();
    if (tok_.kind != Token::End)
      throw InputError(lex_.err(tok_.pos, "trailing input"));
    return p;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  Polynomial expr() {
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      neg = true;
      advance();
    }
    Polynomial p = term();
    if (neg) p = -p;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool sub = tok_.kind == Token::Minus;
      advance();
      Polynomial q = term();
      p = sub ? p - q : p + q;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (tok_.kind == Token::Star) {
      advance();
      p = p * factor();
    }
    return p;
  }

  Polynomial factor() {
    Polynomial p = base();
    if (tok_.kind == Token::Caret) {
      advance();
      if (tok_.kind != Token::Num || !(tok_.value.den() == 1) ||
          tok_.value.sign() < 0)
        throw InputError(lex_.err(tok_.pos, "exponent must be a non-negative integer"));
      if (!tok_.value.num().fits_sint_p())
        throw InputError(lex_.err(tok_.pos, "exponent too large"));
      int e = (int)tok_.value.num().get_si();
      advance();
      p = p.pow(e);
    }
    return p;
  }

  Polynomial base() {
    switch (tok_.kind) {
      case Token::Num: {
        Polynomial p = Polynomial::constant(nvars_, tok_.value);
        advance();
        return p;
      }
      case Token::Ident: {
        auto it = var_index_.find(tok_.text);
        if (it == var_index_.end())
          throw InputError(lex_.err(tok_.pos,
                                    "undeclared variable '" + tok_.text + "'"));
        Polynomial p = Polynomial::variable(nvars_, it->second);
        advance();
        return p;
      }
      case Token::LParen: {
        advance();
        Polynomial p = expr();
        if (tok_.kind != Token::RParen)
          throw InputError(lex_.err(tok_.pos, "expected ')'"));
        advance();
        return p;
      }
      default:
        throw InputError(lex_.err(tok_.pos, "expected a number, variable or '('"));
    }
  }

  Lexer lex_;
  const std::string& src_;
  Token tok_;
  std::map<std::string, int> var_index_;
  int nvars_;
};

std::string print_term_abs(const Term& t, const std::vector<std::string>& vars) {
  Rational c = t.c.abs();
  std::string s;
  bool have_coeff = !c.is_one() || t.m.is_one();
  if (have_coeff) s = c.str();
  for (size_t i = 0; i < vars.size(); ++i) {
    if (t.m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (t.m.e[i] > 1) s += "^" + std::to_string(t.m.e[i]);
  }
  return s;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

std::string print_polynomial(const Polynomial& p,
                             const std::vector<std::string>& vars) {
  if ((int)vars.size() != p.nvars())
    throw InputError("print: variable list size mismatch");
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    if (first) {
      if (t.c.sign() < 0) s += "-";
      s += print_term_abs(t, vars);
      first = false;
    } else {
      s += t.c.sign() < 0 ? " - " : " + ";
      s += print_term_abs(t, vars);
    }
  }
  return s;
}

}  // namespace snk
