#include "godeaux/parse.hpp"

#include <cctype>

namespace godeaux::algebra {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw UsageError("parse error at offset " + std::to_string(pos) + ": " + why);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;
  const RingPtr& ring;

  Polynomial expr() {
    Polynomial acc = lex.eat('-') ? -term() : term();
    for (;;) {
      char c = lex.peek();
      if (c == '+') {
        lex.take();
        acc = acc + term();
      } else if (c == '-') {
        lex.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex.eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lex.eat('^')) {
      long e = std::stol(lex.digits());
      if (e > 0xffff) lex.fail("exponent too large");
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  Polynomial base() {
    char c = lex.peek();
    if (c == '(') {
      lex.take();
      Polynomial p = expr();
      if (!lex.eat(')')) lex.fail("expected )");
      return p;
    }
    if (c == '-') {
      lex.take();
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lex.digits();
      std::string den = "1";
      if (lex.peek() == '/') {
        lex.take();
        den = lex.digits();
      }
      mpq_class q(num + "/" + den);
      q.canonicalize();
      return Polynomial::constant(ring, Scalar::from_mpq(q, ring->field()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = lex.ident();
      int vi = ring->var_index(name);
      if (vi >= 0) return Polynomial::variable(ring, vi);
      int pi = ring->param_index(name);
      if (pi >= 0) return Polynomial::parameter(ring, pi);
      lex.fail("unknown name " + name);
    }
    lex.fail("unexpected character");
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Parser p{Lexer{text}, ring};
  Polynomial r = p.expr();
  if (p.lex.peek() != '\0') p.lex.fail("trailing input");
  return r;
}

std::vector<Polynomial> parse_list(const RingPtr& ring, const std::string& text) {
  Parser p{Lexer{text}, ring};
  if (!p.lex.eat('[')) p.lex.fail("expected [");
  std::vector<Polynomial> out;
  if (p.lex.eat(']')) {
    if (p.lex.peek() != '\0') p.lex.fail("trailing input");
    return out;
  }
  for (;;) {
    out.push_back(p.expr());
    if (p.lex.eat(']')) break;
    if (!p.lex.eat(',')) p.lex.fail("expected , or ]");
  }
  if (p.lex.peek() != '\0') p.lex.fail("trailing input");
  return out;
}

std::vector<std::vector<Polynomial>> parse_matrix(const RingPtr& ring, const std::string& text) {
  Parser p{Lexer{text}, ring};
  if (!p.lex.eat('[')) p.lex.fail("expected [");
  std::vector<std::vector<Polynomial>> rows;
  for (;;) {
    if (!p.lex.eat('[')) p.lex.fail("expected [ row");
    std::vector<Polynomial> row;
    if (!p.lex.eat(']')) {
      for (;;) {
        row.push_back(p.expr());
        if (p.lex.eat(']')) break;
        if (!p.lex.eat(',')) p.lex.fail("expected , or ]");
      }
    }
    rows.push_back(std::move(row));
    if (p.lex.eat(']')) break;
    if (!p.lex.eat(',')) p.lex.fail("expected , or ]");
  }
  if (p.lex.peek() != '\0') p.lex.fail("trailing input");
  return rows;
}

std::string print_list(const std::vector<Polynomial>& polys) {
  std::string s = "[";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].str();
  }
  s += "]";
  return s;
}

}  // namespace godeaux::algebra
