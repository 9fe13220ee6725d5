#include "mckay/parse.hpp"

#include <cctype>

#include "mckay/error.hpp"

namespace mckay {

namespace {

using Poly = Polynomial<CycloNumber>;

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse_error, "in '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const Poly d = unary();
        const Monomial one(ring_.size(), 0);
        if (d.size() > 1 || (d.size() == 1 && d.terms().begin()->first != one)) fail("division by a non-constant");
        if (d.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero in '" + std::string(text_) + "'");
        acc = acc.scaled(d.coefficient(one).inverse());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      const long e = integer();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Poly constant(const CycloNumber& c) const { return Poly::constant(ring_.size(), c); }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(CycloNumber(Rational(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t v = 0; v < ring_.size(); ++v)
        if (ring_.names[v] == name) return Poly::variable(ring_.size(), v);
      if (name == "i") return constant(CycloNumber::imaginary_unit());
      if (name == "zeta") {
        expect('(');
        const long n = integer();
        expect(',');
        bool neg = accept('-');
        const long k = integer();
        expect(')');
        if (n <= 0) fail("zeta order must be positive");
        return constant(CycloNumber::root_of_unity(neg ? -k : k, static_cast<unsigned>(n)));
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial<CycloNumber> parse_polynomial(std::string_view text, const PolyRing& ring) {
  return Parser(text, ring).parse();
}

CycloNumber parse_scalar(std::string_view text) {
  const PolyRing none;
  const Poly p = Parser(text, none).parse();
  return p.coefficient(Monomial{});
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<CycloNumber> parse_scalar_list(std::string_view text, char sep) {
  std::vector<CycloNumber> out;
  for (const auto& piece : split_top_level(text, sep)) out.push_back(parse_scalar(piece));
  return out;
}

}  // namespace mckay
