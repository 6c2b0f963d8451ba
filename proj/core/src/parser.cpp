#include "losq/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "losq/error.hpp"

namespace losq {

namespace {

enum class Tok { number, ident, plus, minus, star, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
  double value = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const std::size_t start = i_;
    if (i_ >= src_.size()) return {Tok::end, start, {}};
    const char c = src_[i_];
    // U+2212 MINUS SIGN
    if (src_.substr(i_, 3) == "\xE2\x88\x92") {
      i_ += 3;
      return {Tok::minus, start, src_.substr(start, 3)};
    }
    switch (c) {
      case '+': ++i_; return {Tok::plus, start, src_.substr(start, 1)};
      case '-': ++i_; return {Tok::minus, start, src_.substr(start, 1)};
      case '*': ++i_; return {Tok::star, start, src_.substr(start, 1)};
      case '(': ++i_; return {Tok::lparen, start, src_.substr(start, 1)};
      case ')': ++i_; return {Tok::rparen, start, src_.substr(start, 1)};
      case ',': ++i_; return {Tok::comma, start, src_.substr(start, 1)};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
        ++i_;
      }
      return {Tok::ident, start, src_.substr(start, i_ - start)};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }

  bool digit_at(std::size_t k) const {
    return k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]));
  }

  Token number(std::size_t start) {
    while (digit_at(i_)) ++i_;
    if (i_ < src_.size() && src_[i_] == '.') {
      ++i_;
      while (digit_at(i_)) ++i_;
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t k = i_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (digit_at(k)) {
        i_ = k;
        while (digit_at(i_)) ++i_;
      }
    }
    const std::string_view text = src_.substr(start, i_ - start);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw ParseError("malformed number '" + std::string(text) + "'", start);
    }
    return {Tok::number, start, text, value};
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, double theta) : lexer_(text), theta_(theta) { advance(); }

  OperatorExpr parse_all() {
    OperatorExpr e = expr();
    if (tok_.kind != Tok::end) {
      throw ParseError("unexpected '" + std::string(tok_.text) + "'", tok_.pos);
    }
    return e;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) {
      throw ParseError(std::string("expected ") + what, tok_.pos);
    }
    advance();
  }

  static bool is_sign(Tok k) { return k == Tok::plus || k == Tok::minus; }
  static bool starts_factor(Tok k) {
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  OperatorExpr expr() {
    OperatorExpr sum;
    bool negate = false;
    if (is_sign(tok_.kind)) {
      negate = tok_.kind == Tok::minus;
      advance();
    }
    for (;;) {
      OperatorExpr t = term();
      if (negate) sum -= t;
      else sum += t;
      if (!is_sign(tok_.kind)) break;
      negate = tok_.kind == Tok::minus;
      advance();
    }
    return sum;
  }

  OperatorExpr term() {
    OperatorExpr product = unary();
    for (;;) {
      if (tok_.kind == Tok::star) {
        advance();
      } else if (!starts_factor(tok_.kind)) {
        break;
      }
      product = product * unary();
    }
    return product;
  }

  OperatorExpr unary() {
    if (is_sign(tok_.kind)) {
      const bool negate = tok_.kind == Tok::minus;
      advance();
      OperatorExpr e = unary();
      return negate ? -e : e;
    }
    return factor();
  }

  double real_scalar(const OperatorExpr& e, std::size_t pos, const char* context) {
    cplx v;
    if (!e.is_scalar(v) || v.imag() != 0.0) {
      throw ParseError(std::string(context) + " must be a real scalar", pos);
    }
    return v.real();
  }

  OperatorExpr factor() {
    const Token t = tok_;
    switch (t.kind) {
      case Tok::number:
        advance();
        return OperatorExpr::scalar(t.value);
      case Tok::lparen: {
        advance();
        const std::size_t inner_pos = tok_.pos;
        OperatorExpr first = expr();
        if (tok_.kind == Tok::comma) {
          const double re = real_scalar(first, inner_pos, "real part of a complex pair");
          advance();
          const std::size_t imag_pos = tok_.pos;
          const double im = real_scalar(expr(), imag_pos, "imaginary part of a complex pair");
          expect(Tok::rparen, "')'");
          return OperatorExpr::scalar(cplx(re, im));
        }
        expect(Tok::rparen, "')'");
        return first;
      }
      case Tok::ident:
        return identifier(t);
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + std::string(t.text) + "'", t.pos);
    }
  }

  OperatorExpr identifier(const Token& t) {
    advance();
    if (t.text == "a") return OperatorExpr::letter(Letter::a);
    if (t.text == "ad") return OperatorExpr::letter(Letter::ad);
    if (t.text == "b") return OperatorExpr::letter(Letter::b);
    if (t.text == "bd") return OperatorExpr::letter(Letter::bd);
    if (t.text == "i") return OperatorExpr::scalar(cplx(0.0, 1.0));
    if (t.text == "theta") return OperatorExpr::scalar(theta_);
    if (t.text == "cis") {
      expect(Tok::lparen, "'(' after cis");
      const std::size_t arg_pos = tok_.pos;
      const double x = real_scalar(expr(), arg_pos, "cis argument");
      expect(Tok::rparen, "')'");
      return OperatorExpr::scalar(std::polar(1.0, x));
    }
    throw ParseError("unknown symbol '" + std::string(t.text) + "'", t.pos);
  }

  Lexer lexer_;
  double theta_;
  Token tok_{Tok::end, 0, {}};
};

}  // namespace

OperatorExpr parse(std::string_view text, double theta) { return Parser(text, theta).parse_all(); }

}  // namespace losq
