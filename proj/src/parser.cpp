#include "skewcal/parser.hpp"

#include <cctype>

namespace skewcal {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End, Bad };
  Kind kind = End;
  std::string text;
  SrcPos pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : m_text(text) { advance(); }

  const Token& peek() const { return m_tok; }

  Token take() {
    Token t = m_tok;
    advance();
    return t;
  }

private:
  void advance() {
    while (m_i < m_text.size() &&
           std::isspace(static_cast<unsigned char>(m_text[m_i]))) {
      bump();
    }
    m_tok.pos = m_pos;
    if (m_i >= m_text.size()) {
      m_tok.kind = Token::End;
      m_tok.text.clear();
      return;
    }
    char c = m_text[m_i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = m_i;
      while (m_i < m_text.size() &&
             std::isdigit(static_cast<unsigned char>(m_text[m_i]))) {
        bump();
      }
      m_tok.kind = Token::Number;
      m_tok.text = m_text.substr(start, m_i - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = m_i;
      while (m_i < m_text.size() &&
             (std::isalnum(static_cast<unsigned char>(m_text[m_i])) ||
              m_text[m_i] == '_')) {
        bump();
      }
      m_tok.kind = Token::Ident;
      m_tok.text = m_text.substr(start, m_i - start);
      return;
    }
    switch (c) {
      case '+': m_tok.kind = Token::Plus; break;
      case '-': m_tok.kind = Token::Minus; break;
      case '*': m_tok.kind = Token::Star; break;
      case '^': m_tok.kind = Token::Caret; break;
      case '/': m_tok.kind = Token::Slash; break;
      case '(': m_tok.kind = Token::LParen; break;
      case ')': m_tok.kind = Token::RParen; break;
      default: m_tok.kind = Token::Bad; break;
    }
    m_tok.text = std::string(1, c);
    bump();
  }

  void bump() {
    if (m_text[m_i] == '\n') {
      ++m_pos.line;
      m_pos.col = 1;
    } else {
      ++m_pos.col;
    }
    ++m_i;
  }

  const std::string& m_text;
  size_t m_i = 0;
  SrcPos m_pos;
  Token m_tok;
};

class Parser {
public:
  Parser(const std::string& text, const ChartPtr& chart)
      : m_lex(text), m_chart(chart) {}

  ExprParseResult run() {
    ExprParseResult res;
    Expr e = parse_sum();
    if (!m_failed && m_lex.peek().kind != Token::End) {
      fail(m_lex.peek().pos, "unexpected '" + m_lex.peek().text + "'");
    }
    if (m_failed) {
      res.message = m_message;
      res.pos = m_errpos;
    } else {
      res.value = std::move(e);
    }
    return res;
  }

private:
  Expr parse_sum() {
    Expr acc = parse_product();
    while (!m_failed) {
      Token::Kind k = m_lex.peek().kind;
      if (k == Token::Plus) {
        m_lex.take();
        acc += parse_product();
      } else if (k == Token::Minus) {
        m_lex.take();
        acc -= parse_product();
      } else {
        break;
      }
    }
    return acc;
  }

  Expr parse_product() {
    Expr acc = parse_unary();
    while (!m_failed && m_lex.peek().kind == Token::Star) {
      m_lex.take();
      acc *= parse_unary();
    }
    return acc;
  }

  // Unary sign binds looser than '^': -y^2 means -(y^2).
  Expr parse_unary() {
    if (m_lex.peek().kind == Token::Minus) {
      m_lex.take();
      return -parse_unary();
    }
    if (m_lex.peek().kind == Token::Plus) {
      m_lex.take();
      return parse_unary();
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (m_failed) {
      return base;
    }
    if (m_lex.peek().kind == Token::Caret) {
      m_lex.take();
      Token t = m_lex.peek();
      bool neg = false;
      if (t.kind == Token::Minus) {
        neg = true;
      }
      if (t.kind != Token::Number && !neg) {
        fail(t.pos, "expected a nonnegative integer exponent after '^'");
        return base;
      }
      if (neg) {
        fail(t.pos, "negative exponents are not part of the expression ring");
        return base;
      }
      Token num = m_lex.take();
      long k = 0;
      try {
        k = std::stol(num.text);
      } catch (...) {
        fail(num.pos, "exponent too large");
        return base;
      }
      if (k > 64) {
        fail(num.pos, "exponent too large (limit 64)");
        return base;
      }
      return base.pow(static_cast<int>(k));
    }
    return base;
  }

  Expr parse_atom() {
    Token t = m_lex.peek();
    switch (t.kind) {
      case Token::Number: {
        m_lex.take();
        Rat num(t.text);
        if (m_lex.peek().kind == Token::Slash) {
          m_lex.take();
          Token d = m_lex.peek();
          if (d.kind != Token::Number) {
            fail(d.pos, "'/' is only allowed inside rational literals p/q");
            return Expr(m_chart);
          }
          m_lex.take();
          Rat den(d.text);
          if (den == 0) {
            fail(d.pos, "zero denominator in rational literal");
            return Expr(m_chart);
          }
          num /= den;
        }
        num.canonicalize();
        return Expr(m_chart, num);
      }
      case Token::Ident: {
        m_lex.take();
        if (t.text == "exp") {
          return parse_exp(t.pos);
        }
        auto idx = m_chart->index_of(t.text);
        if (!idx) {
          fail(t.pos, "unknown coordinate '" + t.text + "'");
          return Expr(m_chart);
        }
        return Expr::coordinate(m_chart, *idx);
      }
      case Token::LParen: {
        m_lex.take();
        Expr inner = parse_sum();
        if (m_failed) {
          return inner;
        }
        if (m_lex.peek().kind != Token::RParen) {
          fail(m_lex.peek().pos, "expected ')'");
          return inner;
        }
        m_lex.take();
        return inner;
      }
      case Token::Slash:
        fail(t.pos, "'/' is only allowed inside rational literals p/q");
        return Expr(m_chart);
      case Token::End:
        fail(t.pos, "unexpected end of expression");
        return Expr(m_chart);
      default:
        fail(t.pos, "unexpected '" + t.text + "'");
        return Expr(m_chart);
    }
  }

  Expr parse_exp(SrcPos at) {
    if (m_lex.peek().kind != Token::LParen) {
      fail(m_lex.peek().pos, "expected '(' after exp");
      return Expr(m_chart);
    }
    m_lex.take();
    Expr arg = parse_sum();
    if (m_failed) {
      return arg;
    }
    if (m_lex.peek().kind != Token::RParen) {
      fail(m_lex.peek().pos, "expected ')' closing exp(...)");
      return arg;
    }
    m_lex.take();
    // The argument must be a rational-linear form in the coordinates: every
    // term degree exactly one, no exponential factors, no constant part.
    std::vector<Rat> weights(static_cast<size_t>(m_chart->dim()), Rat(0));
    for (const auto& term : arg.terms()) {
      int degree = 0;
      size_t which = 0;
      for (size_t i = 0; i < term.mono.size(); ++i) {
        degree += term.mono[i];
        if (term.mono[i] > 0) {
          which = i;
        }
        if (term.expw[i] != 0) {
          fail(at, "exp argument must be a rational-linear form in the coordinates");
          return Expr(m_chart);
        }
      }
      if (degree != 1) {
        fail(at, "exp argument must be a rational-linear form in the coordinates");
        return Expr(m_chart);
      }
      weights[which] += term.coeff;
    }
    return Expr::exponential(m_chart, std::move(weights));
  }

  void fail(SrcPos pos, const std::string& message) {
    if (!m_failed) {
      m_failed = true;
      m_errpos = pos;
      m_message = message;
    }
  }

  Lexer m_lex;
  ChartPtr m_chart;
  bool m_failed = false;
  SrcPos m_errpos;
  std::string m_message;
};

} // namespace

ExprParseResult parse_expr(const std::string& text, const ChartPtr& chart) {
  return Parser(text, chart).run();
}

Expr parse_expr_or_throw(const std::string& text, const ChartPtr& chart) {
  ExprParseResult r = parse_expr(text, chart);
  if (!r.ok()) {
    throw Error("parse error at line " + std::to_string(r.pos.line) + ", col " +
                std::to_string(r.pos.col) + ": " + r.message + " in \"" + text + "\"");
  }
  return std::move(*r.value);
}

std::optional<Rat> parse_rat(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  skip_ws();
  auto digits = [&]() -> std::optional<std::string> {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == start) {
      return std::nullopt;
    }
    return text.substr(start, i - start);
  };
  auto p = digits();
  if (!p) {
    return std::nullopt;
  }
  Rat val(*p);
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    auto q = digits();
    if (!q || Rat(*q) == 0) {
      return std::nullopt;
    }
    val /= Rat(*q);
  }
  skip_ws();
  if (i != text.size()) {
    return std::nullopt;
  }
  val.canonicalize();
  return neg ? Rat(-val) : val;
}

} // namespace skewcal
