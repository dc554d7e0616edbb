#include "nmlab/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace nmlab {

namespace {

struct Token {
  enum class Kind {
    End,
    Atom,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Know,
    LParen,
    RParen,
    Colon,
    Comma,
    Slash,
    Period,
    If,  // ":-"
  };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, int line) : src_(src), line_(line) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r'))
      ++pos_;
    tok_.line = line_;
    tok_.column = static_cast<int>(pos_) + 1;
    tok_.text.clear();
    if (pos_ >= src_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '(':
        ++pos_;
        tok_.kind = Token::Kind::LParen;
        return;
      case ')':
        ++pos_;
        tok_.kind = Token::Kind::RParen;
        return;
      case '~':
        ++pos_;
        tok_.kind = Token::Kind::Not;
        return;
      case '&':
        ++pos_;
        tok_.kind = Token::Kind::And;
        return;
      case '|':
        ++pos_;
        tok_.kind = Token::Kind::Or;
        return;
      case ',':
        ++pos_;
        tok_.kind = Token::Kind::Comma;
        return;
      case '/':
        ++pos_;
        tok_.kind = Token::Kind::Slash;
        return;
      case '.':
        ++pos_;
        tok_.kind = Token::Kind::Period;
        return;
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          tok_.kind = Token::Kind::Implies;
          return;
        }
        throw ParseError("unexpected character '-'", line_, tok_.column);
      case '<':
        if (src_.substr(pos_, 3) == "<->") {
          pos_ += 3;
          tok_.kind = Token::Kind::Iff;
          return;
        }
        throw ParseError("unexpected character '<'", line_, tok_.column);
      case ':':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
          pos_ += 2;
          tok_.kind = Token::Kind::If;
          return;
        }
        ++pos_;
        tok_.kind = Token::Kind::Colon;
        return;
      case 'K':
        ++pos_;
        tok_.kind = Token::Kind::Know;
        return;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      if (tok_.text == "true")
        tok_.kind = Token::Kind::True;
      else if (tok_.text == "false")
        tok_.kind = Token::Kind::False;
      else
        tok_.kind = Token::Kind::Atom;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     tok_.column);
  }

  std::string_view src_;
  int line_;
  std::size_t pos_ = 0;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
  throw ParseError(what, t.line, t.column);
}

// Recursive descent with a minimum binding strength, mirroring the
// precedence table in formula.cpp.
Formula parse_expr(Lexer& lx, int min_prec, bool allow_modal);

Formula parse_unary(Lexer& lx, bool allow_modal) {
  Token t = lx.take();
  switch (t.kind) {
    case Token::Kind::Not:
      return Formula::negation(parse_unary(lx, allow_modal));
    case Token::Kind::Know:
      if (!allow_modal)
        fail(t, "modal operator K not allowed in an objective formula");
      return Formula::know(parse_unary(lx, allow_modal));
    case Token::Kind::True:
      return Formula::truth();
    case Token::Kind::False:
      return Formula::falsity();
    case Token::Kind::Atom:
      return Formula::atom(t.text);
    case Token::Kind::LParen: {
      Formula f = parse_expr(lx, 0, allow_modal);
      Token close = lx.take();
      if (close.kind != Token::Kind::RParen) fail(close, "expected ')'");
      return f;
    }
    default:
      fail(t, "expected a formula");
  }
}

Formula parse_expr(Lexer& lx, int min_prec, bool allow_modal) {
  Formula lhs = parse_unary(lx, allow_modal);
  for (;;) {
    Token::Kind k = lx.peek().kind;
    if (k == Token::Kind::And && min_prec <= 4) {
      lx.take();
      lhs = Formula::conjunction(lhs, parse_expr(lx, 5, allow_modal));
    } else if (k == Token::Kind::Or && min_prec <= 3) {
      lx.take();
      lhs = Formula::disjunction(lhs, parse_expr(lx, 4, allow_modal));
    } else if (k == Token::Kind::Implies && min_prec <= 2) {
      lx.take();
      lhs = Formula::implication(lhs, parse_expr(lx, 2, allow_modal));
    } else if (k == Token::Kind::Iff && min_prec <= 1) {
      lx.take();
      lhs = Formula::equivalence(lhs, parse_expr(lx, 1, allow_modal));
    } else {
      return lhs;
    }
  }
}

void expect_end(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::End) fail(t, "unexpected trailing input");
}

// One source line with comments stripped.
struct Line {
  std::string text;
  int number;
};

std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t a = raw.find_first_not_of(" \t\r");
    if (a != std::string_view::npos) {
      std::size_t b = raw.find_last_not_of(" \t\r");
      // Keep the original column positions: pad with the leading blanks.
      lines.push_back({std::string(raw.substr(0, b + 1)), number});
      (void)a;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

Default parse_default_line(const Line& line) {
  Lexer lx(line.text, line.number);
  Formula pre = parse_expr(lx, 0, false);
  Token t = lx.take();
  if (t.kind != Token::Kind::Colon)
    fail(t, "expected ':' after the prerequisite");
  if (lx.peek().kind == Token::Kind::Slash)
    fail(lx.peek(), "a default needs at least one justification");
  std::vector<Formula> justs;
  justs.push_back(parse_expr(lx, 0, false));
  while (lx.peek().kind == Token::Kind::Comma) {
    lx.take();
    justs.push_back(parse_expr(lx, 0, false));
  }
  t = lx.take();
  if (t.kind != Token::Kind::Slash)
    fail(t, "expected '/' before the consequent");
  Formula cons = parse_expr(lx, 0, false);
  t = lx.take();
  if (t.kind != Token::Kind::Period) fail(t, "expected '.' after the default");
  expect_end(lx);
  return Default(std::move(pre), std::move(justs), std::move(cons));
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Lexer lx(text, 1);
  Formula f = parse_expr(lx, 0, true);
  expect_end(lx);
  return f;
}

ModalTheory parse_modal_theory(std::string_view text) {
  ModalTheory t;
  for (const Line& line : logical_lines(text)) {
    Lexer lx(line.text, line.number);
    t.formulas.push_back(parse_expr(lx, 0, true));
    expect_end(lx);
  }
  return t;
}

DefaultTheory parse_default_theory(std::string_view text) {
  DefaultTheory d;
  enum class Section { None, Facts, Defaults } section = Section::None;
  for (Line line : logical_lines(text)) {
    std::size_t start = line.text.find_first_not_of(" \t");
    std::string_view body(line.text);
    body = body.substr(start);
    if (body.rfind("W:", 0) == 0) {
      section = Section::Facts;
      // Blank out the marker so error columns still match the source.
      line.text = std::string(start + 2, ' ') + line.text.substr(start + 2);
      if (line.text.find_first_not_of(" \t") == std::string::npos) continue;
    } else if (body.rfind("D:", 0) == 0) {
      section = Section::Defaults;
      line.text = std::string(start + 2, ' ') + line.text.substr(start + 2);
      if (line.text.find_first_not_of(" \t") == std::string::npos) continue;
    } else if (section == Section::None) {
      throw ParseError("expected a 'W:' or 'D:' section header", line.number,
                       static_cast<int>(start) + 1);
    }
    if (section == Section::Facts) {
      Lexer lx(line.text, line.number);
      d.facts.push_back(parse_expr(lx, 0, false));
      expect_end(lx);
    } else {
      d.defaults.push_back(parse_default_line(line));
    }
  }
  return d;
}

Program parse_program(std::string_view text) {
  Program p;
  for (const Line& line : logical_lines(text)) {
    Lexer lx(line.text, line.number);
    Token head = lx.take();
    if (head.kind == Token::Kind::If)
      fail(head, "a clause needs a head atom");
    if (head.kind == Token::Kind::True || head.kind == Token::Kind::False)
      fail(head, "reserved word '" + head.text + "' cannot be an atom");
    if (head.kind != Token::Kind::Atom) fail(head, "expected a head atom");
    if (head.text == "not") fail(head, "reserved word 'not' cannot be an atom");
    Clause c;
    c.head = head.text;
    Token t = lx.take();
    if (t.kind == Token::Kind::If) {
      while (lx.peek().kind != Token::Kind::Period) {
        Token lit = lx.take();
        if (lit.kind == Token::Kind::True || lit.kind == Token::Kind::False)
          fail(lit, "reserved word '" + lit.text + "' cannot be an atom");
        if (lit.kind != Token::Kind::Atom) fail(lit, "expected a body literal");
        if (lit.text == "not") {
          Token a = lx.take();
          if (a.kind != Token::Kind::Atom || a.text == "not")
            fail(a, "expected an atom after 'not'");
          c.negative.push_back(a.text);
        } else {
          c.positive.push_back(lit.text);
        }
        if (lx.peek().kind == Token::Kind::Comma) {
          lx.take();
          if (lx.peek().kind == Token::Kind::Period)
            fail(lx.peek(), "expected a body literal after ','");
        } else {
          break;
        }
      }
      t = lx.take();
    }
    if (t.kind != Token::Kind::Period) fail(t, "expected '.' after the clause");
    expect_end(lx);
    p.clauses.push_back(std::move(c));
  }
  return p;
}

}  // namespace nmlab
