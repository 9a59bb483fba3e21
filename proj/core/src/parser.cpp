#include "platek/parser.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

namespace platek {

namespace {

enum class Tok {
  Numeral,
  Ident,
  Hash,
  Lambda,
  Fix,
  Suc,
  Pred,
  Case,
  Colon,
  Dot,
  Arrow,
  LParen,
  RParen,
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Numeral: return "numeral";
    case Tok::Ident: return "identifier";
    case Tok::Hash: return "'#'";
    case Tok::Lambda: return "'\\'";
    case Tok::Fix: return "'fix'";
    case Tok::Suc: return "'suc'";
    case Tok::Pred: return "'pred'";
    case Tok::Case: return "'case'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t number = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_trivia();
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (c == '\\') {
      bump();
      current_ = make(Tok::Lambda, "\\");
      return;
    }
    if (c == ':') {
      bump();
      current_ = make(Tok::Colon, ":");
      return;
    }
    if (c == '.') {
      bump();
      current_ = make(Tok::Dot, ".");
      return;
    }
    if (c == '(') {
      bump();
      current_ = make(Tok::LParen, "(");
      return;
    }
    if (c == ')') {
      bump();
      current_ = make(Tok::RParen, ")");
      return;
    }
    if (c == '#') {
      bump();
      current_ = make(Tok::Hash, "#");
      return;
    }
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        bump();
        bump();
        current_ = make(Tok::Arrow, "->");
        return;
      }
      fail("stray '-'", "'->'");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      std::string s;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        s += text_[pos_];
        bump();
      }
      current_ = make(Tok::Numeral, s);
      current_.number = n;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\'')) {
        s += text_[pos_];
        bump();
      }
      if (s == "fix")
        current_ = make(Tok::Fix, s);
      else if (s == "suc")
        current_ = make(Tok::Suc, s);
      else if (s == "pred")
        current_ = make(Tok::Pred, s);
      else if (s == "case")
        current_ = make(Tok::Case, s);
      else
        current_ = make(Tok::Ident, s);
      return;
    }
    fail(std::string("unexpected character '") + c + "'", "");
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        bump();
      } else if (c == '\n') {
        bump();
      } else if (c == '-' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token make(Tok kind, std::string text) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.line = current_.line;
    t.column = current_.column;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, const std::string& expected) {
    throw ParseError(msg, line_, col_, expected);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Term parse_term_all() {
    Term t = parse_term();
    expect(Tok::End);
    return t;
  }

  Type parse_type_all() {
    Type t = parse_type();
    expect(Tok::End);
    return t;
  }

 private:
  Term parse_term() {
    const Token& tok = lex_.peek();
    if (tok.kind == Tok::Lambda || tok.kind == Tok::Fix) {
      bool is_lam = tok.kind == Tok::Lambda;
      lex_.take();
      Token name = expect(Tok::Ident);
      expect(Tok::Colon);
      Type ty = parse_type();
      expect(Tok::Dot);
      Term body = parse_term();
      return is_lam ? Term::lam(name.text, ty, body)
                    : Term::fix(name.text, ty, body);
    }
    return parse_app();
  }

  Term parse_app() {
    Term t = parse_atom();
    while (starts_atom(lex_.peek().kind)) {
      t = Term::app(t, parse_atom());
    }
    return t;
  }

  static bool starts_atom(Tok k) {
    switch (k) {
      case Tok::Numeral:
      case Tok::Ident:
      case Tok::Hash:
      case Tok::Suc:
      case Tok::Pred:
      case Tok::Case:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term parse_atom() {
    Token tok = lex_.take();
    switch (tok.kind) {
      case Tok::Numeral:
        return Term::numeral(tok.number);
      case Tok::Suc:
        return Term::suc();
      case Tok::Pred:
        return Term::pred();
      case Tok::Case:
        return Term::case_();
      case Tok::Hash: {
        Token name = expect(Tok::Ident);
        return Term::oracle(name.text);
      }
      case Tok::Ident:
        return Term::var(tok.text);
      case Tok::LParen: {
        Term t = parse_term();
        expect(Tok::RParen);
        return t;
      }
      default:
        throw ParseError("unexpected " + std::string(tok_name(tok.kind)),
                         tok.line, tok.column,
                         "numeral, identifier, '#', '(', '\\', 'fix', 'suc', "
                         "'pred' or 'case'");
    }
  }

  Type parse_type() {
    Type left = parse_type_atom();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      Type right = parse_type();  // right associative
      return Type::arrow(left, right);
    }
    return left;
  }

  Type parse_type_atom() {
    Token tok = lex_.take();
    if (tok.kind == Tok::Numeral && tok.number == 0) return Type::base();
    if (tok.kind == Tok::LParen) {
      Type t = parse_type();
      expect(Tok::RParen);
      return t;
    }
    throw ParseError("unexpected " + std::string(tok_name(tok.kind)) +
                         " in type",
                     tok.line, tok.column, "'0' or '('");
  }

  Token expect(Tok kind) {
    Token tok = lex_.take();
    if (tok.kind != kind)
      throw ParseError("unexpected " + std::string(tok_name(tok.kind)),
                       tok.line, tok.column, tok_name(kind));
    return tok;
  }

  Lexer lex_;
};

}  // namespace

Term parse(const std::string& text) { return Parser(text).parse_term_all(); }

Type parse_type(const std::string& text) {
  return Parser(text).parse_type_all();
}

}  // namespace platek
