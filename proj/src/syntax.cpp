#include "trineg/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace trineg {

Program::Program(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  clauses_ = std::move(clauses);
  for (const Clause& c : clauses_) {
    base_.insert(c.head);
    for (const Literal& l : c.body) base_.insert(l.atom);
  }
}

namespace {

enum class Tok { Ident, Not, Weak, Strict, If, Query, Dot, Comma, LParen, RParen, End };

struct Token {
  Tok tok;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    char c = text_[pos_];
    if (c == '.') return take(Tok::Dot, 1);
    if (c == ',') return take(Tok::Comma, 1);
    if (c == '(') return take(Tok::LParen, 1);
    if (c == ')') return take(Tok::RParen, 1);
    if (c == ':' && peek(1) == '-') return take(Tok::If, 2);
    if (c == '?' && peek(1) == '-') return take(Tok::Query, 2);
    if (c == '~') {
      char k = peek(1);
      if (k == 'w') return take(Tok::Weak, 2);
      if (k == 's') return take(Tok::Strict, 2);
      throw ParseError(line, col, "expected ~w or ~s");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      std::string word = text_.substr(start, pos_ - start);
      if (std::isupper(static_cast<unsigned char>(word[0]))) {
        throw ParseError(line, col,
                         "variables unsupported (ground programs only): '" + word + "'");
      }
      if (word == "not") return {Tok::Not, word, line, col};
      return {Tok::Ident, word, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  char peek(size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  Token take(Tok t, size_t len) {
    Token r{t, text_.substr(pos_, len), line_, col_};
    for (size_t i = 0; i < len; ++i) advance();
    return r;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  Program program() {
    std::vector<Clause> clauses;
    while (cur_.tok != Tok::End) clauses.push_back(clause());
    return Program(std::move(clauses));
  }

  Goal goal() {
    expect(Tok::Query, "expected '?-'");
    Goal g;
    if (cur_.tok != Tok::Dot) g.body = body();
    expect(Tok::Dot, "expected '.'");
    if (cur_.tok != Tok::End) fail("trailing input after goal");
    return g;
  }

 private:
  Clause clause() {
    Clause c;
    c.head = atom();
    if (cur_.tok == Tok::If) {
      shift();
      if (cur_.tok != Tok::Dot) c.body = body();
    }
    expect(Tok::Dot, "expected '.'");
    return c;
  }

  std::vector<Literal> body() {
    std::vector<Literal> lits;
    lits.push_back(literal());
    while (cur_.tok == Tok::Comma) {
      shift();
      lits.push_back(literal());
    }
    return lits;
  }

  Literal literal() {
    Kind kind = Kind::Pos;
    if (cur_.tok == Tok::Not) kind = Kind::Not;
    else if (cur_.tok == Tok::Weak) kind = Kind::Weak;
    else if (cur_.tok == Tok::Strict) kind = Kind::Strict;
    if (kind != Kind::Pos) {
      shift();
      if (cur_.tok == Tok::Not || cur_.tok == Tok::Weak || cur_.tok == Tok::Strict) {
        fail("nested negation unsupported");
      }
    }
    return {kind, atom()};
  }

  // Constant-argument atoms like approved(a) are admitted as opaque names.
  Atom atom() {
    Token t = expect(Tok::Ident, "expected atom");
    std::string name = t.text;
    if (cur_.tok == Tok::LParen) {
      shift();
      name += '(';
      name += expect(Tok::Ident, "expected constant argument").text;
      while (cur_.tok == Tok::Comma) {
        shift();
        name += ',';
        name += expect(Tok::Ident, "expected constant argument").text;
      }
      expect(Tok::RParen, "expected ')'");
      name += ')';
    }
    return name;
  }

  Token expect(Tok t, const std::string& msg) {
    if (cur_.tok != t) fail(msg);
    Token r = cur_;
    shift();
    return r;
  }
  [[noreturn]] void fail(const std::string& msg) {
    std::string got = cur_.tok == Tok::End ? "end of input" : "'" + cur_.text + "'";
    throw ParseError(cur_.line, cur_.column, msg + ", got " + got);
  }
  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_{Tok::End, "", 1, 1};
};

const char* kind_prefix(Kind k) {
  switch (k) {
    case Kind::Pos: return "";
    case Kind::Not: return "not ";
    case Kind::Weak: return "~w ";
    case Kind::Strict: return "~s ";
  }
  return "";
}

}  // namespace

Program parse_program(const std::string& text) { return Parser(text).program(); }

Goal parse_goal(const std::string& text) { return Parser(text).goal(); }

std::string render(const Literal& lit) { return kind_prefix(lit.kind) + lit.atom; }

std::string render(const Clause& clause) {
  std::string out = clause.head;
  if (!clause.body.empty()) {
    out += " :- ";
    for (size_t i = 0; i < clause.body.size(); ++i) {
      if (i) out += ", ";
      out += render(clause.body[i]);
    }
  }
  out += ".";
  return out;
}

std::string render(const Program& program) {
  std::string out;
  for (const Clause& c : program.clauses()) {
    out += render(c);
    out += '\n';
  }
  return out;
}

std::string render(const Goal& goal) {
  std::string out = "?-";
  for (size_t i = 0; i < goal.body.size(); ++i) {
    out += i ? ", " : " ";
    out += render(goal.body[i]);
  }
  out += goal.body.empty() ? " ." : ".";
  return out;
}

std::string render(const AtomSet& atoms) {
  std::string out = "{";
  for (auto it = atoms.begin(); it != atoms.end(); ++it) {
    if (it != atoms.begin()) out += ", ";
    out += *it;
  }
  out += "}";
  return out;
}

}  // namespace trineg
