#include "boxdot/parser.hpp"

#include <array>
#include <utility>

namespace boxdot {

namespace {

enum class Tok {
  Ident,
  True,
  False,
  Not,
  Box,
  Dia,
  DotBox,
  And,
  Or,
  Imp,
  Iff,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

constexpr std::array<std::pair<std::string_view, Tok>, 21> kSpellings{{
    {"<->", Tok::Iff},      {"[.]", Tok::DotBox},     {"->", Tok::Imp},
    {"[]", Tok::Box},       {"<>", Tok::Dia},         {"~", Tok::Not},
    {"&", Tok::And},        {"|", Tok::Or},           {"(", Tok::LParen},
    {")", Tok::RParen},     {"¬", Tok::Not},     {"□", Tok::Box},
    {"◇", Tok::Dia},   {"⊡", Tok::DotBox},  {"∧", Tok::And},
    {"∨", Tok::Or},    {"→", Tok::Imp},     {"↔", Tok::Iff},
    {"⊤", Tok::True},  {"⊥", Tok::False},   {"≡", Tok::Iff},
}};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'~'";
    case Tok::Box: return "'[]'";
    case Tok::Dia: return "'<>'";
    case Tok::DotBox: return "'[.]'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return ident_start(c) || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    Formula f = parse_iff();
    if (current_.kind != Tok::End) fail("expected binary connective or end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::string found = current_.kind == Tok::End ? std::string("end of input")
                                                  : "'" + std::string(current_.text) + "'";
    throw ParseError(current_.offset, message + ", found " + found);
  }

  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, pos_, {}};
      return;
    }
    const std::size_t start = pos_;
    if (ident_start(text_[pos_])) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      current_ = {kind, start, word};
      return;
    }
    for (const auto& [spelling, kind] : kSpellings) {
      if (text_.substr(pos_).starts_with(spelling)) {
        pos_ += spelling.size();
        current_ = {kind, start, text_.substr(start, spelling.size())};
        return;
      }
    }
    current_ = {Tok::End, start, text_.substr(start, 1)};
    throw ParseError(start, "unexpected character '" + std::string(text_.substr(start, 1)) + "'");
  }

  void expect(Tok kind) {
    if (current_.kind != kind) fail("expected " + std::string(describe(kind)));
    advance();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (current_.kind == Tok::Iff) {
      advance();
      f = iff(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (current_.kind == Tok::Imp) {
      advance();
      return implies(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (current_.kind == Tok::Or) {
      advance();
      f = disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (current_.kind == Tok::And) {
      advance();
      f = conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (current_.kind) {
      case Tok::Not: advance(); return neg(parse_unary());
      case Tok::Box: advance(); return box(parse_unary());
      case Tok::Dia: advance(); return dia(parse_unary());
      case Tok::DotBox: advance(); return dotted_box(parse_unary());
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    switch (current_.kind) {
      case Tok::Ident: {
        Formula f = var(std::string(current_.text));
        advance();
        return f;
      }
      case Tok::True: advance(); return top();
      case Tok::False: advance(); return bottom();
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      default: fail("expected formula");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, 0, {}};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace boxdot
