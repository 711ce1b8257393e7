#include "vkp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <unordered_map>

#include "vkp/script.hpp"

namespace vkp {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found,
                       std::string detail)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         (detail.empty() ? "expected " + (expected.size() > 1 ? "one of " : std::string()) +
                                               join(expected) + ", found " + found
                                         : detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  Ident,
  Fun,
  Case,
  Of,
  Proj1,
  Proj2,
  Inj1,
  Inj2,
  Exfalso,
  Hop,
  Visser,
  Def,
  Calculus,
  False,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Dot,
  FatArrow,
  Arrow,
  And,
  Or,
  Tilde,
  Bar,
  Assign,
  End,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Fun: return "'fun'";
    case Tok::Case: return "'case'";
    case Tok::Of: return "'of'";
    case Tok::Proj1: return "'proj1'";
    case Tok::Proj2: return "'proj2'";
    case Tok::Inj1: return "'inj1'";
    case Tok::Inj2: return "'inj2'";
    case Tok::Exfalso: return "'exfalso'";
    case Tok::Hop: return "'hop'";
    case Tok::Visser: return "'visser'";
    case Tok::Def: return "'def'";
    case Tok::Calculus: return "'calculus'";
    case Tok::False: return "'False'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Tilde: return "'~'";
    case Tok::Bar: return "'|'";
    case Tok::Assign: return "':='";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const std::unordered_map<std::string, Tok>& keywords() {
  static const std::unordered_map<std::string, Tok> table = {
      {"fun", Tok::Fun},         {"case", Tok::Case},   {"of", Tok::Of},         {"proj1", Tok::Proj1},
      {"proj2", Tok::Proj2},     {"inj1", Tok::Inj1},   {"inj2", Tok::Inj2},     {"exfalso", Tok::Exfalso},
      {"hop", Tok::Hop},         {"visser", Tok::Visser}, {"def", Tok::Def},    {"calculus", Tok::Calculus},
      {"False", Tok::False},
  };
  return table;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      const std::size_t line = line_;
      const std::size_t col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "end of input", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          word += src_[pos_];
          advance();
        }
        auto kw = keywords().find(word);
        out.push_back({kw == keywords().end() ? Tok::Ident : kw->second, word, line, col});
        continue;
      }
      auto two = [&](char a, char b) { return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b; };
      std::optional<Tok> sym;
      std::size_t width = 1;
      if (two('=', '>')) {
        sym = Tok::FatArrow;
        width = 2;
      } else if (two('-', '>')) {
        sym = Tok::Arrow;
        width = 2;
      } else if (two('/', '\\')) {
        sym = Tok::And;
        width = 2;
      } else if (two('\\', '/')) {
        sym = Tok::Or;
        width = 2;
      } else if (two(':', '=')) {
        sym = Tok::Assign;
        width = 2;
      } else {
        switch (c) {
          case '(': sym = Tok::LParen; break;
          case ')': sym = Tok::RParen; break;
          case '[': sym = Tok::LBracket; break;
          case ']': sym = Tok::RBracket; break;
          case '{': sym = Tok::LBrace; break;
          case '}': sym = Tok::RBrace; break;
          case ',': sym = Tok::Comma; break;
          case ':': sym = Tok::Colon; break;
          case '.': sym = Tok::Dot; break;
          case '~': sym = Tok::Tilde; break;
          case '|': sym = Tok::Bar; break;
          default: break;
        }
      }
      if (!sym) {
        std::size_t len = 1;
        const auto uc = static_cast<unsigned char>(c);
        if (uc >= 0xF0) len = 4;
        else if (uc >= 0xE0) len = 3;
        else if (uc >= 0xC0) len = 2;
        throw ParseError(line, col, {"token"}, "'" + std::string(src_.substr(pos_, len)) + "'",
                         "unexpected character '" + std::string(src_.substr(pos_, len)) + "'");
      }
      std::string text(src_.substr(pos_, width));
      for (std::size_t i = 0; i < width; ++i) advance();
      out.push_back({*sym, std::move(text), line, col});
    }
  }

 private:
  // Columns count code points: UTF-8 continuation bytes do not advance.
  void advance() {
    const auto uc = static_cast<unsigned char>(src_[pos_++]);
    if (uc == '\n') {
      ++line_;
      col_ = 1;
    } else if ((uc & 0xC0) != 0x80) {
      ++col_;
    }
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Formula formula() { return impl(); }

  Term term() {
    if (at(Tok::Fun)) {
      next();
      std::vector<Binder> binders;
      do {
        expect(Tok::LParen);
        std::string name = ident();
        expect(Tok::Colon);
        Formula type = formula();
        expect(Tok::RParen);
        binders.push_back({std::move(name), std::move(type)});
      } while (at(Tok::LParen));
      if (!at(Tok::FatArrow)) fail({Tok::LParen, Tok::FatArrow});
      next();
      return abstract_over(binders, term());
    }
    if (!starts_prefix()) fail(term_starts());
    Term t = prefix();
    while (starts_prefix()) t = Term::app(std::move(t), prefix());
    return t;
  }

  void expect_end() {
    if (!at(Tok::End)) fail({Tok::End});
  }

  ProofScript script() {
    ProofScript out;
    Calculus current = Calculus::IPC;
    for (;;) {
      if (at(Tok::End)) return out;
      if (at(Tok::Calculus)) {
        next();
        const Token& tok = peek();
        auto calc = tok.kind == Tok::Ident ? calculus_from_name(tok.text) : std::nullopt;
        if (!calc) {
          throw ParseError(tok.line, tok.column, {"IPC", "V", "KP"}, found(tok));
        }
        current = *calc;
        next();
        continue;
      }
      if (!at(Tok::Def)) fail({Tok::Def, Tok::Calculus, Tok::End});
      const Token def_tok = next();
      const Token name_tok = peek();
      std::string name = ident();
      if (out.find(name)) {
        throw ParseError(name_tok.line, name_tok.column, {}, name, "duplicate declaration '" + name + "'");
      }
      expect(Tok::Colon);
      Formula claimed = formula();
      expect(Tok::Assign);
      Term body = term();
      if (!at(Tok::Def) && !at(Tok::Calculus) && !at(Tok::End)) {
        std::vector<Tok> exp = {Tok::Def, Tok::Calculus, Tok::End};
        fail(exp);
      }
      for (const auto& earlier : out.declarations) {
        if (body.has_free(earlier.name)) body = substitute(body, earlier.name, earlier.body);
      }
      out.declarations.push_back({std::move(name), std::move(claimed), std::move(body), current, def_tok.line,
                                  def_tok.column});
    }
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  static std::string found(const Token& t) {
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  }

  [[noreturn]] void fail(const std::vector<Tok>& expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.push_back(describe(t));
    throw ParseError(peek().line, peek().column, std::move(names), found(peek()));
  }

  void expect(Tok k) {
    if (!at(k)) fail({k});
    next();
  }

  std::string ident() {
    if (!at(Tok::Ident)) fail({Tok::Ident});
    return next().text;
  }

  // Formulas.
  Formula impl() {
    Formula lhs = disj();
    if (at(Tok::Arrow)) {
      next();
      return Formula::impl(std::move(lhs), impl());
    }
    return lhs;
  }

  Formula disj() {
    Formula lhs = conj();
    if (at(Tok::Or)) {
      next();
      return Formula::disj(std::move(lhs), disj());
    }
    return lhs;
  }

  Formula conj() {
    Formula lhs = unary();
    if (at(Tok::And)) {
      next();
      return Formula::conj(std::move(lhs), conj());
    }
    return lhs;
  }

  Formula unary() {
    if (at(Tok::Tilde)) {
      next();
      return Formula::negation(unary());
    }
    if (at(Tok::Ident)) return Formula::atom(next().text);
    if (at(Tok::False)) {
      next();
      return Formula::falsum();
    }
    if (at(Tok::LParen)) {
      next();
      Formula f = impl();
      expect(Tok::RParen);
      return f;
    }
    fail({Tok::Ident, Tok::False, Tok::Tilde, Tok::LParen});
  }

  // Terms.
  static std::vector<Tok> term_starts() {
    return {Tok::Ident, Tok::LParen, Tok::Fun, Tok::Proj1, Tok::Proj2, Tok::Inj1,
            Tok::Inj2,  Tok::Exfalso, Tok::Case, Tok::Hop, Tok::Visser};
  }

  bool starts_prefix() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::Proj1:
      case Tok::Proj2:
      case Tok::Inj1:
      case Tok::Inj2:
      case Tok::Exfalso:
      case Tok::Case:
      case Tok::Hop:
      case Tok::Visser:
        return true;
      default:
        return false;
    }
  }

  Formula bracketed_formula() {
    expect(Tok::LBracket);
    Formula f = formula();
    expect(Tok::RBracket);
    return f;
  }

  Term operand() {
    if (!starts_prefix()) {
      std::vector<Tok> exp = term_starts();
      exp.erase(std::find(exp.begin(), exp.end(), Tok::Fun));
      fail(exp);
    }
    return prefix();
  }

  Term prefix() {
    switch (peek().kind) {
      case Tok::Proj1:
      case Tok::Proj2: {
        const int index = next().kind == Tok::Proj1 ? 1 : 2;
        return Term::proj(index, operand());
      }
      case Tok::Inj1:
      case Tok::Inj2: {
        const int index = next().kind == Tok::Inj1 ? 1 : 2;
        Formula other = bracketed_formula();
        return Term::inj(index, std::move(other), operand());
      }
      case Tok::Exfalso: {
        next();
        Formula target = bracketed_formula();
        return Term::exfalso(std::move(target), operand());
      }
      default:
        return atom();
    }
  }

  Term atom() {
    switch (peek().kind) {
      case Tok::Ident:
        return Term::var(next().text);
      case Tok::LParen: {
        next();
        Term first = term();
        if (at(Tok::Comma)) {
          next();
          Term second = term();
          expect(Tok::RParen);
          return Term::pair(std::move(first), std::move(second));
        }
        if (!at(Tok::RParen)) fail({Tok::Comma, Tok::RParen});
        next();
        return first;
      }
      case Tok::Case: {
        next();
        Term scrutinee = term();
        Branches br = branches(2);
        return Term::case_of(std::move(scrutinee), br.y, std::move(br.terms[0]), std::move(br.terms[1]));
      }
      case Tok::Hop: {
        next();
        expect(Tok::LParen);
        std::string x = ident();
        expect(Tok::Colon);
        Formula annot = formula();
        expect(Tok::RParen);
        expect(Tok::Dot);
        Term main = term();
        Branches br = branches(2);
        return Term::harrop(std::move(x), std::move(annot), std::move(main), br.y, std::move(br.terms[0]),
                            std::move(br.terms[1]));
      }
      case Tok::Visser: {
        const Token start = next();
        expect(Tok::LParen);
        std::vector<Binder> binders;
        for (;;) {
          std::string x = ident();
          expect(Tok::Colon);
          Formula annot = formula();
          binders.push_back({std::move(x), std::move(annot)});
          if (at(Tok::Comma)) {
            next();
            continue;
          }
          if (!at(Tok::RParen)) fail({Tok::Comma, Tok::RParen});
          next();
          break;
        }
        expect(Tok::Dot);
        Term main = term();
        Branches br = branches(2 + binders.size(), &start);
        std::vector<Term> us(std::make_move_iterator(br.terms.begin() + 2), std::make_move_iterator(br.terms.end()));
        return Term::visser(std::move(binders), std::move(main), br.y, std::move(br.terms[0]), std::move(br.terms[1]),
                            br.z, std::move(us));
      }
      default:
        fail(term_starts());
    }
  }

  struct Branches {
    std::string y;
    std::string z;
    std::vector<Term> terms;
  };

  // `of { y => s1 | y => s2 [| z => u]* }` with exactly `count` branches. The
  // first two share one binder, the remaining ones another.
  Branches branches(std::size_t count, const Token* visser_start = nullptr) {
    expect(Tok::Of);
    expect(Tok::LBrace);
    Branches out;
    for (std::size_t i = 0;; ++i) {
      const Token name_tok = peek();
      std::string name = ident();
      if (i == 0) out.y = name;
      if (i == 2) out.z = name;
      const std::string& required = i < 2 ? out.y : out.z;
      if (name != required) {
        throw ParseError(name_tok.line, name_tok.column, {"'" + required + "'"}, "'" + name + "'",
                         "branch binder '" + name + "' differs from '" + required + "'");
      }
      expect(Tok::FatArrow);
      out.terms.push_back(term());
      if (at(Tok::Bar)) {
        next();
        continue;
      }
      if (!at(Tok::RBrace)) fail({Tok::Bar, Tok::RBrace});
      if (out.terms.size() != count) {
        const Token& at_tok = visser_start ? *visser_start : peek();
        throw ParseError(at_tok.line, at_tok.column, {}, "'}'",
                         visser_start ? "visser arity mismatch: " + std::to_string(count - 2) +
                                            " binders but " +
                                            std::to_string(out.terms.size() < 2 ? 0 : out.terms.size() - 2) +
                                            " u-branches"
                                      : "expected " + std::to_string(count) + " branches, found " +
                                            std::to_string(out.terms.size()));
      }
      next();
      return out;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view input) {
  Parser p(input);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(std::string_view input) {
  Parser p(input);
  Term t = p.term();
  p.expect_end();
  return t;
}

const Declaration* ProofScript::find(std::string_view name) const {
  for (const auto& d : declarations) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

ProofScript parse_script(std::string_view input) {
  Parser p(input);
  return p.script();
}

}  // namespace vkp
