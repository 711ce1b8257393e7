#include "vkp/printer.hpp"

namespace vkp {

namespace {

// Formula precedence levels, loosest first.
enum FLevel { kImpl = 0, kDisj = 1, kConj = 2, kUnary = 3 };

void print(const Formula& f, int level, std::string& out) {
  auto paren = [&](int own, auto&& body) {
    if (level > own) out += '(';
    body();
    if (level > own) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Falsum:
      out += "False";
      return;
    case Formula::Kind::Impl:
      if (f.is_negation()) {
        out += '~';
        print(f.left(), kUnary, out);
        return;
      }
      paren(kImpl, [&] {
        print(f.left(), kDisj, out);
        out += " -> ";
        print(f.right(), kImpl, out);
      });
      return;
    case Formula::Kind::Disj:
      paren(kDisj, [&] {
        print(f.left(), kConj, out);
        out += " \\/ ";
        print(f.right(), kDisj, out);
      });
      return;
    case Formula::Kind::Conj:
      paren(kConj, [&] {
        print(f.left(), kUnary, out);
        out += " /\\ ";
        print(f.right(), kConj, out);
      });
      return;
  }
}

// Term positions.
enum class Pos { Top, Function, Argument, Operand };

bool is_prefix_op(const Term& t) {
  return t.is(TermKind::Proj) || t.is(TermKind::Inj) || t.is(TermKind::Exfalso);
}

bool needs_parens(const Term& t, Pos pos) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Pair:
      return false;
    case TermKind::App:
      return pos == Pos::Argument || pos == Pos::Operand;
    case TermKind::Proj:
    case TermKind::Inj:
    case TermKind::Exfalso:
      return pos == Pos::Function || pos == Pos::Argument;
    default:
      return pos != Pos::Top;
  }
}

void print(const Term& t, Pos pos, std::string& out);

void print_branches(const Term& t, std::string& out) {
  out += " of { ";
  out += t.case_binder();
  out += " => ";
  print(t.left_branch(), Pos::Top, out);
  out += " | ";
  out += t.case_binder();
  out += " => ";
  print(t.right_branch(), Pos::Top, out);
  for (const auto& u : t.us()) {
    out += " | ";
    out += t.u_binder();
    out += " => ";
    print(u, Pos::Top, out);
  }
  out += " }";
}

void print_body(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Abs:
      out += "fun (" + t.name() + " : " + to_string(t.annotation()) + ") => ";
      print(t.body(), Pos::Top, out);
      return;
    case TermKind::App:
      print(t.fun(), Pos::Function, out);
      out += ' ';
      print(t.arg(), Pos::Argument, out);
      return;
    case TermKind::Exfalso:
      out += "exfalso[" + to_string(t.annotation()) + "] ";
      print(t.arg(), Pos::Operand, out);
      return;
    case TermKind::Pair:
      out += '(';
      print(t.child(0), Pos::Top, out);
      out += ", ";
      print(t.child(1), Pos::Top, out);
      out += ')';
      return;
    case TermKind::Proj:
      out += t.index() == 1 ? "proj1 " : "proj2 ";
      print(t.arg(), Pos::Operand, out);
      return;
    case TermKind::Inj:
      out += (t.index() == 1 ? "inj1[" : "inj2[") + to_string(t.annotation()) + "] ";
      print(t.arg(), Pos::Operand, out);
      return;
    case TermKind::Case:
      out += "case ";
      print(t.scrutinee(), Pos::Top, out);
      print_branches(t, out);
      return;
    case TermKind::Harrop:
      out += "hop (" + t.name() + " : " + to_string(t.annotation()) + "). ";
      print(t.main(), Pos::Top, out);
      print_branches(t, out);
      return;
    case TermKind::Visser: {
      out += "visser (";
      bool first = true;
      for (const auto& b : t.binders()) {
        if (!first) out += ", ";
        first = false;
        out += b.name + " : " + to_string(b.type);
      }
      out += "). ";
      print(t.main(), Pos::Top, out);
      print_branches(t, out);
      return;
    }
  }
}

void print(const Term& t, Pos pos, std::string& out) {
  const bool parens = needs_parens(t, pos);
  if (parens) out += '(';
  print_body(t, out);
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, kImpl, out);
  return out;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, Pos::Top, out);
  return out;
}

}  // namespace vkp
