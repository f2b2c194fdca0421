#include <algorithm>
#include <cctype>
#include <sstream>

#include "veritas/syntax.hpp"

// Formula and term front end.
//
// Grammar (S-expressions):
//   formula: (= t t) (Tr t) (TrR <ord> t) (P t)
//            (not f) (or f g) (and f g) (-> f g) (forall v f) (exists v f)
//            (diag f)      builds the fixed point of a one-hole template
//   term:    0  v  (S t) (num <nat>) (num. t) (quote f) (self) (self <id>)
//            (neg. t) (or. t t) (and. t t) (forall. v t) (exists. v t)
//            (tr. t) (eq. t t) (p. t) (subst t t v)
//
// (-> f g) is sugar for (or (not f) g); the printer emits primitive
// constructors only, so print . parse is the identity on formulas.
// (self) is the unresolved diag hole; resolved self-reference prints as
// (self <id>).

namespace veritas::syntax {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(msg + " at position " + std::to_string(pos));
  }
  std::string token() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(' || c == ')') {
      ++pos;
      return std::string(1, c);
    }
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    return s.substr(start, pos - start);
  }
  void expect(const std::string& t) {
    std::string got = token();
    if (got != t) fail("expected '" + t + "', got '" + got + "'");
  }
  // Consumes one balanced expression and returns its text (for ordinals).
  std::string balanced() {
    skip_ws();
    std::size_t start = pos;
    std::string t = token();
    if (t != "(") return t;
    int depth = 1;
    while (depth > 0) {
      std::string u = token();
      if (u == "(") ++depth;
      if (u == ")") --depth;
    }
    return s.substr(start, pos - start);
  }
};

bool is_nat_token(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

bool is_identifier(const std::string& t) {
  if (t.empty() || std::isdigit(static_cast<unsigned char>(t[0]))) return false;
  return std::all_of(t.begin(), t.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

Term parse_term_expr(Lexer& lx);
Formula parse_formula_expr(Lexer& lx);

std::string parse_var(Lexer& lx) {
  std::string v = lx.token();
  if (!is_identifier(v)) lx.fail("expected a variable name, got '" + v + "'");
  return v;
}

Term parse_term_list(Lexer& lx) {
  std::string head = lx.token();
  auto close = [&] { lx.expect(")"); };
  if (head == "S") {
    Term t = parse_term_expr(lx);
    close();
    return Term::succ(t);
  }
  if (head == "num") {
    lx.skip_ws();
    std::size_t save = lx.pos;
    std::string t = lx.token();
    if (is_nat_token(t)) {
      close();
      return Term::num(Nat(t));
    }
    lx.pos = save;
    lx.fail("(num ...) takes a decimal natural; use (num. t) for the "
            "numeral-of function");
  }
  if (head == "num.") {
    Term t = parse_term_expr(lx);
    close();
    return Term::num_of(t);
  }
  if (head == "quote") {
    Formula f = parse_formula_expr(lx);
    close();
    return Term::quote(f);
  }
  if (head == "self") {
    if (lx.peek() == ')') {
      close();
      return Term::self_quote(0);
    }
    std::string idt = lx.token();
    if (!is_nat_token(idt)) lx.fail("(self <id>) takes a decimal id");
    close();
    std::uint64_t id = std::stoull(idt);
    self_referent(id);  // validates the id
    return Term::self_quote(id);
  }
  auto unary = [&](CodeOpKind op) {
    Term a = parse_term_expr(lx);
    close();
    return Term::code_op(op, {a});
  };
  auto binary = [&](CodeOpKind op) {
    Term a = parse_term_expr(lx);
    Term b = parse_term_expr(lx);
    close();
    return Term::code_op(op, {a, b});
  };
  if (head == "neg.") return unary(CodeOpKind::Neg);
  if (head == "tr.") return unary(CodeOpKind::Tr);
  if (head == "p.") return unary(CodeOpKind::P);
  if (head == "or.") return binary(CodeOpKind::Or);
  if (head == "and.") return binary(CodeOpKind::And);
  if (head == "eq.") return binary(CodeOpKind::Eq);
  if (head == "forall." || head == "exists.") {
    std::string v = parse_var(lx);
    Term body = parse_term_expr(lx);
    close();
    return Term::code_op(
        head == "forall." ? CodeOpKind::Forall : CodeOpKind::Exists,
        {Term::var(v), body});
  }
  if (head == "subst") {
    Term x = parse_term_expr(lx);
    Term t = parse_term_expr(lx);
    std::string v = parse_var(lx);
    close();
    return Term::subst(x, t, v);
  }
  lx.fail("unknown term operator '" + head + "'");
}

Term parse_term_expr(Lexer& lx) {
  std::string t = lx.token();
  if (t == "(") return parse_term_list(lx);
  if (t == "0") return Term::zero();
  if (is_identifier(t)) return Term::var(t);
  throw SyntaxError("unexpected term token '" + t + "'");
}

Formula parse_formula_list(Lexer& lx) {
  std::string head = lx.token();
  auto close = [&] { lx.expect(")"); };
  if (head == "=") {
    Term s = parse_term_expr(lx);
    Term t = parse_term_expr(lx);
    close();
    return Formula::eq(s, t);
  }
  if (head == "Tr") {
    Term t = parse_term_expr(lx);
    close();
    return Formula::tr(t);
  }
  if (head == "TrR") {
    std::string ord_text = lx.balanced();
    ordinals::Ord level = ordinals::parse_ord(ord_text);
    Term t = parse_term_expr(lx);
    close();
    return Formula::tr_ram(level, t);
  }
  if (head == "P") {
    Term t = parse_term_expr(lx);
    close();
    return Formula::p_atom(t);
  }
  if (head == "not") {
    Formula f = parse_formula_expr(lx);
    close();
    return Formula::lnot(f);
  }
  if (head == "or" || head == "and") {
    Formula a = parse_formula_expr(lx);
    Formula b = parse_formula_expr(lx);
    close();
    return head == "or" ? Formula::lor(a, b) : Formula::land(a, b);
  }
  if (head == "->") {
    Formula a = parse_formula_expr(lx);
    Formula b = parse_formula_expr(lx);
    close();
    return Formula::implies(a, b);
  }
  if (head == "forall" || head == "exists") {
    std::string v = parse_var(lx);
    Formula f = parse_formula_expr(lx);
    close();
    return head == "forall" ? Formula::forall(v, f) : Formula::exists(v, f);
  }
  if (head == "diag") {
    Formula f = parse_formula_expr(lx);
    close();
    return diag(f);
  }
  lx.fail("unknown formula operator '" + head + "'");
}

Formula parse_formula_expr(Lexer& lx) {
  std::string t = lx.token();
  if (t != "(") throw SyntaxError("expected '(' to start a formula");
  return parse_formula_list(lx);
}

void print_term_to(std::ostream& os, const Term& t);
void print_formula_to(std::ostream& os, const Formula& f);

void print_term_to(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      os << t.var_name();
      return;
    case TermKind::Zero:
      os << "0";
      return;
    case TermKind::Succ:
      os << "(S ";
      print_term_to(os, t.args()[0]);
      os << ")";
      return;
    case TermKind::Num:
      os << "(num " << t.num_value() << ")";
      return;
    case TermKind::Quote:
      os << "(quote ";
      print_formula_to(os, t.quoted());
      os << ")";
      return;
    case TermKind::SelfQuote:
      if (t.self_id() == 0)
        os << "(self)";
      else
        os << "(self " << t.self_id() << ")";
      return;
    case TermKind::CodeOp: {
      static const char* names[] = {"neg.",    "or.",      "and.", "forall.",
                                    "exists.", "tr.",      "eq.",  "p."};
      os << "(" << names[static_cast<unsigned>(t.op())];
      bool binder =
          t.op() == CodeOpKind::Forall || t.op() == CodeOpKind::Exists;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        os << " ";
        if (binder && i == 0)
          os << t.args()[0].var_name();
        else
          print_term_to(os, t.args()[i]);
      }
      os << ")";
      return;
    }
    case TermKind::Subst:
      os << "(subst ";
      print_term_to(os, t.args()[0]);
      os << " ";
      print_term_to(os, t.args()[1]);
      os << " " << t.subst_var() << ")";
      return;
    case TermKind::NumOf:
      os << "(num. ";
      print_term_to(os, t.args()[0]);
      os << ")";
      return;
  }
}

void print_formula_to(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      os << "(= ";
      print_term_to(os, f.terms()[0]);
      os << " ";
      print_term_to(os, f.terms()[1]);
      os << ")";
      return;
    case FormulaKind::Tr:
      os << "(Tr ";
      print_term_to(os, f.terms()[0]);
      os << ")";
      return;
    case FormulaKind::TrRam:
      os << "(TrR " << ordinals::to_text(f.level()) << " ";
      print_term_to(os, f.terms()[0]);
      os << ")";
      return;
    case FormulaKind::P:
      os << "(P ";
      print_term_to(os, f.terms()[0]);
      os << ")";
      return;
    case FormulaKind::Not:
      os << "(not ";
      print_formula_to(os, f.children()[0]);
      os << ")";
      return;
    case FormulaKind::Or:
    case FormulaKind::And:
      os << (f.kind() == FormulaKind::Or ? "(or " : "(and ");
      print_formula_to(os, f.children()[0]);
      os << " ";
      print_formula_to(os, f.children()[1]);
      os << ")";
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      os << (f.kind() == FormulaKind::Forall ? "(forall " : "(exists ")
         << f.bound_var() << " ";
      print_formula_to(os, f.body());
      os << ")";
      return;
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Lexer lx{text};
  Formula f = parse_formula_expr(lx);
  if (!lx.eof()) lx.fail("trailing input after formula");
  return f;
}

Term parse_term(const std::string& text) {
  Lexer lx{text};
  Term t = parse_term_expr(lx);
  if (!lx.eof()) lx.fail("trailing input after term");
  return t;
}

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_formula_to(os, f);
  return os.str();
}

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_term_to(os, t);
  return os.str();
}

}  // namespace veritas::syntax
