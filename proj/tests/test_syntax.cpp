#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "veritas/syntax.hpp"

using namespace veritas::syntax;
using veritas::ordinals::Ord;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }
Term T(const std::string& s) { return parse_term(s); }

// Enumerates all formulas with at most `size` constructor nodes over a
// small fixed alphabet; the brute-force oracle for coding and substitution.
struct Enumerator {
  std::vector<std::vector<Term>> terms;      // by size
  std::vector<std::vector<Formula>> formulas;

  explicit Enumerator(unsigned max_size) {
    terms.resize(max_size + 1);
    formulas.resize(max_size + 1);
    for (unsigned s = 1; s <= max_size; ++s) {
      if (s == 1) {
        terms[1] = {Term::zero(), Term::num(1), Term::var("v")};
      } else {
        for (const Term& t : terms[s - 1]) terms[s].push_back(Term::succ(t));
      }
      // atoms
      for (unsigned i = 1; i + 1 <= s && s >= 3; ++i) {
        unsigned j = s - 1 - i;
        if (j < 1 || j >= terms.size()) continue;
        for (const Term& a : terms[i])
          for (const Term& b : terms[j]) formulas[s].push_back(Formula::eq(a, b));
      }
      if (s >= 2)
        for (const Term& a : terms[s - 1]) formulas[s].push_back(Formula::tr(a));
      // connectives
      if (s >= 2)
        for (const Formula& f : formulas[s - 1]) {
          formulas[s].push_back(Formula::lnot(f));
          formulas[s].push_back(Formula::forall("v", f));
          formulas[s].push_back(Formula::exists("v", f));
        }
      for (unsigned i = 1; i + 1 <= s; ++i) {
        unsigned j = s - 1 - i;
        if (j < 1) continue;
        for (const Formula& a : formulas[i])
          for (const Formula& b : formulas[j]) {
            formulas[s].push_back(Formula::lor(a, b));
            formulas[s].push_back(Formula::land(a, b));
          }
      }
    }
  }

  std::vector<Formula> all() const {
    std::vector<Formula> out;
    for (const auto& fs : formulas) out.insert(out.end(), fs.begin(), fs.end());
    return out;
  }
};

}  // namespace

TEST_CASE("parsing the grammar") {
  Formula f = F("(= 0 0)");
  CHECK(f.kind() == FormulaKind::Eq);
  CHECK(f.terms()[0].kind() == TermKind::Zero);

  Formula g = F("(Tr (quote (= 0 0)))");
  CHECK(g.kind() == FormulaKind::Tr);
  CHECK(g.terms()[0].kind() == TermKind::Quote);

  // implication unfolds to (not _) or _
  Formula h = F("(-> (Tr x) (= x x))");
  CHECK(h == F("(or (not (Tr x)) (= x x))"));
  CHECK(h.kind() == FormulaKind::Or);
  CHECK(h.children()[0].kind() == FormulaKind::Not);

  CHECK_THROWS_AS(F("(= 0"), SyntaxError);
  CHECK_THROWS_AS(F("(blorp 0 0)"), SyntaxError);
  CHECK_THROWS_AS(T("(num x)"), SyntaxError);

  Formula r = F("(TrR (phi 1 0) (num 4))");
  CHECK(r.kind() == FormulaKind::TrRam);
  CHECK(r.level() == veritas::ordinals::epsilon(Ord::zero()));
}

TEST_CASE("print is the exact inverse of parse") {
  Enumerator en(4);
  for (const Formula& f : en.all()) CHECK(parse_formula(print_formula(f)) == f);
  for (const std::string& s :
       {"(subst (quote (= v 0)) (num 3) v)", "(forall. u (eq. u u))",
        "(num. (S 0))", "(tr. (quote (Tr (num 2))))", "(p. 0)",
        "(or. (neg. x) y)", "(and. x x)", "(exists. z 0)"}) {
    Term t = T(s);
    CHECK(parse_term(print_term(t)) == t);
    CHECK(print_term(t) == s);
  }
}

TEST_CASE("encode is injective and decode inverts it (size <= 4)") {
  Enumerator en(4);
  std::vector<Formula> all = en.all();
  CHECK(all.size() > 100);
  std::set<Nat> codes_seen;
  for (const Formula& f : all) {
    CHECK(codes_seen.insert(f.code()).second);  // no collisions
    auto back = decode(f.code());
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!decode(Nat(0)).has_value());  // tag 0 is unassigned
}

TEST_CASE("closed-term evaluation") {
  CHECK(eval_term(T("(num 7)")) == 7);
  CHECK(eval_term(T("(S (S 0))")) == 2);
  Formula f = F("(= 0 0)");
  CHECK(eval_term(Term::quote(f)) == f.code());
  CHECK_THROWS_AS(eval_term(T("x")), EvalError);
  CHECK_THROWS_AS(eval_term(T("(S x)")), EvalError);

  // dotted operations compute the corresponding code operation
  Enumerator en(3);
  for (const Formula& f3 : en.all()) {
    if (!f3.closed()) continue;
    Term q = Term::quote(f3);
    CHECK(eval_term(Term::code_op(CodeOpKind::Neg, {q})) ==
          Formula::lnot(f3).code());
    CHECK(eval_term(Term::code_op(CodeOpKind::Tr, {q})) ==
          Formula::tr(Term::num(f3.code())).code());
  }
  // forall. quotes its binder
  Term fa = T("(forall. v (quote (= v 0)))");
  CHECK(eval_term(fa) == Formula::forall("v", F("(= v 0)")).code());
  CHECK(fa.closed());

  // num(x) yields the code of the numeral of x
  CHECK(eval_term(T("(num. (S (S 0)))")) == Term::num(2).code());

  // eq. builds equation codes from term codes
  Term e = Term::code_op(CodeOpKind::Eq,
                         {Term::num(Term::zero().code()), Term::num(Term::zero().code())});
  CHECK(eval_term(e) == F("(= 0 0)").code());
}

TEST_CASE("substitution on codes agrees with substitution on trees") {
  Term three = Term::num(3);
  // single free occurrence
  Formula f = F("(= v 0)");
  CHECK(substitute(f.code(), three, "v") == F("(= (num 3) 0)").code());
  // bound occurrence untouched
  Formula g = F("(forall v (= v 0))");
  CHECK(substitute(g.code(), three, "v") == g.code());
  CHECK_THROWS_AS(substitute(Nat(0), three, "v"), SyntaxError);

  Enumerator en(4);
  for (const Formula& h : en.all()) {
    CHECK(substitute(h.code(), three, "v") ==
          subst_formula(h, "v", three).code());
  }

  // the quoted-variable convention: Tr(v) with num(c) plugged in for v is
  // the Tr-atom over the numeral of c
  Nat c = F("(= 0 0)").code();
  CHECK(subst_code(Formula::tr(Term::var("v")).code(), codes::num_term_of(c),
                   "v") == codes::tr_atom_of(c));
}

TEST_CASE("negation normal form") {
  Formula a = F("(= 0 0)"), b = F("(= 0 (S 0))");
  CHECK(nnf(Formula::lnot(Formula::lor(a, b))) ==
        Formula::land(Formula::lnot(a), Formula::lnot(b)));
  CHECK(nnf(Formula::lnot(Formula::lnot(a))) == a);
  CHECK(nnf(F("(not (forall v (= v 0)))")) == F("(exists v (not (= v 0)))"));
  CHECK(nnf(F("(not (exists v (= v 0)))")) == F("(forall v (not (= v 0)))"));

  // truth-table oracle on propositional shapes over two atoms
  std::function<bool(const Formula&, bool, bool)> ev =
      [&](const Formula& f, bool va, bool vb) -> bool {
    if (f == a) return va;
    if (f == b) return vb;
    switch (f.kind()) {
      case FormulaKind::Not:
        return !ev(f.children()[0], va, vb);
      case FormulaKind::Or:
        return ev(f.children()[0], va, vb) || ev(f.children()[1], va, vb);
      case FormulaKind::And:
        return ev(f.children()[0], va, vb) && ev(f.children()[1], va, vb);
      default:
        FAIL("unexpected connective");
        return false;
    }
  };
  std::vector<std::vector<Formula>> by_size(6);
  by_size[1] = {a, b};
  for (unsigned s = 2; s <= 5; ++s) {
    for (const Formula& f : by_size[s - 1]) by_size[s].push_back(Formula::lnot(f));
    for (unsigned i = 1; i + 1 <= s; ++i)
      for (const Formula& x : by_size[i])
        for (const Formula& y : by_size[s - 1 - i]) {
          by_size[s].push_back(Formula::lor(x, y));
          by_size[s].push_back(Formula::land(x, y));
        }
  }
  for (unsigned s = 1; s <= 5; ++s)
    for (const Formula& f : by_size[s]) {
      Formula n = nnf(f);
      CHECK(is_nnf(n));
      CHECK(nnf(n) == n);  // idempotent
      for (bool va : {false, true})
        for (bool vb : {false, true}) CHECK(ev(f, va, vb) == ev(n, va, vb));
    }
}

TEST_CASE("logical complexity") {
  CHECK(complexity(F("(= 0 0)")) == 0);
  CHECK(complexity(Formula::land(F("(= 0 0)"), F("(Tr (num 5))"))) == 1);
  CHECK(complexity(F("(forall x (or (= x x) (= x 0)))")) == 2);
  Enumerator en(5);
  for (const Formula& f : en.all())
    CHECK(complexity(nnf(Formula::lnot(f))) == complexity(nnf(f)));
}

TEST_CASE("language recognizers") {
  Nat tr5 = F("(Tr (num 5))").code();
  CHECK(!is_sentence(tr5, LanguageTag::ln()));
  CHECK(is_sentence(tr5, LanguageTag::lt()));
  CHECK(is_sentence(F("(TrR 0 (num 5))").code(),
                    LanguageTag::lram(Ord::nat(1))));
  CHECK(!is_sentence(F("(TrR 0 (num 5))").code(),
                     LanguageTag::lram(Ord::zero())));
  CHECK(!is_sentence(F("(= v 0)").code(), LanguageTag::ln()));  // free var
  CHECK(!is_sentence(F("(Tr (num 1))").code(),
                     LanguageTag::lram(Ord::nat(2))));  // unramified Tr
  CHECK(is_sentence(F("(P 0)").code(), LanguageTag::lpt()));
  CHECK(!is_sentence(F("(P 0)").code(), LanguageTag::lt()));

  // LRam(0) recognizes exactly the arithmetical sentences
  for (const std::string& s : {"(= 0 0)", "(forall v (= v v))"}) {
    CHECK(is_sentence(F(s).code(), LanguageTag::lram(Ord::zero())));
    CHECK(is_sentence(F(s).code(), LanguageTag::ln()));
  }

  // monotone in the ramification bound
  std::vector<Ord> levels{Ord::zero(), Ord::nat(1), Ord::nat(2),
                          veritas::ordinals::epsilon(Ord::zero())};
  Nat c = F("(TrR 1 (num 9))").code();
  bool prev = false;
  for (const Ord& g : levels) {
    bool now = is_sentence(c, LanguageTag::lram(g));
    CHECK((prev ? now : true));
    prev = now;
  }
}

TEST_CASE("diagonalization") {
  Formula liar = diag(F("(not (Tr (self)))"));
  CHECK(liar.kind() == FormulaKind::Not);
  Term self_term = liar.children()[0].terms()[0];
  CHECK(self_term.kind() == TermKind::SelfQuote);
  CHECK(eval_term(self_term) == liar.code());
  CHECK(decode(eval_term(self_term)) == liar);

  Formula teller = diag(F("(Tr (self))"));
  CHECK(teller != liar);
  CHECK(eval_term(teller.terms()[0]) == teller.code());

  // deterministic: the same template yields the same fixed point
  CHECK(diag(F("(not (Tr (self)))")) == liar);

  // the negation of the Liar keeps the same referent
  Formula notliar = nnf_not(liar);
  CHECK(notliar.kind() == FormulaKind::Tr);
  CHECK(eval_term(notliar.terms()[0]) == liar.code());

  CHECK_THROWS_AS(diag(F("(or (Tr (self)) (Tr (self)))")), SyntaxError);
  CHECK_THROWS_AS(diag(F("(= 0 0)")), SyntaxError);
}
