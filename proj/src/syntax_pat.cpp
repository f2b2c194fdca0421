#include "veritas/syntax.hpp"

namespace veritas::syntax {

namespace {

bool is_or(const Formula& f) { return f.kind() == FormulaKind::Or; }
bool is_not(const Formula& f) { return f.kind() == FormulaKind::Not; }
const Formula& l(const Formula& f) { return f.children()[0]; }
const Formula& r(const Formula& f) { return f.children()[1]; }

// forall v (v = v)
bool is_reflexivity(const Formula& f) {
  if (f.kind() != FormulaKind::Forall) return false;
  const Formula& b = f.body();
  return b.kind() == FormulaKind::Eq && b.terms()[0] == b.terms()[1] &&
         b.terms()[0] == Term::var(f.bound_var());
}

// forall x forall y (x = y -> y = x)
bool is_symmetry(const Formula& f) {
  if (f.kind() != FormulaKind::Forall) return false;
  const Formula& g = f.body();
  if (g.kind() != FormulaKind::Forall) return false;
  Term x = Term::var(f.bound_var()), y = Term::var(g.bound_var());
  return g.body() == Formula::implies(Formula::eq(x, y), Formula::eq(y, x));
}

// forall x (not (S x = 0))
bool is_succ_nonzero(const Formula& f) {
  if (f.kind() != FormulaKind::Forall) return false;
  Term x = Term::var(f.bound_var());
  return f.body() == Formula::lnot(Formula::eq(Term::succ(x), Term::zero()));
}

// forall x forall y (S x = S y -> x = y)
bool is_succ_injective(const Formula& f) {
  if (f.kind() != FormulaKind::Forall) return false;
  const Formula& g = f.body();
  if (g.kind() != FormulaKind::Forall) return false;
  Term x = Term::var(f.bound_var()), y = Term::var(g.bound_var());
  return g.body() == Formula::implies(
                         Formula::eq(Term::succ(x), Term::succ(y)),
                         Formula::eq(x, y));
}

// (A(0) and forall x (A(x) -> A(S x))) -> forall x A(x)
bool is_induction(const Formula& f) {
  if (!is_or(f) || !is_not(l(f))) return false;
  const Formula& conclusion = r(f);
  if (conclusion.kind() != FormulaKind::Forall) return false;
  const std::string& v = conclusion.bound_var();
  const Formula& a = conclusion.body();
  Formula premise = Formula::land(
      subst_formula(a, v, Term::zero()),
      Formula::forall(v, Formula::implies(
                             a, subst_formula(a, v, Term::succ(Term::var(v))))));
  return l(f).children()[0] == premise;
}

// A -> (B -> (A and B))
bool is_conj_intro(const Formula& f) {
  if (!is_or(f) || !is_not(l(f)) || !is_or(r(f)) || !is_not(l(r(f))))
    return false;
  const Formula& a = l(f).children()[0];
  const Formula& b = l(r(f)).children()[0];
  return r(r(f)) == Formula::land(a, b);
}

// A -> ((not A) -> 0 = S 0)
bool is_non_contradiction(const Formula& f) {
  if (!is_or(f) || !is_not(l(f)) || !is_or(r(f)) || !is_not(l(r(f))))
    return false;
  const Formula& a = l(f).children()[0];
  if (l(r(f)).children()[0] != Formula::lnot(a)) return false;
  return r(r(f)) == Formula::eq(Term::zero(), Term::succ(Term::zero()));
}

// (s = t) -> (Q(s) -> Q(t)) for an atomic predicate Q in {Tr, P}
bool is_leibniz_atom(const Formula& f) {
  if (!is_or(f) || !is_not(l(f)) || !is_or(r(f)) || !is_not(l(r(f))))
    return false;
  const Formula& eq = l(f).children()[0];
  if (eq.kind() != FormulaKind::Eq) return false;
  const Formula& qs = l(r(f)).children()[0];
  const Formula& qt = r(r(f));
  if (qs.kind() != qt.kind()) return false;
  if (qs.kind() != FormulaKind::Tr && qs.kind() != FormulaKind::P) return false;
  return qs.terms()[0] == eq.terms()[0] && qt.terms()[0] == eq.terms()[1];
}

}  // namespace

bool is_pat_axiom(const Formula& f) {
  return is_reflexivity(f) || is_symmetry(f) || is_succ_nonzero(f) ||
         is_succ_injective(f) || is_induction(f) || is_conj_intro(f) ||
         is_non_contradiction(f) || is_leibniz_atom(f);
}

}  // namespace veritas::syntax
