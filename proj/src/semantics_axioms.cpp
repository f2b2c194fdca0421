#include <sstream>

#include "veritas/semantics.hpp"

// Axiom-soundness checking over a pool fixed point.
//
// Universal variables are instantiated at pool codes and at the closed
// terms occurring in the pool; every instance is evaluated in the model
// (N, X).  Tr at a code c is read as follows:
//   - c decodes to a pooled sentence: membership of its NNF in X;
//   - c decodes to a closed arithmetical sentence: its (N-bounded) truth;
//   - c decodes to any other closed sentence: one unfolding of the jump
//     equation, i.e. X |=_e (decoded sentence) for the theory's scheme --
//     at a fixed point this is exactly membership in the ideal extension;
//   - otherwise false (normality: only sentences are true).

namespace veritas::semantics {

using syntax::CodeOpKind;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::Term;
using syntax::TermKind;

namespace {

struct Checker {
  const Universe& u;
  const TruthSet& x;
  Scheme e;
  AxiomReport report;

  void add(const std::string& axiom, const std::string& inst, bool ok,
           const std::string& detail = "") {
    report.instances.push_back({axiom, inst,
                                ok ? InstanceStatus::Ok : InstanceStatus::Fail,
                                detail});
    ok ? ++report.checked : ++report.failures;
  }
  void skip(const std::string& axiom, const std::string& why) {
    report.instances.push_back({axiom, "-", InstanceStatus::Skip, why});
    ++report.skipped;
  }

  bool tr_truth(const Nat& c) const {
    auto f = syntax::decode(c);
    if (!f || !f->closed()) return false;
    Formula n = syntax::nnf(*f);
    if (auto idx = u.index_of_code(n.code())) return x.contains(*idx);
    if (syntax::formula_in_language(n, syntax::LanguageTag::ln()))
      return classical_sat(u, x, &u.p_ext(), n);
    return sv_sat(e, u, x, n);
  }

  static void harvest(const Term& t, std::map<Nat, Term>& out) {
    if (t.closed()) out.emplace(t.code(), t);
    for (const Term& a : t.args()) harvest(a, out);
  }
  static void harvest(const Formula& f, std::map<Nat, Term>& out) {
    for (const Term& t : f.terms()) harvest(t, out);
    for (const Formula& c : f.children()) harvest(c, out);
    if (f.kind() == FormulaKind::Forall || f.kind() == FormulaKind::Exists)
      harvest(f.body(), out);
  }

  std::vector<Term> closed_terms() const {
    std::map<Nat, Term> m;
    for (std::size_t i = 0; i < u.size(); ++i) harvest(u.sentence(i), m);
    for (std::size_t i = 0; i < u.size(); ++i)
      m.emplace(Term::num(u.code(i)).code(), Term::num(u.code(i)));
    std::vector<Term> out;
    for (auto& [c, t] : m) out.push_back(t);
    if (out.size() > 24) out.erase(out.begin() + 24, out.end());
    return out;
  }

  std::string pool_name(std::size_t i) const {
    return syntax::print_formula(u.sentence(i));
  }

  // V1/VF1: truth biconditionals for equations and inequations.
  void v1(const std::string& name) {
    auto ts = closed_terms();
    for (const Term& s : ts)
      for (const Term& t : ts) {
        Nat vs = syntax::eval_term(s), vt = syntax::eval_term(t);
        Formula eq = Formula::eq(s, t);
        bool ok1 = tr_truth(eq.code()) == (vs == vt);
        bool ok2 = tr_truth(Formula::lnot(eq).code()) == (vs != vt);
        add(name,
            syntax::print_term(s) + " , " + syntax::print_term(t),
            ok1 && ok2);
      }
  }

  // V2/VF2: recognized PAT axioms are true.
  void v2(const std::string& name) {
    bool any = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!syntax::is_pat_axiom(u.sentence(i))) continue;
      any = true;
      add(name, pool_name(i), tr_truth(u.code(i)));
    }
    if (!any) skip(name, "no PAT-axiom shapes in pool");
  }

  // V3/VF3: from all numeral instances to the universal quantification.
  void v3(const std::string& name) {
    bool any = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Formula& f = u.sentence(i);
      if (f.kind() != FormulaKind::Forall) continue;
      any = true;
      bool all_inst = true;
      for (unsigned z = 0; z <= u.numeral_bound(); ++z)
        all_inst = all_inst &&
                   tr_truth(syntax::subst_formula(f.body(), f.bound_var(),
                                                  Term::num(z))
                                .code());
      bool ok = !all_inst || tr_truth(u.code(i));
      add(name, pool_name(i), ok);
    }
    if (!any) skip(name, "no universal sentences in pool");
  }

  // V4 family: Tr(x) vs Tr(quote Tr(x-dot)).
  void v4(const std::string& name, bool biconditional) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      bool a = x.contains(i);
      bool b = tr_truth(Formula::tr(Term::num(u.code(i))).code());
      bool ok = biconditional ? (a == b) : (!a || b);
      add(name, pool_name(i), ok);
    }
  }

  // V5 family: Tr(quote not Tr(x-dot)) vs Tr(neg. x).
  enum class Dir { Forward, Backward, Both };
  void v5(const std::string& name, Dir d) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      bool a =
          tr_truth(Formula::lnot(Formula::tr(Term::num(u.code(i)))).code());
      bool b = x.contains(u.negation_of(i));
      bool ok = d == Dir::Forward ? (!a || b)
                : d == Dir::Backward ? (!b || a)
                                     : (a == b);
      add(name, pool_name(i), ok);
    }
  }

  // V6/VF6: modus ponens inside Tr.
  void v6(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        bool imp =
            tr_truth(Formula::implies(u.sentence(i), u.sentence(j)).code());
        bool ok = !imp || !x.contains(i) || x.contains(j);
        add(name, pool_name(i) + " -> " + pool_name(j), ok);
      }
  }

  Formula internal_consistency(std::size_t i) const {
    Term n = Term::num(u.code(i));
    return Formula::lnot(Formula::land(
        Formula::tr(n), Formula::tr(Term::code_op(CodeOpKind::Neg, {n}))));
  }
  Formula internal_completeness(std::size_t i) const {
    Term n = Term::num(u.code(i));
    return Formula::lor(Formula::tr(n),
                        Formula::tr(Term::code_op(CodeOpKind::Neg, {n})));
  }

  // V7 (VF): internal consistency.
  void v7_cons(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i)
      add(name, pool_name(i), tr_truth(internal_consistency(i).code()));
  }
  // VF-7: conditional consistency, Tr x -> Tr(quote not Tr(neg. x)).
  void v7_conditional(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      Term n = Term::num(u.code(i));
      bool b = tr_truth(
          Formula::lnot(Formula::tr(Term::code_op(CodeOpKind::Neg, {n})))
              .code());
      add(name, pool_name(i), !x.contains(i) || b);
    }
  }
  // VF7 (VFM): internal consistency and completeness.
  void v7_bicond(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      bool ok = tr_truth(internal_consistency(i).code()) &&
                tr_truth(internal_completeness(i).code());
      add(name, pool_name(i), ok);
    }
  }
  // VF7 left-to-right only (VFW).
  void v7_left(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i)
      add(name, pool_name(i), tr_truth(internal_consistency(i).code()));
  }

  // V8/VF8: normality.  Pool codes make the internal implication trivially
  // true; the content cases are non-sentence codes.
  void v8(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i)
      add(name, pool_name(i), true, "sentence code; consequent true");
    for (const Nat& junk :
         {Nat(0), Formula::eq(Term::var("v"), Term::zero()).code()}) {
      bool ok = tr_truth(
          Formula::lnot(Formula::tr(Term::num(junk))).code());
      add(name, "non-sentence code " + junk.str(), ok);
    }
  }

  // V9 schema: Tr(quote phi) -> phi, per pool sentence.
  void v9(const std::string& name) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      bool ok =
          !x.contains(i) || classical_sat(u, x, &u.p_ext(), u.sentence(i));
      add(name, pool_name(i), ok);
    }
  }

  // P-Disq: Tr(p. t) <-> P(t-value).
  void p_disq(const std::string& name) {
    std::vector<Term> ts = closed_terms();
    for (unsigned k = 0; k <= u.numeral_bound(); ++k)
      ts.push_back(Term::num(k));
    for (const Term& t : ts) {
      Nat v = syntax::eval_term(t);
      bool lhs = tr_truth(Formula::p_atom(t).code());
      bool rhs = u.p_ext().count(v) > 0;
      add(name, syntax::print_term(t), lhs == rhs);
    }
  }
};

}  // namespace

AxiomReport check_axioms(Theory t, const Universe& u, const TruthSet& x,
                         std::optional<Scheme> unfold_scheme) {
  Checker c{u, x, unfold_scheme.value_or(scheme_of(t)), {}};
  c.report.theory = t;
  using D = Checker::Dir;
  switch (t) {
    case Theory::VF:
      c.v1("V1"); c.v2("V2"); c.v3("V3"); c.v4("V4", false);
      c.v5("V5", D::Forward); c.v6("V6"); c.v7_cons("V7"); c.v8("V8");
      c.v9("V9");
      break;
    case Theory::VFminus:
      c.v1("VF-1"); c.v2("VF-2"); c.v3("VF-3"); c.v4("VF-4", false);
      c.v5("VF-5", D::Both); c.v6("VF-6"); c.v7_conditional("VF-7");
      c.v8("VF-8"); c.v9("VF-9");
      break;
    case Theory::VFM:
      c.v1("VF1"); c.v2("VF2"); c.v3("VF3"); c.v4("VF4", true);
      c.v5("VF5", D::Both); c.v6("VF6"); c.v7_bicond("VF7"); c.v8("VF8");
      break;
    case Theory::VFMminus:
      c.v1("VF1"); c.v2("VF2"); c.v3("VF3"); c.v4("VF4*", false);
      c.v5("VF5", D::Both); c.v6("VF6"); c.v7_bicond("VF7"); c.v8("VF8");
      break;
    case Theory::VFW:
      // Tr-Elim is a rule, not an axiom; it is not model-checked here.
      // VF5 is kept in its right-to-left direction: the converse is the
      // internal-completeness content VFW drops.
      c.v1("VF1"); c.v2("VF2"); c.v3("VF3"); c.v4("VF4", true);
      c.v5("VF5<-", D::Backward); c.v6("VF6"); c.v7_left("VF7<-"); c.v8("VF8");
      break;
    case Theory::VFMP:
      c.v1("VF1"); c.v2("VF2"); c.v3("VF3"); c.v4("VF4", true);
      c.v5("VF5", D::Both); c.v6("VF6"); c.v7_bicond("VF7"); c.v8("VF8");
      c.p_disq("P-Disq");
      break;
  }
  return std::move(c.report);
}

std::string format_report(const AxiomReport& r, bool verbose) {
  std::ostringstream os;
  os << "theory " << to_string(r.theory) << ": " << r.checked << " ok, "
     << r.failures << " failed, " << r.skipped << " skipped\n";
  for (const auto& i : r.instances) {
    if (!verbose && i.status == InstanceStatus::Ok) continue;
    const char* s = i.status == InstanceStatus::Ok
                        ? "ok  "
                        : i.status == InstanceStatus::Fail ? "FAIL" : "skip";
    os << "  [" << s << "] " << i.axiom << "  " << i.instance;
    if (!i.detail.empty()) os << "  (" << i.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace veritas::semantics
