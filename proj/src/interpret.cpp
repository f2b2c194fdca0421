#include "veritas/interpret.hpp"

#include <sstream>

namespace veritas::interpret {

namespace cs = syntax::codes;
using syntax::CodeOpKind;
using syntax::FormulaKind;
using syntax::Term;
using syntax::TermKind;

namespace {

bool mem(const Universe& u, const TruthSet& X, const Nat& c) {
  auto i = u.index_of_code(c);
  return i && X.contains(*i);
}

bool pooled(const Universe& u, const Nat& c) {
  return u.index_of_code(c).has_value();
}

// True arithmetical literal (atom or negated atom of L_N), closed.
bool true_arith_literal(const Universe& u, const Nat& x) {
  auto f = syntax::decode(x);
  if (!f || !f->closed() || !f->is_literal()) return false;
  if (!syntax::formula_in_language(*f, syntax::LanguageTag::ln())) return false;
  return semantics::classical_sat(u, TruthSet{}, nullptr, *f);
}

std::optional<Nat> term_value(const Nat& term_code) {
  auto t = syntax::decode_term(term_code);
  if (!t || !t->closed()) return std::nullopt;
  return syntax::eval_term(*t);
}

struct Pattern {
  unsigned tag = 0;
  Nat a, b;
  bool match(const Nat& c, unsigned want) {
    auto [t, payload] = cs::unpair(c);
    if (t != want) return false;
    tag = want;
    auto [x, y] = cs::unpair(payload);
    a = x;
    b = y;
    return true;
  }
  // unary payload
  bool match1(const Nat& c, unsigned want) {
    auto [t, payload] = cs::unpair(c);
    if (t != want) return false;
    tag = want;
    a = payload;
    return true;
  }
};

std::optional<std::string> binder_name(const Nat& var_code) {
  auto [t, payload] = cs::unpair(var_code);
  if (t != cs::kVar) return std::nullopt;
  return cs::var_name_decode(payload);
}

}  // namespace

Nat falsum_code() {
  return syntax::Formula::eq(Term::zero(), Term::succ(Term::zero())).code();
}

bool xi(const Nat& x, const TruthSet& X, const Universe& u) {
  auto in = [&](const Nat& c) { return mem(u, X, c); };
  unsigned N = u.numeral_bound();

  if (true_arith_literal(u, x)) return true;

  Pattern p;
  // double negation
  if (p.match1(x, cs::kNot)) {
    Pattern q;
    if (q.match1(p.a, cs::kNot) && in(q.a)) return true;
  }
  // disjunction / conjunction
  if (p.match(x, cs::kOr) && (in(p.a) || in(p.b))) return true;
  if (p.match(x, cs::kAnd) && in(p.a) && in(p.b)) return true;
  // negated disjunction / conjunction
  if (p.match1(x, cs::kNot)) {
    Pattern q;
    if (q.match(p.a, cs::kOr) && in(cs::neg_of(q.a)) && in(cs::neg_of(q.b)))
      return true;
    if (q.match(p.a, cs::kAnd) && (in(cs::neg_of(q.a)) || in(cs::neg_of(q.b))))
      return true;
  }
  // quantifiers, witnesses over 0..N
  auto instances = [&](const Nat& body, const Nat& var_code, bool negate,
                       bool need_all) -> std::optional<bool> {
    auto v = binder_name(var_code);
    if (!v) return std::nullopt;
    bool all = true, some = false;
    for (unsigned z = 0; z <= N; ++z) {
      Nat inst = syntax::subst_code(body, cs::num_term_of(z), *v);
      if (negate) inst = cs::neg_of(inst);
      bool m = in(inst);
      all = all && m;
      some = some || m;
    }
    return need_all ? all : some;
  };
  if (p.match(x, cs::kForall)) {
    auto r = instances(p.b, p.a, false, true);
    if (r && *r) return true;
  }
  if (p.match(x, cs::kExists)) {
    auto r = instances(p.b, p.a, false, false);
    if (r && *r) return true;
  }
  if (p.match1(x, cs::kNot)) {
    Pattern q;
    if (q.match(p.a, cs::kForall)) {
      auto r = instances(q.b, q.a, true, false);
      if (r && *r) return true;
    }
    if (q.match(p.a, cs::kExists)) {
      auto r = instances(q.b, q.a, true, true);
      if (r && *r) return true;
    }
  }
  // Tr(t) with the value of t in X
  if (p.match1(x, cs::kTr)) {
    auto v = term_value(p.a);
    if (v && in(*v)) return true;
  }
  // not Tr(t) with the negated value in X, or the value not a sentence code
  if (p.match1(x, cs::kNot)) {
    Pattern q;
    if (q.match1(p.a, cs::kTr)) {
      auto v = term_value(q.a);
      if (v && (in(cs::neg_of(*v)) ||
                !syntax::is_sentence(*v, syntax::LanguageTag::lt())))
        return true;
    }
  }
  return false;
}

TruthSet sk_jump(const TruthSet& X, const Universe& u) {
  TruthSet out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (xi(u.code(i), X, u)) out.bits |= 1ull << i;
  return out;
}

semantics::LfpResult sk_lfp(const Universe& u) {
  semantics::LfpResult r;
  TruthSet x;
  for (std::size_t step = 0; step <= u.size() + 1; ++step) {
    TruthSet next = sk_jump(x, u);
    if (!x.subset_of(next))
      throw std::logic_error("sk_lfp: monotonicity violated");
    if (next == x) {
      r.fixed = x;
      return r;
    }
    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (next.contains(i) && !x.contains(i)) added.push_back(i);
    r.stages.push_back(std::move(added));
    x = next;
  }
  throw std::logic_error("sk_lfp: did not stabilize");
}

bool xi_star(const Nat& x, const TruthSet& X, const Universe& u) {
  return xi(x, X, u) || xi(cs::neg_of(x), X, u);
}

// ---------------------------------------------------------------------------
// Properties i-viii

namespace {

struct Reporter {
  CheckReport r;
  void add(const std::string& item, const std::string& inst, bool ok,
           const std::string& detail = "") {
    r.instances.push_back({item, inst,
                           ok ? semantics::InstanceStatus::Ok
                              : semantics::InstanceStatus::Fail,
                           detail});
    ok ? ++r.checked : ++r.failures;
  }
  void skip(const std::string& item, const std::string& inst,
            const std::string& why) {
    r.instances.push_back({item, inst, semantics::InstanceStatus::Skip, why});
    ++r.skipped;
  }
};

}  // namespace

CheckReport check_xi_star_properties(const Universe& u, const TruthSet& x) {
  Reporter rep;
  auto in = [&](const Nat& c) { return mem(u, x, c); };
  auto star = [&](const Nat& c) { return xi_star(c, x, u); };
  auto name = [&](std::size_t i) { return syntax::print_formula(u.sentence(i)); };

  for (std::size_t i = 0; i < u.size(); ++i) {
    const Nat& c = u.code(i);
    // i) xi*(x) -> xi*(neg. x)
    rep.add("i", name(i), !star(c) || star(cs::neg_of(c)));
    // iv) xi*(x) -> (Tr(neg. x) <-> not Tr(x))
    rep.add("iv", name(i),
            !star(c) || (in(cs::neg_of(c)) == !in(c)));
    // viii) xi*(x) -> (Tr x <-> Tr(tr. x)); needs the Tr-atom pooled
    Nat tr_c = cs::tr_atom_of(c);
    if (!star(c))
      rep.add("viii", name(i), true, "vacuous");
    else if (!pooled(u, tr_c))
      rep.skip("viii", name(i), "Tr-atom not pooled");
    else
      rep.add("viii", name(i), in(c) == in(tr_c));
  }

  // ii) closure under or. and the coded conditional
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Nat &c = u.code(i), &d = u.code(j);
      if (!star(c) || !star(d)) continue;
      bool ok = star(cs::or_of(c, d)) && star(cs::imp_of(c, d));
      rep.add("ii", name(i) + " , " + name(j), ok);
    }

  // v) / vi): disjunction and conditional biconditionals
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Nat &c = u.code(i), &d = u.code(j);
      Nat dis = cs::or_of(c, d);
      if (star(dis)) {
        if (!pooled(u, dis))
          rep.skip("v", name(i) + " , " + name(j), "disjunction not pooled");
        else
          rep.add("v", name(i) + " , " + name(j),
                  in(dis) == (in(c) || in(d)));
      }
      Nat imp = cs::imp_of(c, d);
      if (star(imp)) {
        if (!pooled(u, imp))
          rep.skip("vi", name(i) + " , " + name(j), "conditional not pooled");
        else
          rep.add("vi", name(i) + " , " + name(j),
                  in(imp) == (!in(c) || in(d)));
      }
    }

  // iii) and vii): universal sentences in the pool
  for (std::size_t i = 0; i < u.size(); ++i) {
    const syntax::Formula& f = u.sentence(i);
    if (f.kind() != FormulaKind::Forall) continue;
    Nat body = f.body().code();
    bool all_star = true, all_in = true;
    for (unsigned z = 0; z <= u.numeral_bound(); ++z) {
      Nat inst = syntax::subst_code(body, cs::num_term_of(z), f.bound_var());
      all_star = all_star && star(inst);
      all_in = all_in && in(inst);
    }
    // iii: from xi* of all instances to xi* of the universal code
    rep.add("iii", name(i), !all_star || star(u.code(i)));
    // vii (instance-wise): under the same premise, the biconditional
    rep.add("vii", name(i), !all_star || (in(u.code(i)) == all_in));
  }

  return std::move(rep.r);
}

// ---------------------------------------------------------------------------
// h, k, sigma

Nat h(const Nat& x, const Ord& beta) {
  return syntax::is_sentence(x, syntax::LanguageTag::lram(beta))
             ? x
             : falsum_code();
}

namespace {

struct Unsupported {};

// Term with free variable `v` whose value at v := numeral n is
// k(#g(n-bar/v)); the coded body of the translated universal case.
Term k_body_term(const syntax::Formula& g, const std::string& v);

Nat k_rec(const Nat& x) {
  auto f0 = syntax::decode(x);
  if (!f0) return falsum_code();
  const syntax::Formula& f = *f0;
  switch (f.kind()) {
    case FormulaKind::Eq:
      return x;  // arithmetical atoms are fixed
    case FormulaKind::TrRam: {
      const Term& t = f.terms()[0];
      if (!t.closed()) return falsum_code();
      Nat v = syntax::eval_term(t);
      return cs::tr_atom_of(k_rec(h(v, f.level())));
    }
    case FormulaKind::Not:
      return cs::neg_of(cs::tr_atom_of(k_rec(f.children()[0].code())));
    case FormulaKind::Or:
      return cs::or_of(cs::tr_atom_of(k_rec(f.children()[0].code())),
                       cs::tr_atom_of(k_rec(f.children()[1].code())));
    case FormulaKind::And:
      return cs::and_of(cs::tr_atom_of(k_rec(f.children()[0].code())),
                        cs::tr_atom_of(k_rec(f.children()[1].code())));
    case FormulaKind::Forall: {
      try {
        Term body = k_body_term(f.body(), f.bound_var());
        return syntax::Formula::forall(f.bound_var(),
                                       syntax::Formula::tr(body))
            .code();
      } catch (Unsupported&) {
        return falsum_code();
      }
    }
    default:
      return falsum_code();
  }
}

Term k_body_term(const syntax::Formula& g, const std::string& v) {
  switch (g.kind()) {
    case FormulaKind::Eq:
      // atoms are k-fixed; substitute the numeral of v into the atom code
      return Term::subst(Term::num(g.code()), Term::num_of(Term::var(v)), v);
    case FormulaKind::TrRam: {
      if (!g.terms()[0].closed()) throw Unsupported{};
      return Term::num(k_rec(g.code()));  // v-independent
    }
    case FormulaKind::Not:
      return Term::code_op(
          CodeOpKind::Neg,
          {Term::code_op(CodeOpKind::Tr, {k_body_term(g.children()[0], v)})});
    case FormulaKind::Or:
      return Term::code_op(
          CodeOpKind::Or,
          {Term::code_op(CodeOpKind::Tr, {k_body_term(g.children()[0], v)}),
           Term::code_op(CodeOpKind::Tr, {k_body_term(g.children()[1], v)})});
    case FormulaKind::And:
      return Term::code_op(
          CodeOpKind::And,
          {Term::code_op(CodeOpKind::Tr, {k_body_term(g.children()[0], v)}),
           Term::code_op(CodeOpKind::Tr, {k_body_term(g.children()[1], v)})});
    default:
      throw Unsupported{};  // nested quantifiers: beyond the desk fragment
  }
}

}  // namespace

Nat k_translate(const Nat& x) { return k_rec(x); }

Formula sigma(const Ord& alpha, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return f;
    case FormulaKind::TrRam: {
      if (!ordinals::lt(f.level(), alpha))
        throw syntax::SyntaxError("sigma: level >= " + ordinals::to_text(alpha) +
                                  " encountered");
      if (!f.terms()[0].closed())
        throw syntax::SyntaxError("sigma: open ramified quote term");
      Nat v = syntax::eval_term(f.terms()[0]);
      return Formula::tr(Term::num(k_translate(h(v, f.level()))));
    }
    case FormulaKind::Tr:
    case FormulaKind::P:
      throw syntax::SyntaxError("sigma: formula not in the ramified language");
    case FormulaKind::Not:
      return Formula::lnot(sigma(alpha, f.children()[0]));
    case FormulaKind::Or:
      return Formula::lor(sigma(alpha, f.children()[0]),
                          sigma(alpha, f.children()[1]));
    case FormulaKind::And:
      return Formula::land(sigma(alpha, f.children()[0]),
                           sigma(alpha, f.children()[1]));
    case FormulaKind::Forall:
      return Formula::forall(f.bound_var(), sigma(alpha, f.body()));
    case FormulaKind::Exists:
      return Formula::exists(f.bound_var(), sigma(alpha, f.body()));
  }
  throw syntax::SyntaxError("sigma: bad kind");
}

// ---------------------------------------------------------------------------
// RT translation check

CheckReport check_rt_translation(const Universe& u, const TruthSet& x,
                                 const Ord& beta) {
  Reporter rep;
  auto in = [&](const Nat& c) { return mem(u, x, c); };
  auto lang = syntax::LanguageTag::lram(beta);
  // sigma at level beta translates Tr_beta(y) as Tr(k(h_beta(y))).
  auto tr_beta = [&](const Nat& y) { return k_translate(h(y, beta)); };

  // atoms: Tr_beta of a pooled (in)equation vs its truth value
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula& f = u.sentence(i);
    if (!f.is_literal() ||
        !syntax::formula_in_language(f, syntax::LanguageTag::ln()))
      continue;
    bool lhs = in(tr_beta(u.code(i)));
    bool rhs = semantics::classical_sat(u, x, nullptr, f);
    rep.add("rt-atom", syntax::print_formula(f), lhs == rhs);
  }

  for (std::size_t i = 0; i < u.size(); ++i) {
    const Nat& y = u.code(i);
    if (!syntax::is_sentence(y, lang)) continue;
    std::string nm = syntax::print_formula(u.sentence(i));
    // negation: Tr_beta(neg. y) <-> not Tr_beta(y)
    {
      Nat limg = tr_beta(cs::neg_of(y)), rimg = tr_beta(y);
      if (!pooled(u, limg) || !pooled(u, rimg))
        rep.skip("rt-neg", nm, "translated image not pooled");
      else
        rep.add("rt-neg", nm, in(limg) == !in(rimg));
    }
    // disjunction / conjunction with a second pooled sentence
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Nat& z = u.code(j);
      if (!syntax::is_sentence(z, lang)) continue;
      std::string nm2 = nm + " , " + syntax::print_formula(u.sentence(j));
      Nat dis = tr_beta(cs::or_of(y, z));
      if (pooled(u, dis))
        rep.add("rt-or", nm2, in(dis) == (in(tr_beta(y)) || in(tr_beta(z))));
      Nat con = tr_beta(cs::and_of(y, z));
      if (pooled(u, con))
        rep.add("rt-and", nm2, in(con) == (in(tr_beta(y)) && in(tr_beta(z))));
    }
    // universal
    const Formula& f = u.sentence(i);
    if (f.kind() == FormulaKind::Forall) {
      Nat limg = tr_beta(y);
      if (!pooled(u, limg)) {
        rep.skip("rt-forall", nm, "translated image not pooled");
      } else {
        bool rhs = true;
        bool usable = true;
        for (unsigned z = 0; z <= u.numeral_bound(); ++z) {
          Nat inst = syntax::subst_code(f.body().code(), cs::num_term_of(z),
                                        f.bound_var());
          Nat img = tr_beta(inst);
          if (!pooled(u, img)) {
            usable = false;
            break;
          }
          rhs = rhs && in(img);
        }
        if (!usable)
          rep.skip("rt-forall", nm, "instance image not pooled");
        else
          rep.add("rt-forall", nm, in(limg) == rhs);
      }
    }
  }
  return std::move(rep.r);
}

std::string format_report(const CheckReport& r, bool verbose) {
  std::ostringstream os;
  os << r.checked << " ok, " << r.failures << " failed, " << r.skipped
     << " skipped\n";
  for (const auto& i : r.instances) {
    if (!verbose && i.status == semantics::InstanceStatus::Ok) continue;
    const char* s = i.status == semantics::InstanceStatus::Ok
                        ? "ok  "
                        : i.status == semantics::InstanceStatus::Fail ? "FAIL"
                                                                      : "skip";
    os << "  [" << s << "] " << i.axiom << "  " << i.instance;
    if (!i.detail.empty()) os << "  (" << i.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace veritas::interpret
