#include "veritas/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <limits>
#include <sstream>

namespace veritas::syntax {

using ordinals::Ord;

// ---------------------------------------------------------------------------
// Pairing

namespace codes {

Nat pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> unpair(const Nat& c) {
  Nat d = 8 * c + 1;
  Nat w = (boost::multiprecision::sqrt(d) - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat b = c - t;
  Nat a = w - b;
  return {a, b};
}

Nat list_nil() { return 0; }
Nat list_cons(const Nat& h, const Nat& t) { return pair(h, t) + 1; }

Nat var_name_code(const std::string& name) {
  Nat v = 1;
  for (unsigned char c : name) v = v * 256 + c;
  return v;
}

std::optional<std::string> var_name_decode(const Nat& c) {
  if (c < 1) return std::nullopt;
  std::string out;
  Nat v = c;
  while (v > 1) {
    out.push_back(static_cast<char>(static_cast<unsigned>(v % 256)));
    v /= 256;
  }
  if (v != 1) return std::nullopt;
  std::reverse(out.begin(), out.end());
  return out;
}

Nat ord_code(const Ord& o) {
  if (o.is_gamma0()) throw SyntaxError("ord_code: Gamma_0 has no code");
  Nat acc = 0;  // fold terms right to left: nil = 0
  const auto& ts = o.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    Nat tc = pair(ord_code(it->a()), ord_code(it->b()));
    acc = pair(tc, acc) + 1;
  }
  return acc;
}

std::optional<Ord> ord_decode(const Nat& c) {
  if (c == 0) return Ord();
  auto [tc, tail] = unpair(c - 1);
  auto [ac, bc] = unpair(tc);
  auto a = ord_decode(ac);
  auto b = ord_decode(bc);
  auto rest = ord_decode(tail);
  if (!a || !b || !rest) return std::nullopt;
  return ordinals::add(ordinals::veblen(*a, *b), *rest);
}

Nat neg_of(const Nat& x) { return pair(kNot, x); }
Nat or_of(const Nat& x, const Nat& y) { return pair(kOr, pair(x, y)); }
Nat and_of(const Nat& x, const Nat& y) { return pair(kAnd, pair(x, y)); }
Nat imp_of(const Nat& x, const Nat& y) { return or_of(neg_of(x), y); }
Nat forall_of(const Nat& vc, const Nat& x) { return pair(kForall, pair(vc, x)); }
Nat exists_of(const Nat& vc, const Nat& x) { return pair(kExists, pair(vc, x)); }
Nat tr_atom_of(const Nat& x) { return pair(kTr, pair(kNum, x)); }
Nat tr_term_of(const Nat& tc) { return pair(kTr, tc); }
Nat p_term_of(const Nat& tc) { return pair(kP, tc); }
Nat num_term_of(const Nat& n) { return pair(kNum, n); }
Nat eq_of(const Nat& sc, const Nat& tc) { return pair(kEq, pair(sc, tc)); }

}  // namespace codes

namespace {
using codes::pair;
using codes::unpair;
}  // namespace

// ---------------------------------------------------------------------------
// Nodes

struct Term::Node {
  TermKind kind;
  std::string name;          // Var name / Subst variable
  Nat num;                   // Num payload
  std::uint64_t self_id = 0;
  CodeOpKind op = CodeOpKind::Neg;
  std::vector<Term> args;
  std::shared_ptr<const Formula> quoted;
  Nat code;
};

struct Formula::Node {
  FormulaKind kind;
  std::vector<Term> terms;
  Ord level;
  std::vector<Formula> children;
  std::string var;
  Nat code;
};

namespace {

unsigned code_op_index(CodeOpKind k) { return static_cast<unsigned>(k); }

Nat term_code_of(const Term::Node& n) {
  switch (n.kind) {
    case TermKind::Var:
      return pair(codes::kVar, codes::var_name_code(n.name));
    case TermKind::Zero:
      return pair(codes::kZero, 0);
    case TermKind::Succ:
      return pair(codes::kSucc, n.args[0].code());
    case TermKind::Num:
      return pair(codes::kNum, n.num);
    case TermKind::Quote:
      return pair(codes::kNum, n.quoted->code());  // quotation is a numeral
    case TermKind::SelfQuote:
      return pair(codes::kSelf, n.self_id);
    case TermKind::CodeOp: {
      Nat lst = codes::list_nil();
      for (auto it = n.args.rbegin(); it != n.args.rend(); ++it)
        lst = codes::list_cons(it->code(), lst);
      return pair(codes::kCodeOp, pair(code_op_index(n.op), lst));
    }
    case TermKind::Subst:
      return pair(codes::kSubst,
                  pair(n.args[0].code(),
                       pair(n.args[1].code(), codes::var_name_code(n.name))));
    case TermKind::NumOf:
      return pair(codes::kNumOf, n.args[0].code());
  }
  throw SyntaxError("term_code_of: bad kind");
}

Nat formula_code_of(const Formula::Node& n) {
  switch (n.kind) {
    case FormulaKind::Eq:
      return pair(codes::kEq, pair(n.terms[0].code(), n.terms[1].code()));
    case FormulaKind::Tr:
      return pair(codes::kTr, n.terms[0].code());
    case FormulaKind::TrRam:
      return pair(codes::kTrRam,
                  pair(codes::ord_code(n.level), n.terms[0].code()));
    case FormulaKind::P:
      return pair(codes::kP, n.terms[0].code());
    case FormulaKind::Not:
      return pair(codes::kNot, n.children[0].code());
    case FormulaKind::Or:
      return pair(codes::kOr, pair(n.children[0].code(), n.children[1].code()));
    case FormulaKind::And:
      return pair(codes::kAnd,
                  pair(n.children[0].code(), n.children[1].code()));
    case FormulaKind::Forall:
      return pair(codes::kForall,
                  pair(pair(codes::kVar, codes::var_name_code(n.var)),
                       n.children[0].code()));
    case FormulaKind::Exists:
      return pair(codes::kExists,
                  pair(pair(codes::kVar, codes::var_name_code(n.var)),
                       n.children[0].code()));
  }
  throw SyntaxError("formula_code_of: bad kind");
}

}  // namespace

// Term factories ------------------------------------------------------------

namespace {
Term mk_term(Term::Node n);
Formula mk_formula(Formula::Node n);
}  // namespace

Term Term::var(const std::string& name) {
  if (name.empty()) throw SyntaxError("variable name must be nonempty");
  Node n;
  n.kind = TermKind::Var;
  n.name = name;
  return mk_term(std::move(n));
}
Term Term::zero() {
  Node n;
  n.kind = TermKind::Zero;
  return mk_term(std::move(n));
}
Term Term::succ(const Term& t) {
  Node n;
  n.kind = TermKind::Succ;
  n.args = {t};
  return mk_term(std::move(n));
}
Term Term::num(const Nat& v) {
  if (v < 0) throw SyntaxError("numeral must be a natural");
  Node n;
  n.kind = TermKind::Num;
  n.num = v;
  return mk_term(std::move(n));
}
Term Term::quote(const Formula& f) {
  Node n;
  n.kind = TermKind::Quote;
  n.quoted = std::make_shared<Formula>(f);
  return mk_term(std::move(n));
}
Term Term::self_quote(std::uint64_t id) {
  Node n;
  n.kind = TermKind::SelfQuote;
  n.self_id = id;
  return mk_term(std::move(n));
}
Term Term::code_op(CodeOpKind op, std::vector<Term> args) {
  std::size_t want =
      (op == CodeOpKind::Or || op == CodeOpKind::And ||
       op == CodeOpKind::Forall || op == CodeOpKind::Exists ||
       op == CodeOpKind::Eq)
          ? 2
          : 1;
  if (args.size() != want) throw SyntaxError("code_op: wrong arity");
  if ((op == CodeOpKind::Forall || op == CodeOpKind::Exists) &&
      args[0].kind() != TermKind::Var)
    throw SyntaxError("code_op: binder slot must be a variable name");
  Node n;
  n.kind = TermKind::CodeOp;
  n.op = op;
  n.args = std::move(args);
  return mk_term(std::move(n));
}
Term Term::subst(const Term& x, const Term& t, const std::string& v) {
  Node n;
  n.kind = TermKind::Subst;
  n.args = {x, t};
  n.name = v;
  return mk_term(std::move(n));
}
Term Term::num_of(const Term& t) {
  Node n;
  n.kind = TermKind::NumOf;
  n.args = {t};
  return mk_term(std::move(n));
}

namespace {
Term mk_term(Term::Node n) {
  n.code = term_code_of(n);
  return Term(std::make_shared<const Term::Node>(std::move(n)));
}
Formula mk_formula(Formula::Node n) {
  n.code = formula_code_of(n);
  return Formula(std::make_shared<const Formula::Node>(std::move(n)));
}
}  // namespace

TermKind Term::kind() const { return p_->kind; }
const std::string& Term::var_name() const { return p_->name; }
const Nat& Term::num_value() const { return p_->num; }
const Formula& Term::quoted() const { return *p_->quoted; }
std::uint64_t Term::self_id() const { return p_->self_id; }
CodeOpKind Term::op() const { return p_->op; }
const std::vector<Term>& Term::args() const { return p_->args; }
const std::string& Term::subst_var() const { return p_->name; }
const Nat& Term::code() const { return p_->code; }

void Term::collect_free_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case TermKind::Var:
      out.insert(var_name());
      return;
    case TermKind::Quote:
      return;  // a quotation is a numeral; mentioned variables are not free
    case TermKind::CodeOp: {
      // The binder slot of forall./exists. is a quoted name, not a free
      // occurrence.
      std::size_t start =
          (op() == CodeOpKind::Forall || op() == CodeOpKind::Exists) ? 1 : 0;
      for (std::size_t i = start; i < args().size(); ++i)
        args()[i].collect_free_vars(out);
      return;
    }
    default:
      for (const Term& a : args()) a.collect_free_vars(out);
      return;
  }
}
bool Term::closed() const {
  std::set<std::string> fv;
  collect_free_vars(fv);
  return fv.empty();
}

// Formula factories ---------------------------------------------------------

Formula Formula::eq(const Term& s, const Term& t) {
  Node n;
  n.kind = FormulaKind::Eq;
  n.terms = {s, t};
  return mk_formula(std::move(n));
}
Formula Formula::tr(const Term& t) {
  Node n;
  n.kind = FormulaKind::Tr;
  n.terms = {t};
  return mk_formula(std::move(n));
}
Formula Formula::tr_ram(const Ord& level, const Term& t) {
  Node n;
  n.kind = FormulaKind::TrRam;
  n.level = level;
  n.terms = {t};
  return mk_formula(std::move(n));
}
Formula Formula::p_atom(const Term& t) {
  Node n;
  n.kind = FormulaKind::P;
  n.terms = {t};
  return mk_formula(std::move(n));
}
Formula Formula::lnot(const Formula& f) {
  Node n;
  n.kind = FormulaKind::Not;
  n.children = {f};
  return mk_formula(std::move(n));
}
Formula Formula::lor(const Formula& a, const Formula& b) {
  Node n;
  n.kind = FormulaKind::Or;
  n.children = {a, b};
  return mk_formula(std::move(n));
}
Formula Formula::land(const Formula& a, const Formula& b) {
  Node n;
  n.kind = FormulaKind::And;
  n.children = {a, b};
  return mk_formula(std::move(n));
}
Formula Formula::forall(const std::string& v, const Formula& f) {
  Node n;
  n.kind = FormulaKind::Forall;
  n.var = v;
  n.children = {f};
  return mk_formula(std::move(n));
}
Formula Formula::exists(const std::string& v, const Formula& f) {
  Node n;
  n.kind = FormulaKind::Exists;
  n.var = v;
  n.children = {f};
  return mk_formula(std::move(n));
}

FormulaKind Formula::kind() const { return p_->kind; }
const std::vector<Term>& Formula::terms() const { return p_->terms; }
const Ord& Formula::level() const { return p_->level; }
const std::vector<Formula>& Formula::children() const { return p_->children; }
const std::string& Formula::bound_var() const { return p_->var; }
const Formula& Formula::body() const { return p_->children[0]; }
const Nat& Formula::code() const { return p_->code; }

bool Formula::is_atom() const {
  switch (kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Tr:
    case FormulaKind::TrRam:
    case FormulaKind::P:
      return true;
    default:
      return false;
  }
}
bool Formula::is_literal() const {
  return is_atom() || (kind() == FormulaKind::Not && children()[0].is_atom());
}

void Formula::collect_free_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Tr:
    case FormulaKind::TrRam:
    case FormulaKind::P:
      for (const Term& t : terms()) t.collect_free_vars(out);
      return;
    case FormulaKind::Not:
    case FormulaKind::Or:
    case FormulaKind::And:
      for (const Formula& c : children()) c.collect_free_vars(out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      std::set<std::string> inner;
      body().collect_free_vars(inner);
      inner.erase(bound_var());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}
bool Formula::closed() const {
  std::set<std::string> fv;
  collect_free_vars(fv);
  return fv.empty();
}

// ---------------------------------------------------------------------------
// Decoding

std::optional<Term> decode_term(const Nat& c) {
  auto [tag, payload] = unpair(c);
  if (tag == codes::kVar) {
    auto name = codes::var_name_decode(payload);
    if (!name || name->empty()) return std::nullopt;
    return Term::var(*name);
  }
  if (tag == codes::kZero) {
    if (payload != 0) return std::nullopt;
    return Term::zero();
  }
  if (tag == codes::kSucc) {
    auto t = decode_term(payload);
    if (!t) return std::nullopt;
    return Term::succ(*t);
  }
  if (tag == codes::kNum) return Term::num(payload);
  if (tag == codes::kSelf) {
    if (payload > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return Term::self_quote(payload.convert_to<std::uint64_t>());
  }
  if (tag == codes::kCodeOp) {
    auto [opn, lst] = unpair(payload);
    if (opn > 7) return std::nullopt;
    CodeOpKind op = static_cast<CodeOpKind>(opn.convert_to<unsigned>());
    std::vector<Term> args;
    Nat rest = lst;
    while (rest != 0) {
      auto [h, t] = unpair(rest - 1);
      auto a = decode_term(h);
      if (!a) return std::nullopt;
      args.push_back(*a);
      rest = t;
    }
    std::size_t want =
        (op == CodeOpKind::Or || op == CodeOpKind::And ||
         op == CodeOpKind::Forall || op == CodeOpKind::Exists ||
         op == CodeOpKind::Eq)
            ? 2
            : 1;
    if (args.size() != want) return std::nullopt;
    if ((op == CodeOpKind::Forall || op == CodeOpKind::Exists) &&
        args[0].kind() != TermKind::Var)
      return std::nullopt;
    return Term::code_op(op, std::move(args));
  }
  if (tag == codes::kSubst) {
    auto [xc, rest] = unpair(payload);
    auto [tc, vc] = unpair(rest);
    auto x = decode_term(xc);
    auto t = decode_term(tc);
    auto v = codes::var_name_decode(vc);
    if (!x || !t || !v || v->empty()) return std::nullopt;
    return Term::subst(*x, *t, *v);
  }
  if (tag == codes::kNumOf) {
    auto t = decode_term(payload);
    if (!t) return std::nullopt;
    return Term::num_of(*t);
  }
  return std::nullopt;
}

std::optional<Formula> decode(const Nat& c) {
  auto [tag, payload] = unpair(c);
  auto two_terms = [&](auto make) -> std::optional<Formula> {
    auto [a, b] = unpair(payload);
    auto s = decode_term(a);
    auto t = decode_term(b);
    if (!s || !t) return std::nullopt;
    return make(*s, *t);
  };
  if (tag == codes::kEq) return two_terms(Formula::eq);
  if (tag == codes::kTr) {
    auto t = decode_term(payload);
    if (!t) return std::nullopt;
    return Formula::tr(*t);
  }
  if (tag == codes::kTrRam) {
    auto [oc, tc] = unpair(payload);
    auto lvl = codes::ord_decode(oc);
    auto t = decode_term(tc);
    if (!lvl || !t) return std::nullopt;
    if (codes::ord_code(*lvl) != oc) return std::nullopt;  // non-normal code
    return Formula::tr_ram(*lvl, *t);
  }
  if (tag == codes::kP) {
    auto t = decode_term(payload);
    if (!t) return std::nullopt;
    return Formula::p_atom(*t);
  }
  if (tag == codes::kNot) {
    auto f = decode(payload);
    if (!f) return std::nullopt;
    return Formula::lnot(*f);
  }
  if (tag == codes::kOr || tag == codes::kAnd) {
    auto [a, b] = unpair(payload);
    auto f = decode(a);
    auto g = decode(b);
    if (!f || !g) return std::nullopt;
    return tag == codes::kOr ? Formula::lor(*f, *g) : Formula::land(*f, *g);
  }
  if (tag == codes::kForall || tag == codes::kExists) {
    auto [vc, bc] = unpair(payload);
    auto [vtag, vname] = unpair(vc);
    if (vtag != codes::kVar) return std::nullopt;
    auto name = codes::var_name_decode(vname);
    auto b = decode(bc);
    if (!name || name->empty() || !b) return std::nullopt;
    return tag == codes::kForall ? Formula::forall(*name, *b)
                                 : Formula::exists(*name, *b);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Diagonalization registry

namespace {

struct DiagRegistry {
  std::mutex mu;
  std::map<Nat, std::uint64_t> by_template;
  std::vector<Formula> formulas;  // id - 1 indexes here
};

DiagRegistry& registry() {
  static DiagRegistry* r = new DiagRegistry();
  return *r;
}

unsigned count_holes_term(const Term& t);
unsigned count_holes(const Formula& f);

unsigned count_holes_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::SelfQuote:
      return t.self_id() == 0 ? 1 : 0;
    case TermKind::Quote:
      return count_holes(t.quoted());
    default: {
      unsigned n = 0;
      for (const Term& a : t.args()) n += count_holes_term(a);
      return n;
    }
  }
}
unsigned count_holes(const Formula& f) {
  unsigned n = 0;
  for (const Term& t : f.terms()) n += count_holes_term(t);
  for (const Formula& c : f.children()) n += count_holes(c);
  return n;
}

Term fill_term(const Term& t, std::uint64_t id);
Formula fill(const Formula& f, std::uint64_t id);

Term fill_term(const Term& t, std::uint64_t id) {
  switch (t.kind()) {
    case TermKind::SelfQuote:
      return t.self_id() == 0 ? Term::self_quote(id) : t;
    case TermKind::Quote:
      return Term::quote(fill(t.quoted(), id));
    case TermKind::Succ:
      return Term::succ(fill_term(t.args()[0], id));
    case TermKind::NumOf:
      return Term::num_of(fill_term(t.args()[0], id));
    case TermKind::CodeOp: {
      std::vector<Term> as;
      for (const Term& a : t.args()) as.push_back(fill_term(a, id));
      return Term::code_op(t.op(), std::move(as));
    }
    case TermKind::Subst:
      return Term::subst(fill_term(t.args()[0], id), fill_term(t.args()[1], id),
                         t.subst_var());
    default:
      return t;
  }
}
Formula fill(const Formula& f, std::uint64_t id) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return Formula::eq(fill_term(f.terms()[0], id), fill_term(f.terms()[1], id));
    case FormulaKind::Tr:
      return Formula::tr(fill_term(f.terms()[0], id));
    case FormulaKind::TrRam:
      return Formula::tr_ram(f.level(), fill_term(f.terms()[0], id));
    case FormulaKind::P:
      return Formula::p_atom(fill_term(f.terms()[0], id));
    case FormulaKind::Not:
      return Formula::lnot(fill(f.children()[0], id));
    case FormulaKind::Or:
      return Formula::lor(fill(f.children()[0], id), fill(f.children()[1], id));
    case FormulaKind::And:
      return Formula::land(fill(f.children()[0], id), fill(f.children()[1], id));
    case FormulaKind::Forall:
      return Formula::forall(f.bound_var(), fill(f.body(), id));
    case FormulaKind::Exists:
      return Formula::exists(f.bound_var(), fill(f.body(), id));
  }
  throw SyntaxError("fill: bad kind");
}

}  // namespace

Formula diag(const Formula& templ) {
  unsigned holes = count_holes(templ);
  if (holes != 1)
    throw SyntaxError("diag: template must contain exactly one (self) hole");
  DiagRegistry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.by_template.find(templ.code());
  if (it != r.by_template.end()) return r.formulas[it->second - 1];
  std::uint64_t id = r.formulas.size() + 1;
  Formula fixed = fill(templ, id);
  r.formulas.push_back(fixed);
  r.by_template.emplace(templ.code(), id);
  return fixed;
}

Formula self_referent(std::uint64_t id) {
  DiagRegistry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  if (id == 0 || id > r.formulas.size())
    throw EvalError("unresolved self-reference id " + std::to_string(id));
  return r.formulas[id - 1];
}

// ---------------------------------------------------------------------------
// Evaluation

Nat eval_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      throw EvalError("open term: variable '" + t.var_name() + "'");
    case TermKind::Zero:
      return 0;
    case TermKind::Succ:
      return eval_term(t.args()[0]) + 1;
    case TermKind::Num:
      return t.num_value();
    case TermKind::Quote:
      return t.quoted().code();
    case TermKind::SelfQuote:
      return self_referent(t.self_id()).code();
    case TermKind::CodeOp: {
      switch (t.op()) {
        case CodeOpKind::Neg:
          return codes::neg_of(eval_term(t.args()[0]));
        case CodeOpKind::Or:
          return codes::or_of(eval_term(t.args()[0]), eval_term(t.args()[1]));
        case CodeOpKind::And:
          return codes::and_of(eval_term(t.args()[0]), eval_term(t.args()[1]));
        case CodeOpKind::Forall:
          return codes::forall_of(t.args()[0].code(), eval_term(t.args()[1]));
        case CodeOpKind::Exists:
          return codes::exists_of(t.args()[0].code(), eval_term(t.args()[1]));
        case CodeOpKind::Tr:
          return codes::tr_atom_of(eval_term(t.args()[0]));
        case CodeOpKind::Eq:
          return codes::eq_of(eval_term(t.args()[0]), eval_term(t.args()[1]));
        case CodeOpKind::P:
          return codes::p_term_of(eval_term(t.args()[0]));
      }
      throw EvalError("bad code op");
    }
    case TermKind::Subst:
      return subst_code(eval_term(t.args()[0]), eval_term(t.args()[1]),
                        t.subst_var());
    case TermKind::NumOf:
      return codes::num_term_of(eval_term(t.args()[0]));
  }
  throw EvalError("bad term kind");
}

// ---------------------------------------------------------------------------
// Substitution

Term subst_term(const Term& in, const std::string& v, const Term& t) {
  switch (in.kind()) {
    case TermKind::Var:
      return in.var_name() == v ? t : in;
    case TermKind::Zero:
    case TermKind::Num:
    case TermKind::SelfQuote:
    case TermKind::Quote:  // numerals do not contain free occurrences
      return in;
    case TermKind::Succ:
      return Term::succ(subst_term(in.args()[0], v, t));
    case TermKind::NumOf:
      return Term::num_of(subst_term(in.args()[0], v, t));
    case TermKind::CodeOp: {
      std::vector<Term> as;
      std::size_t start =
          (in.op() == CodeOpKind::Forall || in.op() == CodeOpKind::Exists) ? 1
                                                                           : 0;
      for (std::size_t i = 0; i < in.args().size(); ++i)
        as.push_back(i < start ? in.args()[i] : subst_term(in.args()[i], v, t));
      return Term::code_op(in.op(), std::move(as));
    }
    case TermKind::Subst:
      return Term::subst(subst_term(in.args()[0], v, t),
                         subst_term(in.args()[1], v, t), in.subst_var());
  }
  throw SyntaxError("subst_term: bad kind");
}

Formula subst_formula(const Formula& in, const std::string& v, const Term& t) {
  switch (in.kind()) {
    case FormulaKind::Eq:
      return Formula::eq(subst_term(in.terms()[0], v, t),
                         subst_term(in.terms()[1], v, t));
    case FormulaKind::Tr:
      return Formula::tr(subst_term(in.terms()[0], v, t));
    case FormulaKind::TrRam:
      return Formula::tr_ram(in.level(), subst_term(in.terms()[0], v, t));
    case FormulaKind::P:
      return Formula::p_atom(subst_term(in.terms()[0], v, t));
    case FormulaKind::Not:
      return Formula::lnot(subst_formula(in.children()[0], v, t));
    case FormulaKind::Or:
      return Formula::lor(subst_formula(in.children()[0], v, t),
                          subst_formula(in.children()[1], v, t));
    case FormulaKind::And:
      return Formula::land(subst_formula(in.children()[0], v, t),
                           subst_formula(in.children()[1], v, t));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (in.bound_var() == v) return in;
      Formula b = subst_formula(in.body(), v, t);
      return in.kind() == FormulaKind::Forall
                 ? Formula::forall(in.bound_var(), b)
                 : Formula::exists(in.bound_var(), b);
    }
  }
  throw SyntaxError("subst_formula: bad kind");
}

namespace {

// Code-level substitution, recursing on the pairing structure alone.
Nat subst_term_code(const Nat& c, const Nat& tc, const Nat& vcode) {
  auto [tag, payload] = unpair(c);
  if (tag == codes::kVar) return payload == vcode ? tc : c;
  if (tag == codes::kZero || tag == codes::kNum || tag == codes::kSelf) return c;
  if (tag == codes::kSucc || tag == codes::kNumOf)
    return pair(tag, subst_term_code(payload, tc, vcode));
  if (tag == codes::kCodeOp) {
    auto [opn, lst] = unpair(payload);
    bool binder = (opn == static_cast<unsigned>(CodeOpKind::Forall) ||
                   opn == static_cast<unsigned>(CodeOpKind::Exists));
    std::vector<Nat> items;
    Nat rest = lst;
    while (rest != 0) {
      auto [h, t] = unpair(rest - 1);
      items.push_back(h);
      rest = t;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (binder && i == 0) continue;  // quoted binder name
      items[i] = subst_term_code(items[i], tc, vcode);
    }
    Nat out = codes::list_nil();
    for (auto it = items.rbegin(); it != items.rend(); ++it)
      out = codes::list_cons(*it, out);
    return pair(codes::kCodeOp, pair(opn, out));
  }
  if (tag == codes::kSubst) {
    auto [xc, rest2] = unpair(payload);
    auto [ttc, vc] = unpair(rest2);
    return pair(codes::kSubst, pair(subst_term_code(xc, tc, vcode),
                                    pair(subst_term_code(ttc, tc, vcode), vc)));
  }
  return c;
}

Nat subst_formula_code(const Nat& c, const Nat& tc, const Nat& vcode) {
  auto [tag, payload] = unpair(c);
  if (tag == codes::kEq) {
    auto [a, b] = unpair(payload);
    return pair(tag, pair(subst_term_code(a, tc, vcode),
                          subst_term_code(b, tc, vcode)));
  }
  if (tag == codes::kTr || tag == codes::kP)
    return pair(tag, subst_term_code(payload, tc, vcode));
  if (tag == codes::kTrRam) {
    auto [oc, atc] = unpair(payload);
    return pair(tag, pair(oc, subst_term_code(atc, tc, vcode)));
  }
  if (tag == codes::kNot)
    return pair(tag, subst_formula_code(payload, tc, vcode));
  if (tag == codes::kOr || tag == codes::kAnd) {
    auto [a, b] = unpair(payload);
    return pair(tag, pair(subst_formula_code(a, tc, vcode),
                          subst_formula_code(b, tc, vcode)));
  }
  if (tag == codes::kForall || tag == codes::kExists) {
    auto [vc, bc] = unpair(payload);
    auto [vtag, vname] = unpair(vc);
    if (vtag == codes::kVar && vname == vcode) return c;  // bound
    return pair(tag, pair(vc, subst_formula_code(bc, tc, vcode)));
  }
  return c;
}

}  // namespace

Nat subst_code(const Nat& x, const Nat& term_code, const std::string& v) {
  return subst_formula_code(x, term_code, codes::var_name_code(v));
}

Nat substitute(const Nat& x, const Term& t, const std::string& v) {
  if (!decode(x)) throw SyntaxError("substitute: not a formula code");
  if (!t.closed()) throw SyntaxError("substitute: term must be closed");
  return subst_code(x, t.code(), v);
}

// ---------------------------------------------------------------------------
// Negation normal form and complexity

Formula nnf(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Tr:
    case FormulaKind::TrRam:
    case FormulaKind::P:
      return f;
    case FormulaKind::Or:
      return Formula::lor(nnf(f.children()[0]), nnf(f.children()[1]));
    case FormulaKind::And:
      return Formula::land(nnf(f.children()[0]), nnf(f.children()[1]));
    case FormulaKind::Forall:
      return Formula::forall(f.bound_var(), nnf(f.body()));
    case FormulaKind::Exists:
      return Formula::exists(f.bound_var(), nnf(f.body()));
    case FormulaKind::Not: {
      const Formula& g = f.children()[0];
      switch (g.kind()) {
        case FormulaKind::Eq:
        case FormulaKind::Tr:
        case FormulaKind::TrRam:
        case FormulaKind::P:
          return f;
        case FormulaKind::Not:
          return nnf(g.children()[0]);
        case FormulaKind::Or:
          return Formula::land(nnf(Formula::lnot(g.children()[0])),
                               nnf(Formula::lnot(g.children()[1])));
        case FormulaKind::And:
          return Formula::lor(nnf(Formula::lnot(g.children()[0])),
                              nnf(Formula::lnot(g.children()[1])));
        case FormulaKind::Forall:
          return Formula::exists(g.bound_var(), nnf(Formula::lnot(g.body())));
        case FormulaKind::Exists:
          return Formula::forall(g.bound_var(), nnf(Formula::lnot(g.body())));
      }
    }
  }
  throw SyntaxError("nnf: bad kind");
}

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Eq:
    case FormulaKind::Tr:
    case FormulaKind::TrRam:
    case FormulaKind::P:
      return true;
    case FormulaKind::Not:
      return f.children()[0].is_atom();
    case FormulaKind::Or:
    case FormulaKind::And:
      return is_nnf(f.children()[0]) && is_nnf(f.children()[1]);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return is_nnf(f.body());
  }
  return false;
}

Formula nnf_not(const Formula& f) { return nnf(Formula::lnot(f)); }

Nat norm_code(const Nat& c) {
  auto f = decode(c);
  if (!f) return c;
  return nnf(*f).code();
}

unsigned complexity(const Formula& f0) {
  Formula f = is_nnf(f0) ? f0 : nnf(f0);
  struct Rec {
    static unsigned co(const Formula& g) {
      if (g.is_literal()) return 0;
      switch (g.kind()) {
        case FormulaKind::Or:
        case FormulaKind::And:
          return std::max(co(g.children()[0]), co(g.children()[1])) + 1;
        case FormulaKind::Forall:
        case FormulaKind::Exists:
          return co(g.body()) + 1;
        default:
          return 0;
      }
    }
  };
  return Rec::co(f);
}

// ---------------------------------------------------------------------------
// Language membership

bool formula_in_language(const Formula& f, const LanguageTag& lang) {
  switch (f.kind()) {
    case FormulaKind::Eq:
      return true;
    case FormulaKind::Tr:
      return lang.kind == LanguageTag::LT || lang.kind == LanguageTag::LPT;
    case FormulaKind::TrRam:
      return lang.kind == LanguageTag::LRam &&
             ordinals::lt(f.level(), lang.below);
    case FormulaKind::P:
      return lang.kind == LanguageTag::LPT;
    case FormulaKind::Not:
    case FormulaKind::Or:
    case FormulaKind::And:
      for (const Formula& c : f.children())
        if (!formula_in_language(c, lang)) return false;
      return true;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return formula_in_language(f.body(), lang);
  }
  return false;
}

bool is_sentence(const Nat& c, const LanguageTag& lang) {
  auto f = decode(c);
  if (!f) return false;
  return f->closed() && formula_in_language(*f, lang);
}

std::string ti_formula_text(const Ord& alpha, const std::string& a) {
  using ordinals::pretty;
  return "∀β(∀γ(γ<β → " + a +
         "(γ)) → " + a + "(β)) → ∀β<" +
         pretty(alpha) + " " + a + "(β)";
}

}  // namespace veritas::syntax
