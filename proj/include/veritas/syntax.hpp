#pragma once

// Abstract syntax of the truth languages, Goedel coding, code arithmetic,
// substitution, closed-term evaluation, and language recognizers.
//
// Codes are built by iterated Cantor pairing of a constructor tag and the
// child codes; they are arbitrary-precision naturals.  Every syntax node
// stores its own code, computed bottom-up at construction, so equality and
// ordering of terms and formulas coincide with equality and ordering of
// codes.  Quotation ('quote phi') is a numeral at the code level: its code
// and value are those of Num(#phi).
//
// The dotted code operations follow the conventions of their uses:
//   neg./or./and.     formula-code to formula-code
//   forall./exists.   (variable, formula-code) to formula-code
//   tr.               formula-code x to the code of Tr(x-as-numeral)
//   p.                term-code to the code of the P-atom over that term
//   eq.               pair of term-codes to the code of the equation
//   num.              value n to the code of the numeral of n
//   subst             (formula-code, term-code, variable) substitution

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "veritas/ordinals.hpp"

namespace veritas::syntax {

using Nat = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Pairing and tag layout

namespace codes {

// Cantor pairing; bijective on naturals.
Nat pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> unpair(const Nat& c);

// List coding: nil = 0, cons(h, t) = pair(h, t) + 1.
Nat list_nil();
Nat list_cons(const Nat& h, const Nat& t);

// Constructor tags.  Tag 0 is deliberately unassigned, so code 0 decodes
// to nothing.
inline constexpr unsigned kVar = 1, kZero = 2, kSucc = 3, kNum = 4,
                          kSelf = 5, kCodeOp = 6, kSubst = 7, kNumOf = 8,
                          kEq = 10, kTr = 11, kTrRam = 12, kP = 13, kNot = 14,
                          kOr = 15, kAnd = 16, kForall = 17, kExists = 18;

Nat var_name_code(const std::string& name);
std::optional<std::string> var_name_decode(const Nat& c);

// Ordinal notations embedded in TrRam codes.
Nat ord_code(const ordinals::Ord& o);
std::optional<ordinals::Ord> ord_decode(const Nat& c);

// The dotted operations as total functions on naturals.
Nat neg_of(const Nat& x);                      // pair(kNot, x)
Nat or_of(const Nat& x, const Nat& y);         // pair(kOr, pair(x, y))
Nat and_of(const Nat& x, const Nat& y);        // pair(kAnd, pair(x, y))
Nat imp_of(const Nat& x, const Nat& y);        // or_of(neg_of(x), y)
Nat forall_of(const Nat& vc, const Nat& x);    // pair(kForall, pair(vc, x))
Nat exists_of(const Nat& vc, const Nat& x);
Nat tr_atom_of(const Nat& x);    // pair(kTr, pair(kNum-term of x))
Nat tr_term_of(const Nat& tc);   // pair(kTr, tc): Tr over an explicit term
Nat p_term_of(const Nat& tc);    // pair(kP, tc)
Nat num_term_of(const Nat& n);   // pair(kNum, n): code of the numeral of n
Nat eq_of(const Nat& sc, const Nat& tc);  // pair(kEq, pair(sc, tc))

}  // namespace codes

// ---------------------------------------------------------------------------
// Terms

enum class TermKind { Var, Zero, Succ, Num, Quote, SelfQuote, CodeOp, Subst, NumOf };

enum class CodeOpKind { Neg, Or, And, Forall, Exists, Tr, Eq, P };

class Formula;

class Term {
 public:
  static Term var(const std::string& name);
  static Term zero();
  static Term succ(const Term& t);
  static Term num(const Nat& n);
  static Term quote(const Formula& f);
  // The unresolved diag hole '(self)' has id 0; diag() assigns real ids.
  static Term self_quote(std::uint64_t id);
  static Term code_op(CodeOpKind op, std::vector<Term> args);
  static Term subst(const Term& x, const Term& t, const std::string& v);
  static Term num_of(const Term& t);

  TermKind kind() const;
  const std::string& var_name() const;
  const Nat& num_value() const;
  const Formula& quoted() const;
  std::uint64_t self_id() const;
  CodeOpKind op() const;
  const std::vector<Term>& args() const;
  const std::string& subst_var() const;

  // The Goedel code of the term itself (as a syntax object).
  const Nat& code() const;

  bool closed() const;
  void collect_free_vars(std::set<std::string>& out) const;

  bool operator==(const Term& o) const { return code() == o.code(); }
  bool operator!=(const Term& o) const { return code() != o.code(); }
  bool operator<(const Term& o) const { return code() < o.code(); }

  struct Node;  // internal
  explicit Term(std::shared_ptr<const Node> p) : p_(std::move(p)) {}

 private:
  std::shared_ptr<const Node> p_;
};

// ---------------------------------------------------------------------------
// Formulas

enum class FormulaKind { Eq, Tr, TrRam, P, Not, Or, And, Forall, Exists };

class Formula {
 public:
  static Formula eq(const Term& s, const Term& t);
  static Formula tr(const Term& t);
  static Formula tr_ram(const ordinals::Ord& level, const Term& t);
  static Formula p_atom(const Term& t);
  static Formula lnot(const Formula& f);
  static Formula lor(const Formula& a, const Formula& b);
  static Formula land(const Formula& a, const Formula& b);
  static Formula forall(const std::string& v, const Formula& f);
  static Formula exists(const std::string& v, const Formula& f);
  // phi -> psi abbreviates (not phi) or psi.
  static Formula implies(const Formula& a, const Formula& b) {
    return lor(lnot(a), b);
  }

  FormulaKind kind() const;
  const std::vector<Term>& terms() const;           // atoms
  const ordinals::Ord& level() const;               // TrRam
  const std::vector<Formula>& children() const;     // connectives
  const std::string& bound_var() const;             // quantifiers
  const Formula& body() const;                      // quantifiers

  const Nat& code() const;

  bool closed() const;
  void collect_free_vars(std::set<std::string>& out) const;
  bool is_atom() const;
  bool is_literal() const;  // atom or negated atom

  bool operator==(const Formula& o) const { return code() == o.code(); }
  bool operator!=(const Formula& o) const { return code() != o.code(); }
  bool operator<(const Formula& o) const { return code() < o.code(); }

  struct Node;  // internal
  explicit Formula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}

 private:
  std::shared_ptr<const Node> p_;
};

// ---------------------------------------------------------------------------
// Language membership

struct LanguageTag {
  enum Kind { LN, LT, LRam, LPT } kind = LT;
  ordinals::Ord below;  // for LRam: levels must be strictly below this

  static LanguageTag ln() { return {LN, {}}; }
  static LanguageTag lt() { return {LT, {}}; }
  static LanguageTag lram(const ordinals::Ord& g) { return {LRam, g}; }
  static LanguageTag lpt() { return {LPT, {}}; }
};

// ---------------------------------------------------------------------------
// Operations

struct SyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S-expression front end; print is the exact inverse of parse.
Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

inline Nat encode(const Formula& f) { return f.code(); }
inline Nat encode_term(const Term& t) { return t.code(); }
std::optional<Formula> decode(const Nat& c);
std::optional<Term> decode_term(const Nat& c);

// Value of a closed term; throws EvalError on open terms.
Nat eval_term(const Term& t);

// Tree-level substitution of the closed term t for free occurrences of v.
Term subst_term(const Term& in, const std::string& v, const Term& t);
Formula subst_formula(const Formula& in, const std::string& v, const Term& t);

// Code-level substitution x(t/v), recursing on the code structure alone.
// Total: returns x unchanged when x does not decode.
Nat subst_code(const Nat& x, const Nat& term_code, const std::string& v);

// The spec-level operation: x must code a formula, t must be closed.
Nat substitute(const Nat& x, const Term& t, const std::string& v);

// Negation normal form; double negations cancelled, De Morgan pushed to
// atoms, quantifiers dualized.
Formula nnf(const Formula& f);
bool is_nnf(const Formula& f);
// Convenience: the NNF of the negation.
Formula nnf_not(const Formula& f);
// NNF-normalized code: encode(nnf(decode(c))), or c itself when undecodable.
Nat norm_code(const Nat& c);

// Logical complexity co(A): 0 on literals, max+1 on binary connectives,
// body+1 on quantifiers.  Normalizes to NNF first.
unsigned complexity(const Formula& f);

// True iff c codes a closed formula all of whose atoms belong to L.
// For LRam(g): every ramified level is < g and no unramified Tr or P occurs.
bool is_sentence(const Nat& c, const LanguageTag& lang);
bool formula_in_language(const Formula& f, const LanguageTag& lang);

// Diagonalization: the template must contain exactly one '(self)' hole.
// Returns the fixed point: a closed formula whose self-quote term evaluates
// to the formula's own code.  Deterministic: equal templates share one id.
Formula diag(const Formula& templ);
// The formula registered under a self-quote id; throws on unknown ids.
Formula self_referent(std::uint64_t id);

// Recognizer for the finite whitelist of PAT-axiom shapes: equality
// axioms (reflexivity, symmetry, Leibniz for the truth predicate),
// successor axioms, induction instances, and the propositional shapes
// the embedding templates need (conjunction introduction and
// non-contradiction).  Ax_PAT is an r.e. set; the whitelist covers the
// shapes this artifact constructs.
bool is_pat_axiom(const Formula& f);

// Display-only rendering of TI(alpha, A) for the CLI; not part of the
// formula grammar.
std::string ti_formula_text(const ordinals::Ord& alpha, const std::string& schema_name);

}  // namespace veritas::syntax
