#pragma once

// The Strong Kleene jump formula xi, its symmetrization xi*, the ramified
// gatekeeper h_b, the translation k into the unramified language, the
// interpretation sigma_a, and pool-level verification of their properties.

#include "veritas/semantics.hpp"

namespace veritas::interpret {

using ordinals::Ord;
using semantics::TruthSet;
using semantics::Universe;
using syntax::Formula;
using syntax::Nat;

// The twelve-disjunct Strong Kleene clause list, pattern-matching on the
// code x: true arithmetical (negated) atoms, double negation, the four
// connective/negated-connective cases, the quantifier cases with witnesses
// bounded by the universe's numeral bound, Tr(t) with t's value in X, and
// not-Tr(t) with the negated value in X or t's value not a sentence code.
// "in X" reads membership of the NNF-normalized code in the pool subset.
bool xi(const Nat& x, const TruthSet& X, const Universe& u);

// { x in pool | xi(x, X) }.
TruthSet sk_jump(const TruthSet& X, const Universe& u);

// Least fixed point of sk_jump from the empty set.
semantics::LfpResult sk_lfp(const Universe& u);

// xi*(x) := xi(x, Tr) or xi(neg. x, Tr).
bool xi_star(const Nat& x, const TruthSet& X, const Universe& u);

struct CheckReport {
  std::vector<semantics::InstanceResult> instances;
  std::size_t failures = 0, checked = 0, skipped = 0;
  bool clean() const { return failures == 0; }
};

// Items i-viii over pool codes, reading Tr as membership in X (expected to
// be lfp(mc)).  Instances whose constructed codes fall outside the pool
// are recorded as skipped rather than guessed.  Item vii is read
// instance-wise: from xi* of all numeral instances to the quantifier
// biconditional, matching the use the translation argument makes of it.
CheckReport check_xi_star_properties(const Universe& u, const TruthSet& x);

// h(x, b) = x if x codes a sentence of the ramified language below b,
// else the code of 0 = S0.
Nat h(const Nat& x, const Ord& beta);
Nat falsum_code();

// The six-case translation: arithmetical atoms fixed; Tr_b t to
// Tr(k . h_b (t-value)); negation, disjunction, conjunction to the
// corresponding Tr-combinations; the universal case to the quantified
// Tr-form over a substitution term; everything else to the code of 0=S0.
// Quantified bodies are supported when their ramified atoms have closed
// quote terms and no nested quantifier (the desk-scale fragment).
Nat k_translate(const Nat& x);

// sigma_a: leaves arithmetical material intact, commutes with connectives
// and quantifiers, sends Tr_b(t) (b < a, t closed) to Tr(k(h_b(t-value))).
// Throws on levels >= a and on unramified Tr or P.
Formula sigma(const Ord& alpha, const Formula& f);

// RT axiom shapes (atoms, negation, disjunction, conjunction, universal)
// at level b: instantiate over pool codes, translate with sigma, evaluate
// in (U, X); instances whose translated images are not pooled are skipped.
CheckReport check_rt_translation(const Universe& u, const TruthSet& x,
                                 const Ord& beta);

std::string format_report(const CheckReport& r, bool verbose);

}  // namespace veritas::interpret
