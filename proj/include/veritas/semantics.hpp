#pragma once

// Finite-universe models of the truth language: the four supervaluational
// satisfaction relations, the Kripke jump, fixed-point iteration, and
// axiom-soundness checking.
//
// The miniature replaces Sent_{L_T} by a finite pool of sentences closed
// under single negation (identified with negation normal form) and bounds
// classical quantifiers by a numeral bound N.  Admissible extensions range
// over subsets of the pool.  Monotonicity, fixed-point existence, and the
// axiom-soundness propositions remain literally true and testable at this
// scale.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "veritas/syntax.hpp"

namespace veritas::semantics {

using syntax::Formula;
using syntax::Nat;

enum class Scheme { SV, VB, VC, MC };
enum class Theory { VF, VFminus, VFM, VFMminus, VFW, VFMP };

Scheme scheme_of(Theory t);
std::string to_string(Scheme s);
std::string to_string(Theory t);
std::optional<Scheme> scheme_from_string(const std::string& s);
std::optional<Theory> theory_from_string(const std::string& s);

// ---------------------------------------------------------------------------

class Universe {
 public:
  // Builds the pool: inputs are normalized to NNF and closed under single
  // negation.  Throws if a sentence is open or the closure exceeds 64.
  static Universe from_sentences(const std::vector<Formula>& sentences,
                                 unsigned numeral_bound);
  // File format: one formula per line; '#' comments; directives
  // 'numeral_bound N' and 'p_ext n0 n1 ...'.
  static Universe load(std::istream& in);
  static Universe load_file(const std::string& path);

  std::size_t size() const { return pool_.size(); }
  const Formula& sentence(std::size_t i) const { return pool_[i]; }
  const Nat& code(std::size_t i) const { return codes_[i]; }
  unsigned numeral_bound() const { return numeral_bound_; }
  // Index of the NNF-normalization of f, when pooled.
  std::optional<std::size_t> index_of(const Formula& f) const;
  // Index lookup through a code: decodes, normalizes, looks up.
  std::optional<std::size_t> index_of_code(const Nat& c) const;
  // Index of nnf(not sentence(i)); total by pool closure.
  std::size_t negation_of(std::size_t i) const { return negs_[i]; }

  // Optional P-extension loaded from a universe file.
  const std::set<Nat>& p_ext() const { return p_ext_; }
  void set_p_ext(std::set<Nat> p) { p_ext_ = std::move(p); }

 private:
  std::vector<Formula> pool_;
  std::vector<Nat> codes_;
  std::vector<std::size_t> negs_;
  std::map<Nat, std::size_t> index_;
  std::set<Nat> p_ext_;
  unsigned numeral_bound_ = 2;
};

// A subset of pool indices.
struct TruthSet {
  std::uint64_t bits = 0;

  static TruthSet empty() { return {}; }
  bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  TruthSet with(std::size_t i) const { return {bits | (1ull << i)}; }
  bool subset_of(const TruthSet& o) const { return (bits & ~o.bits) == 0; }
  bool operator==(const TruthSet& o) const { return bits == o.bits; }
  std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits)); }

  // The derived antiextension: indices whose negation lies in the set.
  TruthSet antiextension(const Universe& u) const;
  bool consistent(const Universe& u) const;
  std::vector<std::size_t> members() const;
};

// ---------------------------------------------------------------------------

// Classical satisfaction over (N-bounded) numerals, with Tr read as
// membership in X and Tr_b(t) as membership plus Sent_{<b}.  Throws
// syntax::EvalError on open formulas; requires a P-extension for P-atoms.
bool classical_sat(const Universe& u, const TruthSet& x,
                   const std::set<Nat>* p_ext, const Formula& f);

// The admissibility condition alone (the superset condition is checked by
// the callers): sv none, vb disjoint from X's antiextension, vc
// self-consistent, mc maximally consistent over the pool.
bool admissible(Scheme e, const Universe& u, const TruthSet& x,
                const TruthSet& candidate);

// All admissible extensions X' >= X.  Empty exactly when X itself rules
// every candidate out (e.g. inconsistent X under vb/vc/mc).
std::vector<TruthSet> admissible_extensions(Scheme e, const Universe& u,
                                            const TruthSet& x);

// X |=_e f : f holds classically in every admissible extension of X.
bool sv_sat(Scheme e, const Universe& u, const TruthSet& x, const Formula& f);

// The Kripke jump J_e(X) = { #f in pool | X |=_e f }.
TruthSet jump(Scheme e, const Universe& u, const TruthSet& x);

struct LfpResult {
  TruthSet fixed;
  // Newly added pool indices per iteration, for traceability.
  std::vector<std::vector<std::size_t>> stages;
};

// Least fixed point: iterate the jump from the empty set until it
// stabilizes (at most |pool| steps by monotonicity).
LfpResult lfp(Scheme e, const Universe& u);

// All maximally consistent supersets of X; empty iff X is inconsistent.
std::vector<TruthSet> mcx_enumerate(const Universe& u, const TruthSet& x);

// ---------------------------------------------------------------------------
// Axiom-soundness checking

enum class InstanceStatus { Ok, Fail, Skip };

struct InstanceResult {
  std::string axiom;
  std::string instance;
  InstanceStatus status;
  std::string detail;
};

struct AxiomReport {
  Theory theory;
  std::vector<InstanceResult> instances;
  std::size_t failures = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  bool clean() const { return failures == 0; }
};

// Instantiates every axiom of the theory over pool codes and the closed
// terms occurring in the pool, evaluating in the model (N, X).  Tr at codes
// of sentences outside the pool is evaluated by one unfolding of the jump
// equation (X is expected to be a fixed point of the matching scheme, so
// the unfolding is exactly what membership in the ideal extension says).
// unfold_scheme is the scheme X is a fixed point of; it defaults to the
// theory's own scheme and only differs when deliberately checking a theory
// against a foreign fixed point (e.g. VFM against lfp(vb)).
AxiomReport check_axioms(Theory t, const Universe& u, const TruthSet& x,
                         std::optional<Scheme> unfold_scheme = std::nullopt);

std::string format_report(const AxiomReport& r, bool verbose);

}  // namespace veritas::semantics
