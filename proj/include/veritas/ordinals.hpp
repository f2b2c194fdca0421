#pragma once

// Ordinal notations below Gamma_0 in binary Veblen normal form.
//
// A notation is either 0 or a weakly decreasing sum of terms phi_a(b),
// where each term satisfies the normal-form condition that b is not a
// fixed point of phi_a (otherwise phi_a(b) collapses to b).  Gamma_0
// itself exists only as a sentinel bound: it compares above every
// proper notation and is rejected by the arithmetic.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace veritas::ordinals {

enum class Cmp { LT, EQ, GT };

class Ord;
struct VTerm;

// Internal constructor from an already-normal term list.
Ord make_sum(std::vector<VTerm> ts);

struct VTerm {
  // phi_a(b)
  // Stored boxed so VTerm can live inside Ord's term vector.
  std::vector<Ord> ab;  // exactly two entries: [a, b]

  const Ord& a() const { return ab[0]; }
  const Ord& b() const { return ab[1]; }
};

class Ord {
 public:
  // Zero.
  Ord() = default;

  static Ord zero() { return Ord(); }
  static Ord gamma0();
  // The finite ordinal n (a sum of n copies of phi_0(0)).
  static Ord nat(std::uint64_t n);

  bool is_zero() const { return !gamma0_ && terms_.empty(); }
  bool is_gamma0() const { return gamma0_; }
  // Finite ordinals are sums of phi_0(0) terms only.
  bool is_finite() const;
  // Value when finite; nullopt otherwise.
  std::optional<std::uint64_t> finite_value() const;

  // Single-term notations phi_a(b).
  bool is_single_term() const { return !gamma0_ && terms_.size() == 1; }
  const std::vector<VTerm>& terms() const { return terms_; }

  bool operator==(const Ord& o) const;
  bool operator!=(const Ord& o) const { return !(*this == o); }

  // Total depth of the notation tree; used by test enumerators.
  std::size_t depth() const;

  friend Ord make_sum(std::vector<VTerm> ts);

 private:
  bool gamma0_ = false;
  std::vector<VTerm> terms_;  // weakly decreasing under term comparison
};

// The strict linear order on notations.  Gamma_0 compares above all
// proper notations.
Cmp compare(const Ord& x, const Ord& y);
inline bool lt(const Ord& x, const Ord& y) { return compare(x, y) == Cmp::LT; }
inline bool leq(const Ord& x, const Ord& y) { return compare(x, y) != Cmp::GT; }

// phi_a(b) in normal form: collapses phi_a(b) = b when b is already a
// Veblen term with a larger first argument.
Ord veblen(const Ord& a, const Ord& b);

// Standard (non-commutative) ordinal sum.
Ord add(const Ord& x, const Ord& y);
// Natural (Hessenberg) sum: merge of the two normal forms.
Ord natural_sum(const Ord& x, const Ord& y);
inline Ord successor(const Ord& x) { return add(x, Ord::nat(1)); }

// omega^x = phi_0(x).
Ord omega_exp(const Ord& x);
// omega_0(a) = a, omega_{n+1}(a) = omega^(omega_n(a)).
Ord omega_tower(unsigned n, const Ord& a);
// The a-th epsilon number, phi_1(a).
Ord epsilon(const Ord& a);
// Least beta > a with epsilon_beta = beta.  hat(0) = phi_2(0).
Ord hat(const Ord& a);
// True iff a is a fixed point of the epsilon function.
bool is_epsilon_fixed_point(const Ord& a);

// beta_0 = epsilon_0, beta_{n+1} = phi_{beta_n}(0); sup is Gamma_0.
// Throws std::out_of_range past n = 8 (notation depth guard).
Ord beta_sequence(unsigned n);

// Text syntax: 0, decimal naturals, w, e0, (phi a b), (+ a b ...),
// (nsum a b), G0.  to_text is the exact inverse of parse_ord.
Ord parse_ord(const std::string& text);
std::string to_text(const Ord& x);
// Display form with unicode phi/omega/epsilon; not meant to re-parse.
std::string pretty(const Ord& x);

// Thrown on malformed ordinal text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace veritas::ordinals
