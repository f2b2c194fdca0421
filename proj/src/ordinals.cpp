#include "veritas/ordinals.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace veritas::ordinals {

namespace {

Ord single(const VTerm& t) {
  std::vector<VTerm> ts{t};
  return make_sum(std::move(ts));
}

Cmp cmp_term(const VTerm& s, const VTerm& t);

// Lexicographic comparison of weakly decreasing term lists.
Cmp cmp_terms(const std::vector<VTerm>& xs, const std::vector<VTerm>& ys) {
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = cmp_term(xs[i], ys[i]);
    if (c != Cmp::EQ) return c;
  }
  if (xs.size() == ys.size()) return Cmp::EQ;
  return xs.size() < ys.size() ? Cmp::LT : Cmp::GT;
}

// phi_a(b) vs phi_c(d), the classical Veblen comparison.
Cmp cmp_term(const VTerm& s, const VTerm& t) {
  Cmp heads = compare(s.a(), t.a());
  if (heads == Cmp::EQ) return compare(s.b(), t.b());
  if (heads == Cmp::LT) {
    // phi_a(b) vs phi_c(d) with a < c: decided by b vs phi_c(d).
    Cmp c = compare(s.b(), single(t));
    return c == Cmp::GT ? Cmp::GT : c;
  }
  Cmp c = compare(single(s), t.b());
  return c == Cmp::GT ? Cmp::GT : c;
}

bool term_is_fixed_point_of(const VTerm& t, const Ord& a) {
  // phi_c(d) is a fixed point of phi_a exactly when c > a.
  return compare(t.a(), a) == Cmp::GT;
}

}  // namespace

Ord make_sum(std::vector<VTerm> ts) {
  Ord r;
  r.terms_ = std::move(ts);
  return r;
}

Ord Ord::gamma0() {
  Ord r;
  r.gamma0_ = true;
  return r;
}

Ord Ord::nat(std::uint64_t n) {
  Ord one_term = veblen(Ord(), Ord());
  std::vector<VTerm> ts;
  ts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) ts.push_back(one_term.terms()[0]);
  return make_sum(std::move(ts));
}

bool Ord::is_finite() const {
  if (gamma0_) return false;
  for (const VTerm& t : terms_)
    if (!t.a().is_zero() || !t.b().is_zero()) return false;
  return true;
}

std::optional<std::uint64_t> Ord::finite_value() const {
  if (!is_finite()) return std::nullopt;
  return terms_.size();
}

bool Ord::operator==(const Ord& o) const {
  return compare(*this, o) == Cmp::EQ;
}

std::size_t Ord::depth() const {
  std::size_t d = 0;
  for (const VTerm& t : terms_)
    d = std::max({d, t.a().depth() + 1, t.b().depth() + 1});
  return d;
}

Cmp compare(const Ord& x, const Ord& y) {
  if (x.is_gamma0() || y.is_gamma0()) {
    if (x.is_gamma0() && y.is_gamma0()) return Cmp::EQ;
    return x.is_gamma0() ? Cmp::GT : Cmp::LT;
  }
  return cmp_terms(x.terms(), y.terms());
}

Ord veblen(const Ord& a, const Ord& b) {
  if (a.is_gamma0() || b.is_gamma0())
    throw std::invalid_argument("veblen: Gamma_0 is a bound, not an argument");
  if (b.is_single_term() && term_is_fixed_point_of(b.terms()[0], a))
    return b;  // phi_a(b) = b
  VTerm t;
  t.ab = {a, b};
  return single(t);
}

Ord add(const Ord& x, const Ord& y) {
  if (x.is_gamma0() || y.is_gamma0())
    throw std::invalid_argument("add: Gamma_0 is a bound, not an argument");
  if (y.is_zero()) return x;
  if (x.is_zero()) return y;
  const VTerm& head = y.terms()[0];
  std::vector<VTerm> ts;
  for (const VTerm& t : x.terms()) {
    if (cmp_term(t, head) == Cmp::LT) break;  // absorbed by y's leading term
    ts.push_back(t);
  }
  ts.insert(ts.end(), y.terms().begin(), y.terms().end());
  return make_sum(std::move(ts));
}

Ord natural_sum(const Ord& x, const Ord& y) {
  if (x.is_gamma0() || y.is_gamma0())
    throw std::invalid_argument("natural_sum: Gamma_0 is a bound, not an argument");
  std::vector<VTerm> ts;
  ts.reserve(x.terms().size() + y.terms().size());
  std::size_t i = 0, j = 0;
  while (i < x.terms().size() && j < y.terms().size()) {
    if (cmp_term(x.terms()[i], y.terms()[j]) == Cmp::LT)
      ts.push_back(y.terms()[j++]);
    else
      ts.push_back(x.terms()[i++]);
  }
  while (i < x.terms().size()) ts.push_back(x.terms()[i++]);
  while (j < y.terms().size()) ts.push_back(y.terms()[j++]);
  return make_sum(std::move(ts));
}

Ord omega_exp(const Ord& x) { return veblen(Ord(), x); }

Ord omega_tower(unsigned n, const Ord& a) {
  Ord r = a;
  for (unsigned i = 0; i < n; ++i) r = omega_exp(r);
  return r;
}

Ord epsilon(const Ord& a) { return veblen(Ord::nat(1), a); }

bool is_epsilon_fixed_point(const Ord& a) {
  // Fixed points of phi_1 are exactly the values of phi_c, c >= 2.
  return a.is_single_term() &&
         compare(a.terms()[0].a(), Ord::nat(2)) != Cmp::LT;
}

Ord hat(const Ord& a) {
  if (a.is_gamma0())
    throw std::invalid_argument("hat: Gamma_0 is a bound, not an argument");
  Ord two = Ord::nat(2);
  Ord phi20 = veblen(two, Ord());
  if (lt(a, phi20)) return phi20;
  if (is_epsilon_fixed_point(a)) {
    // a = phi_2(delta); the next epsilon fixed point is phi_2(delta + 1).
    const VTerm& t = a.terms()[0];
    Ord delta = (compare(t.a(), two) == Cmp::EQ) ? t.b() : a;
    return veblen(two, successor(delta));
  }
  if (!a.is_single_term()) {
    Ord head = single(a.terms()[0]);
    if (is_epsilon_fixed_point(head)) {
      const VTerm& t = head.terms()[0];
      Ord delta = (compare(t.a(), two) == Cmp::EQ) ? t.b() : head;
      return veblen(two, successor(delta));
    }
    return hat(head);
  }
  // Single term phi_c(b) with c <= 1: phi_2(d) > a iff phi_2(d) > b.
  return hat(a.terms()[0].b());
}

Ord beta_sequence(unsigned n) {
  if (n > 8) throw std::out_of_range("beta_sequence: depth overflow (n > 8)");
  Ord b = epsilon(Ord());
  for (unsigned i = 0; i < n; ++i) b = veblen(b, Ord());
  return b;
}

// ---------------------------------------------------------------------------
// Text syntax

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
  std::string token() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("ordinal: unexpected end of input");
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
};

Ord parse_expr(Lexer& lx);

Ord parse_list(Lexer& lx) {
  std::string head = lx.token();
  if (head == "phi") {
    Ord a = parse_expr(lx);
    Ord b = parse_expr(lx);
    if (lx.token() != ")") throw ParseError("ordinal: expected ')'");
    return veblen(a, b);
  }
  if (head == "+") {
    Ord acc = parse_expr(lx);
    while (lx.peek() != ')') acc = add(acc, parse_expr(lx));
    lx.token();  // consume ')'
    return acc;
  }
  if (head == "nsum") {
    Ord a = parse_expr(lx);
    Ord b = parse_expr(lx);
    if (lx.token() != ")") throw ParseError("ordinal: expected ')'");
    return natural_sum(a, b);
  }
  throw ParseError("ordinal: unknown operator '" + head + "'");
}

Ord parse_expr(Lexer& lx) {
  std::string t = lx.token();
  if (t == "(") return parse_list(lx);
  if (t == "0") return Ord();
  if (t == "w") return omega_exp(Ord::nat(1));
  if (t == "e0") return epsilon(Ord());
  if (t == "G0") return Ord::gamma0();
  if (!t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    return Ord::nat(std::stoull(t));
  }
  throw ParseError("ordinal: unexpected token '" + t + "'");
}

std::string term_text(const VTerm& t) {
  if (t.a().is_zero()) {
    if (t.b() == Ord::nat(1)) return "w";
    // phi_0(0) = 1 is handled by the finite-run printer.
  }
  if (t.a() == Ord::nat(1) && t.b().is_zero()) return "e0";
  return "(phi " + to_text(t.a()) + " " + to_text(t.b()) + ")";
}

}  // namespace

Ord parse_ord(const std::string& text) {
  Lexer lx{text};
  Ord r = parse_expr(lx);
  if (!lx.eof()) throw ParseError("ordinal: trailing input");
  return r;
}

std::string to_text(const Ord& x) {
  if (x.is_gamma0()) return "G0";
  if (x.is_zero()) return "0";
  if (auto n = x.finite_value()) return std::to_string(*n);
  // Split off the trailing run of 1-terms, printed as one decimal.
  const auto& ts = x.terms();
  std::size_t infinite = ts.size();
  while (infinite > 0 && ts[infinite - 1].a().is_zero() &&
         ts[infinite - 1].b().is_zero())
    --infinite;
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < infinite; ++i) parts.push_back(term_text(ts[i]));
  if (infinite < ts.size()) parts.push_back(std::to_string(ts.size() - infinite));
  if (parts.size() == 1) return parts[0];
  std::string out = "(+";
  for (const std::string& p : parts) out += " " + p;
  return out + ")";
}

std::string pretty(const Ord& x) {
  if (x.is_gamma0()) return "Γ₀";
  if (x.is_zero()) return "0";
  if (auto n = x.finite_value()) return std::to_string(*n);
  const auto& ts = x.terms();
  std::size_t infinite = ts.size();
  while (infinite > 0 && ts[infinite - 1].a().is_zero() &&
         ts[infinite - 1].b().is_zero())
    --infinite;
  std::string out;
  auto emit = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  for (std::size_t i = 0; i < infinite; ++i) {
    const VTerm& t = ts[i];
    if (t.a().is_zero()) {
      if (t.b() == Ord::nat(1))
        emit("ω");
      else
        emit("ω^(" + pretty(t.b()) + ")");
    } else if (t.a() == Ord::nat(1)) {
      emit("ε_(" + pretty(t.b()) + ")");
    } else {
      emit("φ_(" + pretty(t.a()) + ")(" + pretty(t.b()) + ")");
    }
  }
  if (infinite < ts.size()) emit(std::to_string(ts.size() - infinite));
  return out;
}

}  // namespace veritas::ordinals
