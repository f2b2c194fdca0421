#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "veritas/ordinals.hpp"

using namespace veritas::ordinals;

namespace {

Ord O(const std::string& s) { return parse_ord(s); }

// Closure of {0} under veblen and small sums, cut off at the given depth.
// Stands in for "all notations of depth <= d" with list length <= 2.
std::vector<Ord> enumerate_depth(unsigned d) {
  std::set<std::string> seen;
  std::vector<Ord> cur{Ord::zero()};
  seen.insert(to_text(Ord::zero()));
  for (unsigned level = 0; level < d; ++level) {
    std::vector<Ord> next = cur;
    auto push = [&](const Ord& o) {
      if (o.depth() <= d && seen.insert(to_text(o)).second) next.push_back(o);
    };
    for (const Ord& a : cur)
      for (const Ord& b : cur) {
        push(veblen(a, b));
        push(natural_sum(a, b));
        push(add(a, b));
      }
    cur = std::move(next);
  }
  return cur;
}

Ord random_ord(std::mt19937_64& rng, unsigned depth) {
  std::uniform_int_distribution<int> coin(0, 5);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<int> small(0, 3);
    return Ord::nat(small(rng));
  }
  int c = coin(rng);
  if (c <= 2) return veblen(random_ord(rng, depth - 1), random_ord(rng, depth - 1));
  if (c <= 4)
    return natural_sum(random_ord(rng, depth - 1), random_ord(rng, depth - 1));
  return add(random_ord(rng, depth - 1), random_ord(rng, depth - 1));
}

}  // namespace

TEST_CASE("constants and veblen collapses") {
  CHECK(veblen(Ord::zero(), Ord::zero()) == Ord::nat(1));
  CHECK(epsilon(Ord::zero()) == O("(phi 1 0)"));
  CHECK(compare(O("(phi 0 0)"), O("(phi 1 0)")) == Cmp::LT);  // 1 < e0
  // omega^e0 = e0
  CHECK(veblen(Ord::zero(), epsilon(Ord::zero())) == epsilon(Ord::zero()));
  CHECK(omega_exp(Ord::nat(1)) == O("w"));
}

TEST_CASE("sortedness of the landmark sequence") {
  std::vector<Ord> seq{O("0"),  O("1"),          O("w"), O("(phi 0 2)"),
                       O("e0"), O("(phi 1 1)"),  O("(phi 2 0)")};
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j < seq.size(); ++j) {
      Cmp want = i < j ? Cmp::LT : (i == j ? Cmp::EQ : Cmp::GT);
      CHECK(compare(seq[i], seq[j]) == want);
    }
}

TEST_CASE("ordinary sum vs natural sum") {
  CHECK(add(Ord::nat(1), O("w")) == O("w"));
  CHECK(natural_sum(Ord::nat(1), O("w")) == O("(+ w 1)"));
  CHECK(add(O("w"), Ord::nat(1)) == O("(+ w 1)"));
  // associativity of add on a few fixed triples
  std::vector<Ord> xs{O("0"), O("2"), O("w"), O("(+ w 1)"), O("e0"),
                      O("(phi 0 2)")};
  for (const Ord& a : xs)
    for (const Ord& b : xs)
      for (const Ord& c : xs)
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
}

TEST_CASE("natural sum: commutative, strictly monotone (random)") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    Ord a = random_ord(rng, 3), b = random_ord(rng, 3);
    CHECK(natural_sum(a, b) == natural_sum(b, a));
  }
  for (int i = 0; i < 200; ++i) {
    Ord a = random_ord(rng, 3), b = random_ord(rng, 3), c = random_ord(rng, 3);
    if (compare(b, c) == Cmp::EQ) continue;
    if (compare(b, c) == Cmp::GT) std::swap(b, c);
    CHECK(lt(natural_sum(a, b), natural_sum(a, c)));
    // associativity while we're here
    CHECK(natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)));
  }
}

TEST_CASE("omega towers") {
  Ord e0 = epsilon(Ord::zero());
  CHECK(omega_tower(0, e0) == e0);
  CHECK(omega_tower(2, Ord::zero()) == O("w"));  // w^(w^0) = w
  CHECK(omega_tower(1, e0) == e0);               // epsilon fixed point
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Ord a = random_ord(rng, 2);
    Ord t = omega_tower(1, a);
    if (is_epsilon_fixed_point(a) ||
        (a.is_single_term() && lt(Ord::nat(0), a.terms()[0].a())))
      CHECK(leq(a, t));
    else
      CHECK(lt(a, t));
  }
}

TEST_CASE("epsilon function") {
  Ord phi20 = O("(phi 2 0)");
  CHECK(epsilon(phi20) == phi20);  // phi_2 enumerates fixed points of epsilon
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; checked < 100 && i < 1000; ++i) {
    Ord a = random_ord(rng, 3);
    if (is_epsilon_fixed_point(a)) continue;
    ++checked;
    CHECK(compare(epsilon(a), a) == Cmp::GT);
  }
  CHECK(checked == 100);
}

TEST_CASE("hat: least epsilon fixed point above") {
  Ord phi20 = O("(phi 2 0)");
  Ord phi21 = O("(phi 2 1)");
  CHECK(hat(Ord::zero()) == phi20);
  CHECK(hat(phi20) == phi21);
  CHECK(epsilon(phi21) == phi21);
  // minimality of hat(phi20): no epsilon fixed point strictly between
  for (const Ord& g : enumerate_depth(3)) {
    if (lt(phi20, g) && lt(g, phi21)) CHECK(!is_epsilon_fixed_point(g));
  }
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Ord a = random_ord(rng, 3);
    Ord h = hat(a);
    CHECK(lt(a, h));
    CHECK(epsilon(h) == h);
    // idempotent-above
    Ord hh = hat(h);
    CHECK(lt(h, hh));
    CHECK(is_epsilon_fixed_point(hh));
  }
}

TEST_CASE("beta sequence toward Gamma_0") {
  CHECK(beta_sequence(0) == epsilon(Ord::zero()));
  CHECK(beta_sequence(1) == veblen(epsilon(Ord::zero()), Ord::zero()));
  for (unsigned n = 0; n < 5; ++n)
    CHECK(lt(beta_sequence(n), beta_sequence(n + 1)));
  CHECK_THROWS_AS(beta_sequence(9), std::out_of_range);
  for (unsigned n = 0; n <= 5; ++n) CHECK(lt(beta_sequence(n), Ord::gamma0()));
}

TEST_CASE("total order on the depth-3 closure") {
  std::vector<Ord> all = enumerate_depth(3);
  CHECK(all.size() >= 50);
  // trichotomy + irreflexivity, with EQ exactly on identical normal forms
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      Cmp c = compare(all[i], all[j]);
      Cmp r = compare(all[j], all[i]);
      if (c == Cmp::EQ) {
        CHECK(r == Cmp::EQ);
        CHECK(to_text(all[i]) == to_text(all[j]));
      } else {
        CHECK(r == (c == Cmp::LT ? Cmp::GT : Cmp::LT));
      }
    }
  // transitivity on random triples
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const Ord &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
    if (compare(a, b) == Cmp::LT && compare(b, c) == Cmp::LT)
      CHECK(compare(a, c) == Cmp::LT);
  }
}

TEST_CASE("re-normalizing is a fixpoint") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    Ord a = random_ord(rng, 3);
    if (a.is_single_term()) {
      const auto& t = a.terms()[0];
      CHECK(veblen(t.a(), t.b()) == a);
    }
    // parse/print round trip doubles as a normal-form audit
    CHECK(parse_ord(to_text(a)) == a);
  }
}

TEST_CASE("gamma0 sentinel") {
  CHECK(compare(Ord::gamma0(), beta_sequence(5)) == Cmp::GT);
  CHECK(compare(Ord::gamma0(), Ord::gamma0()) == Cmp::EQ);
  CHECK_THROWS(veblen(Ord::gamma0(), Ord::zero()));
  CHECK_THROWS(natural_sum(Ord::gamma0(), Ord::nat(1)));
  CHECK(parse_ord("G0").is_gamma0());
  CHECK(to_text(Ord::gamma0()) == "G0");
}

TEST_CASE("text syntax") {
  CHECK(to_text(O("(+ w w 1 1)")) == "(+ w w 2)");
  CHECK(to_text(O("(nsum e0 w)")) == "(+ e0 w)");
  CHECK(to_text(O("(+ 1 w)")) == "w");
  CHECK_THROWS_AS(O("(phi 1"), ParseError);
  CHECK_THROWS_AS(O("wibble"), ParseError);
}
