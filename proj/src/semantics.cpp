#include "veritas/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace veritas::semantics {

using syntax::codes::kForall;
using syntax::Formula;
using syntax::FormulaKind;
using syntax::Term;
using syntax::TermKind;
using ordinals::Ord;

Scheme scheme_of(Theory t) {
  switch (t) {
    case Theory::VF:
      return Scheme::VC;
    case Theory::VFminus:
      return Scheme::VB;
    default:
      return Scheme::MC;
  }
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::SV: return "sv";
    case Scheme::VB: return "vb";
    case Scheme::VC: return "vc";
    case Scheme::MC: return "mc";
  }
  return "?";
}
std::string to_string(Theory t) {
  switch (t) {
    case Theory::VF: return "VF";
    case Theory::VFminus: return "VFminus";
    case Theory::VFM: return "VFM";
    case Theory::VFMminus: return "VFMminus";
    case Theory::VFW: return "VFW";
    case Theory::VFMP: return "VFMP";
  }
  return "?";
}
std::optional<Scheme> scheme_from_string(const std::string& s) {
  if (s == "sv") return Scheme::SV;
  if (s == "vb") return Scheme::VB;
  if (s == "vc") return Scheme::VC;
  if (s == "mc") return Scheme::MC;
  return std::nullopt;
}
std::optional<Theory> theory_from_string(const std::string& s) {
  if (s == "VF") return Theory::VF;
  if (s == "VFminus" || s == "VF-") return Theory::VFminus;
  if (s == "VFM") return Theory::VFM;
  if (s == "VFMminus" || s == "VFM-") return Theory::VFMminus;
  if (s == "VFW") return Theory::VFW;
  if (s == "VFMP" || s == "VFM(P)") return Theory::VFMP;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Universe

Universe Universe::from_sentences(const std::vector<Formula>& sentences,
                                  unsigned numeral_bound) {
  Universe u;
  u.numeral_bound_ = numeral_bound;
  auto push = [&](const Formula& f) -> std::size_t {
    auto it = u.index_.find(f.code());
    if (it != u.index_.end()) return it->second;
    if (u.pool_.size() >= 64)
      throw std::invalid_argument("universe: pool exceeds 64 sentences");
    std::size_t i = u.pool_.size();
    u.pool_.push_back(f);
    u.codes_.push_back(f.code());
    u.index_.emplace(f.code(), i);
    return i;
  };
  for (const Formula& s : sentences) {
    Formula n = syntax::nnf(s);
    if (!n.closed())
      throw std::invalid_argument("universe: open sentence " +
                                  syntax::print_formula(s));
    push(n);
  }
  // close under single negation
  for (std::size_t i = 0; i < u.pool_.size(); ++i) push(syntax::nnf_not(u.pool_[i]));
  u.negs_.resize(u.pool_.size());
  for (std::size_t i = 0; i < u.pool_.size(); ++i) {
    Formula n = syntax::nnf_not(u.pool_[i]);
    u.negs_[i] = u.index_.at(n.code());
  }
  return u;
}

Universe Universe::load(std::istream& in) {
  std::vector<Formula> sentences;
  std::set<Nat> pext;
  unsigned bound = 2;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "numeral_bound") {
      ls >> bound;
      continue;
    }
    if (head == "p_ext") {
      std::string n;
      while (ls >> n) pext.insert(Nat(n));
      continue;
    }
    std::size_t start = line.find_first_not_of(" \t");
    sentences.push_back(syntax::parse_formula(line.substr(start)));
  }
  Universe u = from_sentences(sentences, bound);
  u.set_p_ext(std::move(pext));
  return u;
}

Universe Universe::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open universe file " + path);
  return load(in);
}

std::optional<std::size_t> Universe::index_of(const Formula& f) const {
  Formula n = syntax::nnf(f);
  auto it = index_.find(n.code());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Universe::index_of_code(const Nat& c) const {
  auto it = index_.find(c);
  if (it != index_.end()) return it->second;
  auto f = syntax::decode(c);
  if (!f) return std::nullopt;
  it = index_.find(syntax::nnf(*f).code());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TruthSet TruthSet::antiextension(const Universe& u) const {
  TruthSet a;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (contains(u.negation_of(i))) a.bits |= 1ull << i;
  return a;
}

bool TruthSet::consistent(const Universe& u) const {
  return (bits & antiextension(u).bits) == 0;
}

std::vector<std::size_t> TruthSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Classical satisfaction with an environment (avoids tree rebuilding in the
// quantifier loops)

namespace {

using Env = std::map<std::string, Nat>;

Nat eval_env(const Term& t, const Env& env);

Nat eval_env(const Term& t, const Env& env) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = env.find(t.var_name());
      if (it == env.end())
        throw syntax::EvalError("open term: variable '" + t.var_name() + "'");
      return it->second;
    }
    case TermKind::Succ:
      return eval_env(t.args()[0], env) + 1;
    case TermKind::CodeOp: {
      using syntax::CodeOpKind;
      namespace cs = syntax::codes;
      switch (t.op()) {
        case CodeOpKind::Neg:
          return cs::neg_of(eval_env(t.args()[0], env));
        case CodeOpKind::Or:
          return cs::or_of(eval_env(t.args()[0], env), eval_env(t.args()[1], env));
        case CodeOpKind::And:
          return cs::and_of(eval_env(t.args()[0], env), eval_env(t.args()[1], env));
        case CodeOpKind::Forall:
          return cs::forall_of(t.args()[0].code(), eval_env(t.args()[1], env));
        case CodeOpKind::Exists:
          return cs::exists_of(t.args()[0].code(), eval_env(t.args()[1], env));
        case CodeOpKind::Tr:
          return cs::tr_atom_of(eval_env(t.args()[0], env));
        case CodeOpKind::Eq:
          return cs::eq_of(eval_env(t.args()[0], env), eval_env(t.args()[1], env));
        case CodeOpKind::P:
          return cs::p_term_of(eval_env(t.args()[0], env));
      }
      throw syntax::EvalError("bad code op");
    }
    case TermKind::Subst:
      return syntax::subst_code(eval_env(t.args()[0], env),
                                eval_env(t.args()[1], env), t.subst_var());
    case TermKind::NumOf:
      return syntax::codes::num_term_of(eval_env(t.args()[0], env));
    default:
      return syntax::eval_term(t);
  }
}

struct Evaluator {
  const Universe& u;
  const TruthSet& x;
  const std::set<Nat>* p_ext;

  bool sat(const Formula& f, Env& env) const {
    switch (f.kind()) {
      case FormulaKind::Eq:
        return eval_env(f.terms()[0], env) == eval_env(f.terms()[1], env);
      case FormulaKind::Tr: {
        auto idx = u.index_of_code(eval_env(f.terms()[0], env));
        return idx && x.contains(*idx);
      }
      case FormulaKind::TrRam: {
        Nat v = eval_env(f.terms()[0], env);
        auto idx = u.index_of_code(v);
        return idx && x.contains(*idx) &&
               syntax::is_sentence(v, syntax::LanguageTag::lram(f.level()));
      }
      case FormulaKind::P: {
        if (!p_ext)
          throw syntax::EvalError("P-atom evaluated without a P-extension");
        return p_ext->count(eval_env(f.terms()[0], env)) > 0;
      }
      case FormulaKind::Not:
        return !sat(f.children()[0], env);
      case FormulaKind::Or:
        return sat(f.children()[0], env) || sat(f.children()[1], env);
      case FormulaKind::And:
        return sat(f.children()[0], env) && sat(f.children()[1], env);
      case FormulaKind::Forall: {
        for (unsigned i = 0; i <= u.numeral_bound(); ++i) {
          env[f.bound_var()] = i;
          bool ok = sat(f.body(), env);
          env.erase(f.bound_var());
          if (!ok) return false;
        }
        return true;
      }
      case FormulaKind::Exists: {
        for (unsigned i = 0; i <= u.numeral_bound(); ++i) {
          env[f.bound_var()] = i;
          bool ok = sat(f.body(), env);
          env.erase(f.bound_var());
          if (ok) return true;
        }
        return false;
      }
    }
    return false;
  }
};

}  // namespace

bool classical_sat(const Universe& u, const TruthSet& x,
                   const std::set<Nat>* p_ext, const Formula& f) {
  Env env;
  return Evaluator{u, x, p_ext}.sat(f, env);
}

// ---------------------------------------------------------------------------
// Admissibility and extension enumeration

bool admissible(Scheme e, const Universe& u, const TruthSet& x,
                const TruthSet& c) {
  switch (e) {
    case Scheme::SV:
      return true;
    case Scheme::VB:
      return (c.bits & x.antiextension(u).bits) == 0;
    case Scheme::VC:
      return c.consistent(u);
    case Scheme::MC: {
      for (std::size_t i = 0; i < u.size(); ++i) {
        std::size_t j = u.negation_of(i);
        if (c.contains(i) == c.contains(j)) return false;  // need exactly one
      }
      return true;
    }
  }
  return false;
}

namespace {

std::uint64_t pool_mask(const Universe& u) {
  return u.size() == 64 ? ~0ull : ((1ull << u.size()) - 1);
}

std::vector<TruthSet> subsets_above(std::uint64_t base, std::uint64_t free) {
  if (__builtin_popcountll(free) > 24)
    throw std::runtime_error("extension enumeration too large for desk scale");
  std::vector<TruthSet> out;
  std::uint64_t s = 0;
  while (true) {
    out.push_back(TruthSet{base | s});
    if (s == free) break;
    s = (s - free) & free;  // next subset of `free`
  }
  return out;
}

// Canonical negation pairs (i < j) of the pool.
std::vector<std::pair<std::size_t, std::size_t>> negation_pairs(const Universe& u) {
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::size_t j = u.negation_of(i);
    if (i < j) ps.push_back({i, j});
  }
  return ps;
}

// Per-pair choice product for vc (with the empty choice) and mc (without).
std::vector<TruthSet> pairwise_extensions(const Universe& u, const TruthSet& x,
                                          bool allow_neither) {
  if (!x.consistent(u)) return {};
  auto pairs = negation_pairs(u);
  std::vector<TruthSet> acc{x};
  for (auto [i, j] : pairs) {
    bool has_i = x.contains(i), has_j = x.contains(j);
    if (has_i && has_j) return {};
    std::vector<std::uint64_t> opts;
    if (has_i)
      opts = {1ull << i};
    else if (has_j)
      opts = {1ull << j};
    else {
      if (allow_neither) opts.push_back(0);
      opts.push_back(1ull << i);
      opts.push_back(1ull << j);
    }
    std::vector<TruthSet> next;
    next.reserve(acc.size() * opts.size());
    for (const TruthSet& t : acc)
      for (std::uint64_t o : opts) next.push_back(TruthSet{t.bits | o});
    acc = std::move(next);
    if (acc.size() > (1u << 22))
      throw std::runtime_error("extension enumeration too large for desk scale");
  }
  return acc;
}

}  // namespace

std::vector<TruthSet> admissible_extensions(Scheme e, const Universe& u,
                                            const TruthSet& x) {
  std::uint64_t full = pool_mask(u);
  switch (e) {
    case Scheme::SV:
      return subsets_above(x.bits, full & ~x.bits);
    case Scheme::VB: {
      std::uint64_t anti = x.antiextension(u).bits;
      if (x.bits & anti) return {};
      return subsets_above(x.bits, full & ~x.bits & ~anti);
    }
    case Scheme::VC:
      return pairwise_extensions(u, x, /*allow_neither=*/true);
    case Scheme::MC:
      return pairwise_extensions(u, x, /*allow_neither=*/false);
  }
  return {};
}

bool sv_sat(Scheme e, const Universe& u, const TruthSet& x, const Formula& f) {
  for (const TruthSet& ext : admissible_extensions(e, u, x))
    if (!classical_sat(u, ext, &u.p_ext(), f)) return false;
  return true;
}

TruthSet jump(Scheme e, const Universe& u, const TruthSet& x) {
  std::vector<TruthSet> exts = admissible_extensions(e, u, x);
  std::uint64_t alive = pool_mask(u);

  unsigned threads = 1;
  if (const char* env = std::getenv("VERITAS_THREADS")) {
    int v = std::atoi(env);
    if (v > 1) threads = static_cast<unsigned>(v);
  }
  if (threads > 1 && exts.size() >= 1024) {
    std::vector<std::uint64_t> killed(threads, 0);
    std::vector<std::thread> workers;
    std::size_t chunk = (exts.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        std::size_t lo = w * chunk, hi = std::min(exts.size(), lo + chunk);
        std::uint64_t dead = 0;
        for (std::size_t k = lo; k < hi; ++k)
          for (std::size_t i = 0; i < u.size(); ++i)
            if (!((dead >> i) & 1) &&
                !classical_sat(u, exts[k], &u.p_ext(), u.sentence(i)))
              dead |= 1ull << i;
        killed[w] = dead;
      });
    }
    for (auto& t : workers) t.join();
    for (std::uint64_t k : killed) alive &= ~k;
    return TruthSet{alive};
  }

  for (const TruthSet& ext : exts) {
    if (!alive) break;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (((alive >> i) & 1) &&
          !classical_sat(u, ext, &u.p_ext(), u.sentence(i)))
        alive &= ~(1ull << i);
  }
  return TruthSet{alive};
}

LfpResult lfp(Scheme e, const Universe& u) {
  LfpResult r;
  TruthSet x;
  for (std::size_t step = 0; step <= u.size() + 1; ++step) {
    TruthSet next = jump(e, u, x);
    if (!x.subset_of(next))
      throw std::logic_error("lfp: jump iteration lost elements (monotonicity violated)");
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
  throw std::logic_error("lfp: did not stabilize within |pool| iterations");
}

std::vector<TruthSet> mcx_enumerate(const Universe& u, const TruthSet& x) {
  return admissible_extensions(Scheme::MC, u, x);
}

}  // namespace veritas::semantics
