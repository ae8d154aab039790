#include "jetdisc/groebner.hpp"

#include <algorithm>
#include <chrono>

#include "jetdisc/errors.hpp"
#include "jetdisc/poly_io.hpp"

namespace jetdisc {

Ideal::Ideal(VarSet vars, std::vector<Polynomial> generators) : vars_(std::move(vars)) {
  for (auto& g : generators) {
    if (!(g.vars() == vars_)) throw VarSetMismatch("ideal generator over a different VarSet");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::with_basis(std::vector<Polynomial> basis, const TermOrder& order) const {
  Ideal copy = *this;
  copy.basis_ = std::make_shared<const CachedBasis>(CachedBasis{std::move(basis), order});
  return copy;
}

const Term& leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  if (order.kind() == TermOrder::Kind::Grevlex) return f.leading_term();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

namespace {

thread_local const GroebnerObserver* current_observer = nullptr;

// Terms sorted by decreasing monomial under the active order.
using TermList = std::vector<Term>;

struct GPoly {
  TermList terms;
  int sugar = 0;
};

class Engine {
 public:
  Engine(const TermOrder& order, const GroebnerOptions& options) : order_(order), options_(options) {
    if (options_.timeout_seconds > 0)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(options_.timeout_seconds));
  }

  TermList sorted(const Polynomial& f) const {
    TermList t(f.terms().begin(), f.terms().end());
    if (order_.kind() != TermOrder::Kind::Grevlex)
      std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
    return t;
  }

  static void make_monic(TermList& t) {
    if (t.empty() || t.front().coef == 1) return;
    Scalar inv = 1 / t.front().coef;
    for (auto& x : t) x.coef *= inv;
  }

  // h[from..] - c * m * g
  TermList sub_scaled(const TermList& h, std::size_t from, const Scalar& c, const Monomial& m, const TermList& g) const {
    TermList out;
    out.reserve(h.size() - from + g.size());
    std::size_t i = from, j = 0;
    while (i < h.size() && j < g.size()) {
      Monomial gm = g[j].monomial * m;
      int cmp = order_.compare(h[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), -c * g[j].coef});
        ++j;
      } else {
        Scalar s = h[i].coef - c * g[j].coef;
        if (s != 0) out.push_back({h[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < h.size(); ++i) out.push_back(h[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].monomial * m, -c * g[j].coef});
    return out;
  }

  // Full reduction of h modulo the given (monic) divisors.
  GPoly reduce(GPoly h, const std::vector<const GPoly*>& divisors) const {
    TermList rem;
    std::size_t pos = 0;
    while (pos < h.terms.size()) {
      const Term& lt = h.terms[pos];
      const GPoly* div = nullptr;
      for (const GPoly* g : divisors) {
        if (divides(g->terms.front().monomial, lt.monomial)) {
          div = g;
          break;
        }
      }
      if (!div) {
        rem.push_back(lt);
        ++pos;
        continue;
      }
      Monomial m = lt.monomial / div->terms.front().monomial;
      Scalar c = lt.coef / div->terms.front().coef;
      h.sugar = std::max(h.sugar, div->sugar + m.degree());
      h.terms = sub_scaled(h.terms, pos, c, m, div->terms);
      pos = 0;
    }
    h.terms = std::move(rem);
    return h;
  }

  GPoly spoly(const GPoly& f, const GPoly& g) const {
    const Term& lf = f.terms.front();
    const Term& lg = g.terms.front();
    Monomial l = lcm(lf.monomial, lg.monomial);
    Monomial mf = l / lf.monomial, mg = l / lg.monomial;
    TermList a;
    a.reserve(f.terms.size());
    Scalar cf = 1 / lf.coef;
    for (const auto& t : f.terms) a.push_back({t.monomial * mf, t.coef * cf});
    GPoly s;
    s.terms = sub_scaled(a, 0, 1 / lg.coef, mg, g.terms);
    s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    return s;
  }

  std::vector<Polynomial> run(const VarSet& vars, const std::vector<Polynomial>& generators) {
    for (const auto& f : generators) {
      if (f.is_zero()) continue;
      GPoly g{sorted(f), f.degree()};
      check_limits();
      g = reduce(std::move(g), active());
      if (g.terms.empty()) continue;
      make_monic(g.terms);
      add(std::move(g));
    }
    while (!pairs_.empty()) {
      check_limits();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_before(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      GPoly h = reduce(spoly(polys_[p.i], polys_[p.j]), active());
      if (h.terms.empty()) continue;
      make_monic(h.terms);
      add(std::move(h));
    }
    return reduced_basis(vars);
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  bool pair_before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].terms.front().monomial; }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(lm(i), lm(j));
    int sugar = std::max(polys_[i].sugar - lm(i).degree(), polys_[j].sugar - lm(j).degree()) + l.degree();
    return {i, j, std::move(l), sugar};
  }

  std::vector<const GPoly*> active() const {
    std::vector<const GPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (in_basis_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller update for a new basis element.
  void add(GPoly h) {
    polys_.push_back(std::move(h));
    in_basis_.push_back(false);
    const std::size_t hi = polys_.size() - 1;
    const Monomial& lh = lm(hi);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (in_basis_[g]) candidates.push_back(make_pair(g, hi));
    created_pairs_ += candidates.size();
    if (created_pairs_ > options_.max_pairs)
      throw ResourceLimitError("Groebner pair bound exceeded (" + std::to_string(options_.max_pairs) + " pairs)");

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool disjoint = coprime(lh, lm(p.i));
      bool dominated = false;
      if (!disjoint) {
        for (std::size_t q = k + 1; q < candidates.size() && !dominated; ++q)
          dominated = divides(candidates[q].lcm, p.lcm);
        for (std::size_t q = 0; q < kept.size() && !dominated; ++q) dominated = divides(kept[q].lcm, p.lcm);
      }
      if (disjoint || !dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!coprime(lh, lm(p.i))) fresh.push_back(std::move(p));

    std::vector<Pair> old;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lh, lm(p.j)) == p.lcm);
      if (!drop) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t g = 0; g < hi; ++g)
      if (in_basis_[g] && divides(lh, lm(g))) in_basis_[g] = false;
    in_basis_[hi] = true;
  }

  std::vector<Polynomial> reduced_basis(const VarSet& vars) const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (in_basis_[k]) idx.push_back(k);
    std::vector<GPoly> out;
    for (auto k : idx) {
      std::vector<const GPoly*> others;
      for (auto o : idx)
        if (o != k) others.push_back(&polys_[o]);
      GPoly g = polys_[k];
      // Leading term is irreducible by the others (minimal basis); reduce the tail.
      Term lead = g.terms.front();
      GPoly tail{TermList(g.terms.begin() + 1, g.terms.end()), g.sugar};
      tail = reduce(std::move(tail), others);
      g.terms.clear();
      g.terms.push_back(std::move(lead));
      g.terms.insert(g.terms.end(), tail.terms.begin(), tail.terms.end());
      make_monic(g.terms);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) {
      return order_.compare(a.terms.front().monomial, b.terms.front().monomial) < 0;
    });
    std::vector<Polynomial> result;
    for (auto& g : out) result.emplace_back(vars, std::move(g.terms));
    return result;
  }

  void check_limits() const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw ResourceLimitError("Groebner computation exceeded its time limit");
  }

  const TermOrder& order_;
  GroebnerOptions options_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::vector<GPoly> polys_;
  std::vector<bool> in_basis_;
  std::vector<Pair> pairs_;
  std::size_t created_pairs_ = 0;
};

}  // namespace

Ideal groebner_basis(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& options) {
  Engine engine(order, options);
  Ideal result = ideal.with_basis(engine.run(ideal.vars(), ideal.generators()), order);
  if (current_observer && *current_observer) (*current_observer)(ideal, result);
  return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order) {
  Engine engine(order, {});
  std::vector<GPoly> divs;
  divs.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    if (!(d.vars() == f.vars())) throw VarSetMismatch("normal form over different VarSets");
    divs.push_back({engine.sorted(d), 0});
  }
  std::vector<const GPoly*> ptrs;
  for (const auto& d : divs) ptrs.push_back(&d);
  GPoly r = engine.reduce({engine.sorted(f), 0}, ptrs);
  return Polynomial(f.vars(), std::move(r.terms));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  if (!(f.vars() == g.vars())) throw VarSetMismatch("S-polynomial over different VarSets");
  const Term& lf = leading_term(f, order);
  const Term& lg = leading_term(g, order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  Polynomial a = f * Polynomial::monomial(f.vars(), l / lf.monomial, 1 / lf.coef);
  Polynomial b = g * Polynomial::monomial(g.vars(), l / lg.monomial, 1 / lg.coef);
  return a - b;
}

GroebnerCheck verify_groebner(std::span<const Polynomial> generators, std::span<const Polynomial> basis,
                              const TermOrder& order) {
  GroebnerCheck check;
  check.s_pairs_reduce = true;
  for (std::size_t i = 0; i < basis.size() && check.s_pairs_reduce; ++i)
    for (std::size_t j = i + 1; j < basis.size() && check.s_pairs_reduce; ++j)
      check.s_pairs_reduce = normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero();
  check.generators_reduce = std::all_of(generators.begin(), generators.end(), [&](const Polynomial& g) {
    return normal_form(g, basis, order).is_zero();
  });
  return check;
}

ScopedGroebnerObserver::ScopedGroebnerObserver(GroebnerObserver observer)
    : observer_(std::move(observer)), previous_(current_observer) {
  current_observer = &observer_;
}

ScopedGroebnerObserver::~ScopedGroebnerObserver() { current_observer = previous_; }

nlohmann::json to_json(const Ideal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  const auto& polys = ideal.has_basis() ? ideal.basis() : ideal.generators();
  for (const auto& g : polys) gens.push_back(to_json(g));
  nlohmann::json order = ideal.has_basis() ? ideal.basis_order().to_json() : nlohmann::json(nullptr);
  return {{"vars", ideal.vars().names()}, {"order", std::move(order)}, {"generators", std::move(gens)}};
}

}  // namespace jetdisc
