#include "snk/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "snk/errors.hpp"

namespace snk {

namespace config {
namespace {
std::atomic<long> g_budget{200000};
}
long spair_budget() { return g_budget.load(); }
void set_spair_budget(long budget) { g_budget.store(budget); }
}  // namespace config

namespace {

// Engine-internal representation: term vector sorted descending by the
// working order.
using Seq = std::vector<Term>;

Seq to_seq(const Polynomial& p, const Order& ord) {
  Seq s(p.terms().begin(), p.terms().end());
  std::sort(s.begin(), s.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
  return s;
}

Polynomial to_poly(const Seq& s, int nvars) {
  return Polynomial::normalize(nvars, std::vector<Term>(s.begin(), s.end()));
}

// a -= c * m * b
void axpy_sub(Seq& a, const Rational& c, const Monomial& m, const Seq& b,
              const Order& ord) {
  Seq out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(a[i++]));
      continue;
    }
    Monomial bm = b[j].m * m;
    if (i == a.size()) {
      Rational coef = -(c * b[j].c);
      if (!coef.is_zero()) out.push_back({std::move(bm), std::move(coef)});
      ++j;
      continue;
    }
    int cmp = ord.cmp(a[i].m, bm);
    if (cmp > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp < 0) {
      Rational coef = -(c * b[j].c);
      if (!coef.is_zero()) out.push_back({std::move(bm), std::move(coef)});
      ++j;
    } else {
      Rational coef = a[i].c - c * b[j].c;
      if (!coef.is_zero()) out.push_back({std::move(bm), std::move(coef)});
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

struct SeqDivisionResult {
  std::vector<Seq> quotients;
  Seq remainder;
};

SeqDivisionResult divide_seq(const Seq& f, const std::vector<Seq>& G,
                             const Order& ord) {
  SeqDivisionResult res;
  res.quotients.resize(G.size());
  Seq p = f;
  while (!p.empty()) {
    bool reduced = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (G[i].empty()) continue;
      if (G[i].front().m.divides(p.front().m)) {
        Monomial m = G[i].front().m.quotient_into(p.front().m);
        Rational c = p.front().c / G[i].front().c;
        // quotient term; keep quotient sorted (terms arrive in decreasing
        // order of p's leading monomial, which need not be monotone for the
        // quotient, so insert by search).
        Seq& q = res.quotients[i];
        Term qt{m, c};
        auto it = std::lower_bound(
            q.begin(), q.end(), qt,
            [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
        if (it != q.end() && it->m == qt.m) {
          it->c += qt.c;
          if (it->c.is_zero()) q.erase(it);
        } else {
          q.insert(it, std::move(qt));
        }
        axpy_sub(p, c, m, G[i], ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      res.remainder.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return res;
}

Seq normal_form_seq(const Seq& f, const std::vector<Seq>& G, const Order& ord) {
  Seq p = f;
  Seq rem;
  while (!p.empty()) {
    bool reduced = false;
    for (const Seq& g : G) {
      if (g.empty()) continue;
      if (g.front().m.divides(p.front().m)) {
        Rational c = p.front().c / g.front().c;
        axpy_sub(p, c, g.front().m.quotient_into(p.front().m), g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return rem;
}

// Integer-primitive scaling for intermediate results keeps coefficient growth
// in check during basis construction.
void make_primitive(Seq& s) {
  if (s.empty()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : s) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.den().get_mpz_t());
  }
  Rational scale{mpq_class(den_lcm) / mpq_class(num_gcd)};
  if (s.front().c.sign() < 0) scale = -scale;
  if (scale.is_one()) return;
  for (Term& t : s) t.c *= scale;
}

struct Pair {
  Monomial l;      // lcm of the two leading monomials
  size_t i, j;     // i < j
};

// Normal selection: smallest lcm first; index tie-break for determinism.
struct PairLess {
  const Order* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = ord->cmp(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

Basis reduce_basis(std::vector<Seq> gb, const Order& ord, int nvars) {
  // Minimalize: drop elements whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<char> keep(gb.size(), 1);
  for (size_t i = 0; i < gb.size(); ++i) {
    if (!keep[i]) continue;
    for (size_t j = 0; j < gb.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (gb[j].front().m.divides(gb[i].front().m) &&
          !(gb[i].front().m == gb[j].front().m && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Seq> minimal;
  for (size_t i = 0; i < gb.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(gb[i]));

  // Tail-reduce each element against the others. Leading monomials are
  // pairwise non-divisible, so one pass suffices.
  std::vector<Seq> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Seq> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Seq nf = normal_form_seq(minimal[i], others, ord);
    if (!nf.empty()) reduced.push_back(std::move(nf));
  }

  // Monic, sorted descending by leading monomial.
  std::sort(reduced.begin(), reduced.end(), [&](const Seq& a, const Seq& b) {
    return ord.greater(a.front().m, b.front().m);
  });
  Basis out;
  out.reserve(reduced.size());
  for (Seq& s : reduced) {
    Rational lc_inv = s.front().c.inverse();
    for (Term& t : s) t.c *= lc_inv;
    out.push_back(to_poly(s, nvars));
  }
  return out;
}

}  // namespace

DivisionResult divide_multi(const Polynomial& f,
                            const std::vector<Polynomial>& G,
                            const Order& ord) {
  if (G.empty()) throw InputError("divide_multi: empty divisor list");
  std::vector<Seq> gs;
  gs.reserve(G.size());
  for (const Polynomial& g : G) {
    if (g.is_zero()) throw InputError("divide_multi: zero divisor in list");
    gs.push_back(to_seq(g, ord));
  }
  SeqDivisionResult sr = divide_seq(to_seq(f, ord), gs, ord);
  DivisionResult res;
  res.remainder = to_poly(sr.remainder, f.nvars());
  res.quotients.reserve(G.size());
  for (const Seq& q : sr.quotients) res.quotients.push_back(to_poly(q, f.nvars()));
  return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const Order& ord) {
  std::vector<Seq> gs;
  gs.reserve(G.size());
  for (const Polynomial& g : G)
    if (!g.is_zero()) gs.push_back(to_seq(g, ord));
  return to_poly(normal_form_seq(to_seq(f, ord), gs, ord), f.nvars());
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Order& ord) {
  if (f.is_zero() || g.is_zero()) throw InputError("spoly of zero polynomial");
  const Term& lf = f.leading_term(ord);
  const Term& lg = g.leading_term(ord);
  Monomial l = lcm(lf.m, lg.m);
  Polynomial a = f.times_term(lf.m.quotient_into(l), lf.c.inverse());
  Polynomial b = g.times_term(lg.m.quotient_into(l), lg.c.inverse());
  return a - b;
}

Basis groebner_basis(const std::vector<Polynomial>& gens, const Order& ord,
                     long budget, GbStats* stats) {
  if (budget <= 0) budget = config::spair_budget();
  int nvars = 0;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) nvars = g.nvars();

  std::vector<Seq> basis;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Seq s = to_seq(g, ord);
    make_primitive(s);
    basis.push_back(std::move(s));
  }
  if (basis.empty()) return {};

  std::set<Pair, PairLess> pending(PairLess{&ord});
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pending.insert({lcm(basis[i].front().m, basis[j].front().m), i, j});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  long processed = 0;
  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    if (++processed > budget) throw BudgetExceeded(processed);
    if (stats) stats->spairs++;

    const Monomial& lmi = basis[pr.i].front().m;
    const Monomial& lmj = basis[pr.j].front().m;
    // Product criterion.
    if (coprime(lmi, lmj)) continue;
    // Chain criterion: some k with LM(k) | lcm(i,j) whose pairs with i and j
    // were both already treated.
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].front().m.divides(pr.l)) continue;
      Pair pik{lcm(lmi, basis[k].front().m), std::min(pr.i, k), std::max(pr.i, k)};
      Pair pjk{lcm(lmj, basis[k].front().m), std::min(pr.j, k), std::max(pr.j, k)};
      if (pending.count(pik) == 0 && pending.count(pjk) == 0) skip = true;
    }
    if (skip) continue;

    // S-polynomial and full reduction.
    Seq s;
    {
      const Seq& f = basis[pr.i];
      const Seq& g = basis[pr.j];
      Seq a;
      Monomial ma = f.front().m.quotient_into(pr.l);
      Monomial mb = g.front().m.quotient_into(pr.l);
      a.reserve(f.size());
      for (const Term& t : f) a.push_back({t.m * ma, t.c / f.front().c});
      axpy_sub(a, g.front().c.inverse(), mb, g, ord);
      s = normal_form_seq(a, basis, ord);
    }
    if (s.empty()) continue;
    make_primitive(s);
    basis.push_back(std::move(s));
    push_pairs_for(basis.size() - 1);
  }

  return reduce_basis(std::move(basis), ord, nvars);
}

Ideal::Ideal(int nvars, std::vector<Polynomial> gens)
    : nvars_(nvars), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : gens_)
    if (g.nvars() != nvars_) throw InputError("ideal generator ring mismatch");
}

const Basis& Ideal::groebner(const Order& ord, long budget,
                             GbStats* stats) const {
  std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return *it->second;
  }
  auto basis = std::make_unique<Basis>(groebner_basis(gens_, ord, budget, stats));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->entries.emplace(key, std::move(basis));
  return *it->second;
}

bool contains(const Ideal& I, const Polynomial& f, GbStats* stats) {
  if (f.is_zero()) return true;
  const Basis& gb = I.groebner(Order::grevlex(I.nvars()), 0, stats);
  if (gb.empty()) return false;
  return normal_form(f, gb, Order::grevlex(I.nvars())).is_zero();
}

bool is_unit_ideal(const Ideal& I, GbStats* stats) {
  const Basis& gb = I.groebner(Order::grevlex(I.nvars()), 0, stats);
  for (const Polynomial& g : gb)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

bool radical_contains(const Ideal& I, const Polynomial& f, GbStats* stats) {
  if (f.is_zero()) return true;
  int n = I.nvars();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens()) gens.push_back(embed_front(g, n + 1));
  // 1 - z*f with z the fresh last variable.
  gens.push_back(Polynomial::one(n + 1) -
                 Polynomial::variable(n + 1, n) * embed_front(f, n + 1));
  Basis gb = groebner_basis(gens, Order::grevlex(n + 1), 0, stats);
  for (const Polynomial& g : gb)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars,
                GbStats* stats) {
  for (int v : drop_vars)
    if (v < 0 || v >= I.nvars())
      throw InputError("eliminate: variable out of range");
  Order ord = Order::block(I.nvars(), drop_vars);
  const Basis& gb = I.groebner(ord, 0, stats);
  std::vector<char> dropped(I.nvars(), 0);
  for (int v : drop_vars) dropped[v] = 1;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    bool uses = false;
    for (int v = 0; v < I.nvars() && !uses; ++v)
      if (dropped[v] && g.uses_var(v)) uses = true;
    if (!uses) kept.push_back(g);
  }
  return Ideal(I.nvars(), std::move(kept));
}

Ideal saturate(const Ideal& I, const Polynomial& q, GbStats* stats) {
  if (q.is_zero()) throw InputError("saturate by zero");
  int n = I.nvars();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens()) gens.push_back(embed_front(g, n + 1));
  gens.push_back(Polynomial::one(n + 1) -
                 Polynomial::variable(n + 1, n) * embed_front(q, n + 1));
  Ideal ext(n + 1, std::move(gens));
  Ideal elim = eliminate(ext, {n}, stats);
  return restrict_front(elim, n);
}

namespace {
Polynomial divide_exact(const Polynomial& f, const Polynomial& q) {
  DivisionResult d = divide_multi(f, {q}, Order::grevlex(f.nvars()));
  if (!d.remainder.is_zero())
    throw InputError("internal: expected exact division");
  return d.quotients[0];
}
}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J, GbStats* stats) {
  if (I.nvars() != J.nvars()) throw InputError("intersect: ring mismatch");
  int n = I.nvars();
  Polynomial z = Polynomial::variable(n + 1, n);
  Polynomial one_minus_z = Polynomial::one(n + 1) - z;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens())
    gens.push_back(z * embed_front(g, n + 1));
  for (const Polynomial& g : J.gens())
    gens.push_back(one_minus_z * embed_front(g, n + 1));
  Ideal ext(n + 1, std::move(gens));
  return restrict_front(eliminate(ext, {n}, stats), n);
}

Ideal quotient_by(const Ideal& I, const Polynomial& q, GbStats* stats) {
  if (q.is_zero()) throw InputError("quotient by zero");
  if (q.is_constant()) return I;
  Ideal qi(I.nvars(), {q});
  Ideal meet = intersect(I, qi, stats);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : meet.gens()) gens.push_back(divide_exact(g, q));
  return Ideal(I.nvars(), std::move(gens));
}

bool equal_radical(const Ideal& I, const Ideal& J, GbStats* stats) {
  for (const Polynomial& g : J.gens())
    if (!radical_contains(I, g, stats)) return false;
  for (const Polynomial& g : I.gens())
    if (!radical_contains(J, g, stats)) return false;
  return true;
}

bool is_nzd(const Ideal& I, const Polynomial& q, GbStats* stats) {
  if (q.is_zero()) return false;
  if (contains(I, q, stats)) return false;
  Ideal colon = quotient_by(I, q, stats);
  for (const Polynomial& g : colon.gens())
    if (!contains(I, g, stats)) return false;
  return true;  // I subset (I : q) always holds
}

Ideal restrict_front(const Ideal& I, int new_nvars) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens())
    gens.push_back(g.restrict_front(new_nvars));
  return Ideal(new_nvars, std::move(gens));
}

Polynomial embed_front(const Polynomial& p, int new_nvars) {
  std::vector<int> map(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) map[i] = i;
  return p.embed(new_nvars, map);
}

Ideal embed(const Ideal& I, int new_nvars, const std::vector<int>& var_map) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens())
    gens.push_back(g.embed(new_nvars, var_map));
  return Ideal(new_nvars, std::move(gens));
}

Ideal embed_front(const Ideal& I, int new_nvars) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens()) gens.push_back(embed_front(g, new_nvars));
  return Ideal(new_nvars, std::move(gens));
}

}  // namespace snk
