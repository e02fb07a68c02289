#include "snk/tracked.hpp"

#include <algorithm>
#include <set>

#include "snk/errors.hpp"

namespace snk {

namespace {

struct Elt {
  Polynomial p;
  std::vector<Polynomial> row;
};

struct Pair {
  Monomial l;
  size_t i, j;
};

struct PairLess {
  const Order* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = ord->cmp(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Fully reduces e.p against the live elements, updating e.row in step.
void reduce_tracked(Elt& e, const std::vector<Elt>& basis, const Order& ord,
                    int nvars) {
  Polynomial rem(nvars);
  while (!e.p.is_zero()) {
    const Term& lt = e.p.leading_term(ord);
    bool hit = false;
    for (const Elt& g : basis) {
      if (g.p.is_zero()) continue;
      const Term& lg = g.p.leading_term(ord);
      if (lg.m.divides(lt.m)) {
        Monomial m = lg.m.quotient_into(lt.m);
        Rational c = lt.c / lg.c;
        e.p = e.p - g.p.times_term(m, c);
        for (size_t j = 0; j < e.row.size(); ++j)
          e.row[j] = e.row[j] - g.row[j].times_term(m, c);
        hit = true;
        break;
      }
    }
    if (!hit) {
      // Move the leading term out of the working polynomial.
      Polynomial t = Polynomial::monomial(nvars, lt.m, lt.c);
      rem = rem + t;
      e.p = e.p - t;
    }
  }
  e.p = rem;
}

void scale_elt(Elt& e, const Rational& c) {
  e.p = e.p.scaled(c);
  for (Polynomial& r : e.row) r = r.scaled(c);
}

// Integer-primitive rescaling against coefficient blowup.
void make_primitive_elt(Elt& e, const Order& ord) {
  if (e.p.is_zero()) return;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : e.p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.den().get_mpz_t());
  }
  Rational scale{mpq_class(den_lcm) / mpq_class(num_gcd)};
  if (e.p.leading_term(ord).c.sign() < 0) scale = -scale;
  if (!scale.is_one()) scale_elt(e, scale);
}

}  // namespace

TrackedBasis groebner_tracked(const std::vector<Polynomial>& gens,
                              const Order& ord, long budget, GbStats* stats) {
  if (budget <= 0) budget = config::spair_budget();
  int nvars = 0;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) nvars = g.nvars();

  std::vector<Elt> basis;
  for (size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero()) continue;
    Elt e;
    e.p = gens[j];
    e.row.assign(gens.size(), Polynomial(nvars));
    e.row[j] = Polynomial::one(nvars);
    basis.push_back(std::move(e));
  }
  TrackedBasis out;
  out.gens = gens;
  if (basis.empty()) return out;

  std::set<Pair, PairLess> pending(PairLess{&ord});
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pending.insert({lcm(basis[i].p.leading_term(ord).m,
                          basis[j].p.leading_term(ord).m),
                      i, j});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  long processed = 0;
  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    if (++processed > budget) throw BudgetExceeded(processed);
    if (stats) stats->spairs++;

    const Term& li = basis[pr.i].p.leading_term(ord);
    const Term& lj = basis[pr.j].p.leading_term(ord);
    if (coprime(li.m, lj.m)) continue;
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      const Monomial& lk = basis[k].p.leading_term(ord).m;
      if (!lk.divides(pr.l)) continue;
      Pair pik{lcm(li.m, lk), std::min(pr.i, k), std::max(pr.i, k)};
      Pair pjk{lcm(lj.m, lk), std::min(pr.j, k), std::max(pr.j, k)};
      if (pending.count(pik) == 0 && pending.count(pjk) == 0) skip = true;
    }
    if (skip) continue;

    Elt s;
    Monomial mi = li.m.quotient_into(pr.l);
    Monomial mj = lj.m.quotient_into(pr.l);
    Rational ci = li.c.inverse(), cj = lj.c.inverse();
    s.p = basis[pr.i].p.times_term(mi, ci) - basis[pr.j].p.times_term(mj, cj);
    s.row.assign(gens.size(), Polynomial(nvars));
    for (size_t k = 0; k < gens.size(); ++k)
      s.row[k] = basis[pr.i].row[k].times_term(mi, ci) -
                 basis[pr.j].row[k].times_term(mj, cj);
    reduce_tracked(s, basis, ord, nvars);
    if (s.p.is_zero()) continue;
    make_primitive_elt(s, ord);
    basis.push_back(std::move(s));
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize.
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    const Monomial& mi = basis[i].p.leading_term(ord).m;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mj = basis[j].p.leading_term(ord).m;
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Elt> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce and make monic.
  std::vector<Elt> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Elt> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Elt e = minimal[i];
    reduce_tracked(e, others, ord, nvars);
    if (e.p.is_zero()) continue;
    scale_elt(e, e.p.leading_term(ord).c.inverse());
    reduced.push_back(std::move(e));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Elt& a, const Elt& b) {
    return ord.greater(a.p.leading_term(ord).m, b.p.leading_term(ord).m);
  });

  for (Elt& e : reduced) {
    out.basis.push_back(std::move(e.p));
    out.rows.push_back(std::move(e.row));
  }
  return out;
}

TrackedNF tracked_normal_form(const Polynomial& f, const TrackedBasis& tb,
                              const Order& ord) {
  int nvars = f.nvars();
  TrackedNF res;
  res.cofactors.assign(tb.gens.size(), Polynomial(nvars));
  Polynomial p = f;
  Polynomial rem(nvars);
  while (!p.is_zero()) {
    const Term& lt = p.leading_term(ord);
    bool hit = false;
    for (size_t i = 0; i < tb.basis.size(); ++i) {
      const Term& lg = tb.basis[i].leading_term(ord);
      if (lg.m.divides(lt.m)) {
        Monomial m = lg.m.quotient_into(lt.m);
        Rational c = lt.c / lg.c;
        p = p - tb.basis[i].times_term(m, c);
        for (size_t j = 0; j < res.cofactors.size(); ++j)
          res.cofactors[j] =
              res.cofactors[j] + tb.rows[i][j].times_term(m, c);
        hit = true;
        break;
      }
    }
    if (!hit) {
      Polynomial t = Polynomial::monomial(nvars, lt.m, lt.c);
      rem = rem + t;
      p = p - t;
    }
  }
  res.remainder = rem;
  return res;
}

}  // namespace snk
