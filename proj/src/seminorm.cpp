#include "snk/seminorm.hpp"

#include "snk/errors.hpp"
#include "snk/tracked.hpp"

namespace snk {

SeminormTower make_tower(const VarietyPresentation& X) {
  SeminormTower T;
  T.base = X;
  T.current.base = X;
  T.current.J = X.I;
  return T;
}

std::optional<Polynomial> ring_representative(const VarietyPresentation& X,
                                              const Fraction& f,
                                              GbStats* stats) {
  Ideal J = graph_closure(X, f, stats);
  int nv = X.nvars();
  Order ord = Order::block(nv + 1, {nv});
  const Basis& gb = J.groebner(ord, 0, stats);
  for (const Polynomial& g : gb) {
    const Monomial& lm = g.leading_term(ord).m;
    if (lm.e[nv] != 1) continue;
    bool pure = true;
    for (int i = 0; i < nv; ++i)
      if (lm.e[i] != 0) pure = false;
    if (!pure) continue;
    Polynomial h = Polynomial::variable(nv + 1, nv) - g;
    if (h.uses_var(nv)) continue;
    return h.restrict_front(nv);
  }
  return std::nullopt;
}

SeminormTower adjoin(const SeminormTower& T, const Fraction& f,
                     GbStats* stats) {
  VarietyPresentation cur = T.current_variety();

  RegulousVerdict rv = is_regulous(cur, f, stats);
  if (rv.verdict == Verdict::Undecided)
    throw BudgetExceeded(stats ? stats->spairs : 0);
  if (rv.verdict == Verdict::NotRegulous)
    throw NotRegulousError("candidate is not regulous: " + rv.message);

  // Reject elements that already live in the ring.
  {
    int nv = cur.nvars();
    Order ord = Order::block(nv + 1, {nv});
    const Basis& gb = rv.graph_ideal.groebner(ord, 0, stats);
    for (const Polynomial& g : gb) {
      const Monomial& lm = g.leading_term(ord).m;
      if (lm.e[nv] != 1) continue;
      bool pure = true;
      for (int i = 0; i < nv; ++i)
        if (lm.e[i] != 0) pure = false;
      if (!pure) continue;
      Polynomial h = Polynomial::variable(nv + 1, nv) - g;
      if (!h.uses_var(nv))
        throw AlreadyInRing("candidate already lies in the coordinate ring");
    }
  }

  std::string name =
      fresh_var_name(cur.vars, "t" + std::to_string(T.height() + 1));

  SeminormTower grown;
  grown.base = T.base;
  grown.steps = T.steps;
  grown.steps.push_back({f, name, rv.graph_ideal.gens()});
  grown.current.base = T.base;
  grown.current.adjoined = T.current.adjoined;
  grown.current.adjoined.push_back(name);
  grown.current.J = rv.graph_ideal;

  if (!is_subintegral(grown.current, stats))
    throw PreconditionFailed(
        "internal: adjunction failed the subintegrality re-verification");
  return grown;
}

SeminormalizeResult seminormalize_with_candidates(
    const VarietyPresentation& X, const std::vector<Fraction>& candidates,
    GbStats* stats) {
  SeminormalizeResult out;
  out.tower = make_tower(X);
  for (const Fraction& cand : candidates) {
    CandidateReport rep;
    rep.candidate = cand;
    int total = out.tower.current.total_vars();
    Fraction lifted{embed_front(cand.p, total), embed_front(cand.q, total)};
    try {
      out.tower = adjoin(out.tower, lifted, stats);
      rep.status = CandidateStatus::Adjoined;
      rep.detail = out.tower.steps.back().var_name;
    } catch (const AlreadyInRing& e) {
      rep.status = CandidateStatus::AlreadyInRing;
      rep.detail = e.what();
      rep.in_ring_rep =
          ring_representative(out.tower.current_variety(), lifted, stats);
    } catch (const NotRegulousError& e) {
      rep.status = CandidateStatus::NotRegulous;
      rep.detail = e.what();
    } catch (const std::runtime_error& e) {
      rep.status = CandidateStatus::Error;
      rep.detail = e.what();
    }
    out.report.push_back(std::move(rep));
  }
  return out;
}

namespace {

void enum_monomials(int nvars, long max_deg, Monomial& cur, int var,
                    std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  long used = 0;
  for (int i = 0; i < var; ++i) used += cur.e[i];
  for (long e = 0; used + e <= max_deg; ++e) {
    cur.e[var] = static_cast<int32_t>(e);
    enum_monomials(nvars, max_deg, cur, var + 1, out);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<SwanScanHit> swan_scan(const VarietyPresentation& X,
                                   int degree_bound,
                                   const std::vector<Rational>& coefficient_set,
                                   GbStats* stats) {
  int nv = X.nvars();
  std::vector<Monomial> monos;
  {
    Monomial cur(nv);
    enum_monomials(nv, degree_bound, cur, 0, monos);
  }
  // All coefficient assignments over the monomial slice.
  std::vector<Polynomial> slice;
  {
    size_t count = 1;
    for (size_t i = 0; i < monos.size(); ++i) {
      count *= coefficient_set.size();
      if (count > 2000000) throw InputError("swan_scan slice too large");
    }
    std::vector<size_t> idx(monos.size(), 0);
    for (size_t it = 0; it < count; ++it) {
      std::vector<Term> terms;
      size_t rest = it;
      for (size_t i = 0; i < monos.size(); ++i) {
        const Rational& c = coefficient_set[rest % coefficient_set.size()];
        rest /= coefficient_set.size();
        if (!c.is_zero()) terms.push_back({monos[i], c});
      }
      slice.push_back(Polynomial::normalize(nv, std::move(terms)));
    }
  }

  std::vector<SwanScanHit> hits;
  for (const Polynomial& q : slice) {
    Polynomial q3 = q.pow(3);
    for (const Polynomial& p : slice) {
      if (!contains(X.I, p * p - q3, stats)) continue;
      SwanResult solved = swan_pair_solve(X, p, q, stats);
      if (solved.kind == SwanResult::ProperlyRegulous)
        hits.push_back({p, q, solved});
    }
  }
  return hits;
}

NullstellensatzWitness nullstellensatz_witness(
    const SeminormTower& T, const Polynomial& f,
    const std::vector<Polynomial>& gens, int bound, GbStats* stats) {
  int total = T.current.total_vars();
  if (f.nvars() != total)
    throw InputError("nullstellensatz: f lives in the wrong ring");
  std::vector<Polynomial> combined = gens;
  for (const Polynomial& g : T.current.J.gens()) combined.push_back(g);

  {
    Ideal full(total, combined);
    if (!radical_contains(full, f, stats))
      throw NotInRadical("f does not vanish on the common zero set");
  }

  Order ord = Order::grevlex(total);
  TrackedBasis tb = groebner_tracked(combined, ord, 0, stats);
  const Basis jb = T.current.J.gens().empty()
                       ? Basis{}
                       : T.current.J.groebner(ord, 0, stats);
  Polynomial fp = Polynomial::one(total);
  for (int n = 1; n <= bound; ++n) {
    fp = fp * f;
    TrackedNF nf = tracked_normal_form(fp, tb, ord);
    if (!nf.remainder.is_zero()) continue;
    NullstellensatzWitness w;
    w.n = n;
    w.cofactors.assign(nf.cofactors.begin(), nf.cofactors.begin() + gens.size());
    // Re-substitution: f^n - sum h_i g_i must vanish modulo the presentation
    // relations.
    Polynomial r = fp;
    for (size_t i = 0; i < gens.size(); ++i) r = r - w.cofactors[i] * gens[i];
    Polynomial rr = jb.empty() ? r : normal_form(r, jb, ord);
    if (!rr.is_zero())
      throw PreconditionFailed("internal: cofactor re-substitution failed");
    return w;
  }
  throw NotFoundWithinBound("no explicit power within the witness bound " +
                            std::to_string(bound));
}

}  // namespace snk
