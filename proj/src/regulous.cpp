#include "snk/regulous.hpp"

#include <numeric>

#include "snk/errors.hpp"
#include "snk/tracked.hpp"

namespace snk {

std::string fresh_var_name(const std::vector<std::string>& vars,
                           const std::string& base) {
  auto taken = [&](const std::string& name) {
    for (const std::string& v : vars)
      if (v == name) return true;
    return false;
  };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!taken(cand)) return cand;
  }
}

namespace {

std::vector<Polynomial> embed_list_front(const std::vector<Polynomial>& v,
                                         int n) {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (const Polynomial& g : v) out.push_back(embed_front(g, n));
  return out;
}

// Linear-in-t basis element c(x)*t - r(x); returns false unless the element
// has t-degree exactly one.
bool split_linear_in_t(const Polynomial& g, int tvar, Polynomial* c,
                       Polynomial* r) {
  int n = g.nvars();
  std::vector<Term> cs, rs;
  for (const Term& t : g.terms()) {
    if (t.m.e[tvar] == 0) {
      rs.push_back({t.m, -t.c});
    } else if (t.m.e[tvar] == 1) {
      Monomial m = t.m;
      m.e[tvar] = 0;
      cs.push_back({m, t.c});
    } else {
      return false;
    }
  }
  if (cs.empty()) return false;
  *c = Polynomial::normalize(n, std::move(cs));
  *r = Polynomial::normalize(n, std::move(rs));
  return true;
}

// GB element of the shape t - h(x); h free of t.
std::optional<Polynomial> find_ring_representative(const Basis& gb,
                                                   const Order& ord,
                                                   int tvar) {
  for (const Polynomial& g : gb) {
    const Monomial& lm = g.leading_term(ord).m;
    if (lm.e[tvar] != 1) continue;
    bool pure = true;
    for (int i = 0; i < lm.nvars(); ++i)
      if (i != tvar && lm.e[i] != 0) pure = false;
    if (!pure) continue;
    // Reduced basis: tail monomials rank below t, hence are t-free.
    Polynomial h = Polynomial::variable(g.nvars(), tvar) - g;
    if (h.uses_var(tvar)) continue;
    return h;
  }
  return std::nullopt;
}

RegulousVerdict run_pipeline(const VarietyPresentation& X, Ideal J,
                             const std::string& tname, GbStats* stats) {
  RegulousVerdict out;
  out.adjoined_name = tname;
  out.graph_ideal = J;
  ExtensionPresentation E;
  E.base = X;
  E.adjoined = {tname};
  E.J = std::move(J);
  try {
    if (!is_finite(E, stats)) {
      out.verdict = Verdict::NotRegulous;
      out.failure = FailureKind::NoMonicRelation;
      out.message = "no monic relation: the function is not integral over "
                    "the coordinate ring";
      return out;
    }
    out.monic_relation = integral_equation(E, 0, stats);
    if (!fiber_injective(E, &out.injectivity, stats)) {
      out.verdict = Verdict::NotRegulous;
      out.failure = FailureKind::InjectivityFailure;
      out.message = "graph carries more than one point over some fiber";
      return out;
    }
    Ideal elim = eliminate(E.J, E.adjoined_indices(), stats);
    Ideal baseI = embed_front(X.I, E.total_vars());
    if (!equal_radical(elim, baseI, stats)) {
      out.verdict = Verdict::NotRegulous;
      out.failure = FailureKind::EliminationMismatch;
      out.message = "graph does not project onto the whole variety";
      return out;
    }
    out.verdict = Verdict::Regulous;
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::Undecided;
    out.failure = FailureKind::Budget;
    out.message = e.what();
  }
  return out;
}

}  // namespace

Ideal graph_closure(const VarietyPresentation& X, const Fraction& f,
                    GbStats* stats) {
  return graph_ideal_of_fraction(X, f.p, f.q, stats);
}

RegulousVerdict is_regulous(const VarietyPresentation& X, const Fraction& f,
                            GbStats* stats) {
  std::string tname = fresh_var_name(X.vars);
  RegulousVerdict out;
  out.adjoined_name = tname;
  try {
    Ideal J = graph_closure(X, f, stats);
    return run_pipeline(X, std::move(J), tname, stats);
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::Undecided;
    out.failure = FailureKind::Budget;
    out.message = e.what();
    return out;
  }
}

RegulousVerdict is_regulous(const VarietyPresentation& X,
                            const StratifiedFraction& f, GbStats* stats) {
  if (f.strata.empty())
    throw InputError("stratified fraction needs at least one stratum");
  return is_regulous(X, Fraction{f.strata[0].p, f.strata[0].q}, stats);
}

void validate_stratified(const VarietyPresentation& X,
                         const StratifiedFraction& f, GbStats* stats) {
  if (f.strata.empty())
    throw InputError("stratified fraction needs at least one stratum");
  int n = X.nvars();
  int tot = n + 1;
  // Each later stratum must describe the closure of the densest one on the
  // locus where it is in force: q_j t - p_j vanishes on the graph closure
  // cut by the earlier denominators. The closure over D(q_1) is taken
  // directly; a denominator vanishing on some component is exactly the
  // situation stratified representations exist for.
  Polynomial t = Polynomial::variable(tot, n);
  Ideal J;
  {
    std::vector<Polynomial> gens = embed_list_front(X.I.gens(), tot);
    gens.push_back(embed_front(f.strata[0].q, tot) * t -
                   embed_front(f.strata[0].p, tot));
    J = saturate(Ideal(tot, std::move(gens)),
                 embed_front(f.strata[0].q, tot), stats);
  }
  for (size_t j = 1; j < f.strata.size(); ++j) {
    std::vector<Polynomial> gens = J.gens();
    for (size_t k = 0; k < j; ++k)
      gens.push_back(embed_front(f.strata[k].q, tot));
    Ideal locus(tot, std::move(gens));
    Polynomial rel = embed_front(f.strata[j].q, tot) * t -
                     embed_front(f.strata[j].p, tot);
    if (!radical_contains(locus, rel, stats))
      throw InputError("stratum " + std::to_string(j) +
                       " disagrees with the closure of the primary fraction "
                       "on its locus");
  }
}

RegulousVerdict is_regulous_with_system(const VarietyPresentation& X,
                                        const std::optional<Fraction>& f,
                                        const std::vector<Polynomial>& system,
                                        const std::string& tname,
                                        GbStats* stats) {
  int total = X.nvars() + 1;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : X.I.gens()) gens.push_back(embed_front(g, total));
  for (const Polynomial& g : system) {
    if (g.nvars() != total)
      throw InputError("graph system polynomial has the wrong ring size");
    gens.push_back(g);
  }
  Ideal J(total, std::move(gens));
  if (f) {
    Polynomial rel = embed_front(f->q, total) *
                         Polynomial::variable(total, total - 1) -
                     embed_front(f->p, total);
    bool compatible;
    try {
      compatible = radical_contains(J, rel, stats);
    } catch (const BudgetExceeded& e) {
      RegulousVerdict out;
      out.adjoined_name = tname;
      out.verdict = Verdict::Undecided;
      out.failure = FailureKind::Budget;
      out.message = e.what();
      return out;
    }
    if (!compatible) {
      RegulousVerdict out;
      out.adjoined_name = tname;
      out.graph_ideal = J;
      out.verdict = Verdict::NotRegulous;
      out.failure = FailureKind::FractionMismatch;
      out.message = "supplied system does not agree with the fraction on its "
                    "domain";
      return out;
    }
  }
  return run_pipeline(X, std::move(J), tname, stats);
}

RegulousVerdict check_power_pair(const VarietyPresentation& X,
                                 const Fraction& f, int n, int m,
                                 GbStats* stats) {
  if (n <= 0 || m <= 0) throw PreconditionFailed("powers must be positive");
  if (std::gcd(n, m) != 1)
    throw PreconditionFailed("powers " + std::to_string(n) + ", " +
                             std::to_string(m) + " are not coprime");
  int nv = X.nvars();

  // f^e in C[X]: p^e lies in <q^e> + I; extract the representative.
  auto power_in_ring = [&](int e) -> std::optional<Polynomial> {
    std::vector<Polynomial> gens = {f.q.pow(e)};
    for (const Polynomial& g : X.I.gens()) gens.push_back(g);
    TrackedBasis tb = groebner_tracked(gens, Order::grevlex(nv), 0, stats);
    TrackedNF nf = tracked_normal_form(f.p.pow(e), tb, Order::grevlex(nv));
    if (!nf.remainder.is_zero()) return std::nullopt;
    return nf.cofactors[0];
  };

  std::optional<Polynomial> cn = power_in_ring(n);
  if (!cn)
    throw PreconditionFailed("f^" + std::to_string(n) +
                             " does not lie in the coordinate ring");
  std::optional<Polynomial> cm = power_in_ring(m);
  if (!cm)
    throw PreconditionFailed("f^" + std::to_string(m) +
                             " does not lie in the coordinate ring");

  std::string tname = fresh_var_name(X.vars);
  int total = nv + 1;
  Polynomial t = Polynomial::variable(total, nv);

  if (n == 1 || m == 1) {
    // The function is already polynomial.
    const Polynomial& rep = (n == 1) ? *cn : *cm;
    std::vector<Polynomial> sys = {t - embed_front(rep, total)};
    return is_regulous_with_system(X, std::nullopt, sys, tname, stats);
  }

  // Bezout pair u in (0, m), v = (1 - u n)/m < 0.
  int u = -1;
  for (int cand = 1; cand < m; ++cand)
    if ((cand * n) % m == 1 % m) {
      u = cand;
      break;
    }
  if (u < 0) throw PreconditionFailed("no Bezout exponent found");
  int v = (1 - u * n) / m;

  // Graph of the zero-extension: (f^m)^(-v) t - (f^n)^u and t^m - f^m.
  Polynomial g1 =
      embed_front(cm->pow(-v), total) * t - embed_front(cn->pow(u), total);
  Polynomial g2 = t.pow(m) - embed_front(*cm, total);
  std::vector<Polynomial> gens = {g1, g2};
  for (const Polynomial& g : X.I.gens()) gens.push_back(embed_front(g, total));
  try {
    Ideal J = saturate(Ideal(total, gens), embed_front(*cm, total), stats);
    return run_pipeline(X, std::move(J), tname, stats);
  } catch (const BudgetExceeded& e) {
    RegulousVerdict out;
    out.adjoined_name = tname;
    out.verdict = Verdict::Undecided;
    out.failure = FailureKind::Budget;
    out.message = e.what();
    return out;
  }
}

SwanResult swan_pair_solve(const VarietyPresentation& X, const Polynomial& p,
                           const Polynomial& q, GbStats* stats) {
  int nv = X.nvars();
  SwanResult res;
  if (!contains(X.I, p * p - q.pow(3), stats)) {
    res.kind = SwanResult::NotAPair;
    return res;
  }
  if (contains(X.I, q, stats)) {
    // q = 0 on X forces p = 0 on X (p^2 = q^3 and I radical): f is 0.
    res.kind = SwanResult::InRing;
    res.h = Polynomial::zero(nv);
    return res;
  }

  std::string tname = fresh_var_name(X.vars);
  int total = nv + 1;
  Polynomial t = Polynomial::variable(total, nv);
  Polynomial relq = embed_front(q, total) * t - embed_front(p, total);
  Polynomial rel2 = t * t - embed_front(q, total);

  auto closure_over = [&](const Ideal& base_ideal) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : base_ideal.gens())
      gens.push_back(embed_front(g, total));
    gens.push_back(relq);
    gens.push_back(rel2);
    return saturate(Ideal(total, std::move(gens)), embed_front(q, total),
                    stats);
  };

  Ideal G;
  if (!X.has_components()) {
    if (!is_nzd(X.I, q, stats))
      throw ReducibleAmbiguity(
          "Swan pair with a zero-divisor q needs the component decomposition");
    G = closure_over(X.I);
  } else {
    std::optional<Ideal> acc;
    for (const Ideal& comp : X.components) {
      Ideal piece;
      if (contains(comp, q, stats)) {
        std::vector<Polynomial> gens;
        for (const Polynomial& g : comp.gens())
          gens.push_back(embed_front(g, total));
        gens.push_back(t);
        piece = Ideal(total, std::move(gens));
      } else {
        piece = closure_over(comp);
      }
      acc = acc ? intersect(*acc, piece, stats) : piece;
    }
    G = *acc;
  }

  Order ord = Order::block(total, {nv});
  const Basis& gb = G.groebner(ord, 0, stats);
  res.graph_ideal = G;
  if (auto h = find_ring_representative(gb, ord, nv)) {
    res.kind = SwanResult::InRing;
    res.h = h->restrict_front(nv);
    return res;
  }
  res.kind = SwanResult::ProperlyRegulous;
  return res;
}

namespace {

// Membership of the fraction power f^k = p^k / q^k in the base ring, with
// its polynomial representative.
std::optional<Polynomial> fraction_power_in_ring(const VarietyPresentation& X,
                                                 const Polynomial& p,
                                                 const Polynomial& q, int k,
                                                 GbStats* stats) {
  int nv = X.nvars();
  std::vector<Polynomial> gens = {q.pow(k)};
  for (const Polynomial& g : X.I.gens()) gens.push_back(g);
  TrackedBasis tb = groebner_tracked(gens, Order::grevlex(nv), 0, stats);
  TrackedNF nf = tracked_normal_form(p.pow(k), tb, Order::grevlex(nv));
  if (!nf.remainder.is_zero()) return std::nullopt;
  return nf.cofactors[0];
}

}  // namespace

ElementaryWitness elementary_witness(const VarietyPresentation& X,
                                     const StratifiedFraction& f,
                                     GbStats* stats) {
  if (f.strata.empty())
    throw InputError("stratified fraction needs at least one stratum");
  if (f.strata.size() > 1) validate_stratified(X, f, stats);
  int nv = X.nvars();

  std::vector<Stratum> strata = f.strata;
  // A trailing stratum with a constant denominator is a final polynomial
  // value: subtract it from the whole representation so the final value is
  // zero, then drop it.
  while (strata.size() > 1 && strata.back().q.is_constant()) {
    Stratum last = strata.back();
    if (last.q.is_zero())
      throw InputError("stratum with zero denominator");
    strata.pop_back();
    Polynomial value = last.p.scaled(last.q.terms()[0].c.inverse());
    if (!contains(X.I, value, stats))
      for (Stratum& s : strata) s.p = s.p - value * s.q;
  }
  for (size_t i = 0; i + 1 < strata.size(); ++i)
    if (strata[i].q.is_constant())
      throw InputError("constant denominator before the final stratum");

  // Normalize so that q_i * f lies in C[X] for every stratum.
  for (size_t guard = 0; guard <= f.strata.size() + 1; ++guard) {
    const Polynomial& p0 = strata[0].p;
    const Polynomial& q0 = strata[0].q;
    size_t bad = strata.size();
    for (size_t i = 1; i < strata.size(); ++i) {
      if (!fraction_power_in_ring(
               X, strata[i].q * p0, q0, 1, stats)) {  // q_i * f in C[X]?
        bad = i;
        break;
      }
    }
    if (bad == strata.size()) break;
    if (guard == f.strata.size() + 1)
      throw PreconditionFailed(
          "strata normalization did not terminate within the expected bound");
    // Replace f by q_bad * f - p_bad.
    Polynomial pb = strata[bad].p, qb = strata[bad].q;
    for (Stratum& s : strata) s.p = qb * s.p - pb * s.q;
  }
  Fraction nf{strata[0].p, strata[0].q};

  RegulousVerdict rv = is_regulous(X, nf, stats);
  if (!rv.regulous())
    throw PreconditionFailed(
        "elementary witness requires a regulous primary fraction");

  // Outside the ring?
  {
    Order ord = Order::block(nv + 1, {nv});
    const Basis& gb = rv.graph_ideal.groebner(ord, 0, stats);
    if (find_ring_representative(gb, ord, nv))
      throw PreconditionFailed("the function already lies in C[X]");
  }

  int d = static_cast<int>(rv.monic_relation->degree_in(nv));
  Ideal cond = conductor(X, nf.p, nf.q, d, stats);

  // Minimal k with f^k in Cond(f); then m = k - 1 >= 1.
  const int kCap = 64;
  int k0 = -1;
  for (int k = 1; k <= kCap; ++k) {
    auto rep = fraction_power_in_ring(X, nf.p, nf.q, k, stats);
    if (rep && contains(cond, *rep, stats)) {
      k0 = k;
      break;
    }
  }
  if (k0 < 0)
    throw NotFoundWithinBound(
        "no power of f landed in the conductor within the search bound");
  if (k0 == 1) throw PreconditionFailed("the function lies in the conductor");
  int m = k0 - 1;

  // Search h = sum a_j f^j over the module basis with bounded-degree
  // polynomial coefficients; f^m h outside C[X]. h = 1 is tried first.
  long coeff_bound = 0;
  for (const Polynomial& g : cond.gens())
    coeff_bound = std::max(coeff_bound, g.total_degree());
  coeff_bound += 2;

  auto fm_h_in_ring = [&](const std::vector<Polynomial>& a) {
    // f^m * sum_j a_j f^j = N / q^(m + d - 1) with
    // N = sum_j a_j p^(m+j) q^(d-1-j).
    Polynomial N(nv);
    for (size_t j = 0; j < a.size(); ++j)
      N = N + a[j] * nf.p.pow(m + static_cast<int>(j)) *
                  nf.q.pow(d - 1 - static_cast<int>(j));
    return fraction_power_in_ring(X, N, nf.q.pow(m + d - 1), 1, stats)
               .has_value();
  };

  std::optional<std::vector<Polynomial>> found;
  {
    std::vector<Polynomial> one(d, Polynomial(nv));
    one[0] = Polynomial::one(nv);
    if (!fm_h_in_ring(one)) found = one;
  }
  if (!found) {
    // Single monomial times a module basis power.
    for (int j = 0; j < d && !found; ++j) {
      for (long deg = 0; deg <= coeff_bound && !found; ++deg) {
        std::vector<Monomial> monos;
        {
          // simple enumeration of monomials of exact degree deg
          std::vector<Monomial> stack = {Monomial(nv)};
          for (int step = 0; step < deg; ++step) {
            std::vector<Monomial> next;
            for (const Monomial& m0 : stack)
              for (int v0 = 0; v0 < nv; ++v0) {
                Monomial m1 = m0;
                m1.e[v0] += 1;
                next.push_back(m1);
              }
            stack = std::move(next);
          }
          monos = stack;
        }
        for (const Monomial& m0 : monos) {
          std::vector<Polynomial> cand(d, Polynomial(nv));
          cand[j] = Polynomial::monomial(nv, m0, Rational(1));
          if (!fm_h_in_ring(cand)) {
            found = cand;
            break;
          }
        }
      }
    }
  }
  if (!found)
    throw NotFoundWithinBound(
        "no expansion h with f^m h outside C[X] within the coefficient "
        "degree bound");

  ElementaryWitness out;
  out.m = m;
  out.normalized = nf;
  // h as the element sum a_j f^j; store the a_0 part when h is that simple,
  // otherwise the full numerator over q^(d-1).
  Polynomial hnum(nv);
  for (int j = 0; j < d; ++j)
    hnum = hnum + (*found)[j] * nf.p.pow(j) * nf.q.pow(d - 1 - j);
  out.h = hnum;  // h = hnum / q^(d-1)

  // g = f^m h = gnum / q^(m + d - 1).
  Polynomial gnum(nv);
  for (int j = 0; j < d; ++j)
    gnum = gnum + (*found)[j] * nf.p.pow(m + j) * nf.q.pow(d - 1 - j);
  out.g = Fraction{gnum, nf.q.pow(m + d - 1)};

  auto g2 = fraction_power_in_ring(X, out.g.p, out.g.q, 2, stats);
  auto g3 = fraction_power_in_ring(X, out.g.p, out.g.q, 3, stats);
  if (!g2 || !g3)
    throw PreconditionFailed(
        "internal: witness squares/cubes failed the ring membership check");
  out.g2 = *g2;
  out.g3 = *g3;
  return out;
}

RestrictionResult restrict_regulous(const VarietyPresentation& X,
                                    const VarietyPresentation& V,
                                    const Fraction& f, GbStats* stats) {
  RegulousVerdict ambient = is_regulous(X, f, stats);
  if (!ambient.regulous())
    throw NotRegulousOnAmbient(
        "restriction requires a regulous function on the ambient variety");

  RestrictionResult out;
  if (is_nzd(V.I, f.q, stats)) {
    out.restricted = f;
    out.verdict = is_regulous(V, f, stats);
    return out;
  }

  int nv = X.nvars();
  int total = nv + 1;
  std::vector<Polynomial> gens = ambient.graph_ideal.gens();
  for (const Polynomial& g : V.I.gens()) gens.push_back(embed_front(g, total));
  Ideal JV(total, std::move(gens));
  Order ord = Order::block(total, {nv});
  const Basis& gb = JV.groebner(ord, 0, stats);

  for (const Polynomial& g : gb) {
    Polynomial c(total), r(total);
    if (!split_linear_in_t(g, nv, &c, &r)) continue;
    Polynomial cb = c.restrict_front(nv);
    Polynomial rb = r.restrict_front(nv);
    if (is_nzd(V.I, cb, stats)) {
      out.restricted = Fraction{rb, cb};
      out.verdict = is_regulous(V, *out.restricted, stats);
      return out;
    }
  }

  // Collapsed locus: the restriction is the constant value 0 whenever the
  // adjoined variable vanishes on the restricted graph.
  if (radical_contains(JV, Polynomial::variable(total, nv), stats)) {
    out.restricted = Fraction{Polynomial::zero(nv), Polynomial::one(nv)};
    std::vector<Polynomial> sys = {Polynomial::variable(total, nv)};
    out.verdict =
        is_regulous_with_system(V, std::nullopt, sys, ambient.adjoined_name,
                                stats);
    return out;
  }

  out.verdict.verdict = Verdict::Undecided;
  out.verdict.message =
      "no fraction representation with a non-zero-divisor denominator was "
      "found in the restricted graph basis";
  out.attached_gb = gb;
  return out;
}

ExtendResult extend_from_principal_open(const VarietyPresentation& X,
                                        const Fraction& f,
                                        const OpenSystem& gsys,
                                        GbStats* stats) {
  int nv = X.nvars();
  if (f.q.is_zero() || !f.q.is_constant())
    throw PreconditionFailed(
        "extension from a principal open set expects a polynomial f; adjoin "
        "the fraction first");
  Polynomial fp = f.q == Polynomial::one(nv)
                      ? f.p
                      : f.p.scaled(f.q.terms()[0].c.inverse());
  if (contains(X.I, fp, stats))
    throw PreconditionFailed("f vanishes identically on X");

  int d = gsys.lead_degree;
  if (d < 1) throw InputError("system lead degree must be positive");
  for (const OpenSystemCoef& c : gsys.P_low.coefs)
    if (c.tdeg >= d) throw InputError("monic equation has a stray high term");

  int total = nv + 1;
  Polynomial t = Polynomial::variable(total, nv);

  // Uniqueness of the solution over D(f): clear denominators per equation,
  // double the adjoined variable, cut away everything over Z(f) and check
  // that both copies agree.
  {
    std::vector<Polynomial> cleared;
    auto clear_eq = [&](const OpenSystemEq& eq, bool monic_lead) {
      int kmax = 0;
      for (const OpenSystemCoef& c : eq.coefs) kmax = std::max(kmax, c.fpow);
      Polynomial acc(total);
      if (monic_lead)
        acc = acc + embed_front(fp.pow(kmax), total) * t.pow(d);
      for (const OpenSystemCoef& c : eq.coefs)
        acc = acc + embed_front(c.a * fp.pow(kmax - c.fpow), total) *
                        t.pow(c.tdeg);
      return acc;
    };
    std::vector<Polynomial> sys_xt;
    sys_xt.push_back(clear_eq(gsys.P_low, true));
    for (const OpenSystemEq& eq : gsys.F) sys_xt.push_back(clear_eq(eq, false));

    int tot2 = nv + 2;
    std::vector<int> second(total);
    for (int i = 0; i < nv; ++i) second[i] = i;
    second[nv] = nv + 1;
    std::vector<Polynomial> doubled;
    for (const Polynomial& g : sys_xt) {
      doubled.push_back(embed_front(g, tot2));
      doubled.push_back(g.embed(tot2, second));
    }
    for (const Polynomial& g : X.I.gens())
      doubled.push_back(embed_front(g, tot2));
    Ideal D = saturate(Ideal(tot2, std::move(doubled)),
                       embed_front(fp, tot2), stats);
    Polynomial diff = Polynomial::variable(tot2, nv) -
                      Polynomial::variable(tot2, nv + 1);
    if (!radical_contains(D, diff, stats))
      throw PreconditionFailed(
          "the supplied system does not have a unique solution over D(f)");
  }

  // s = (prod of P denominators)^2 * (prod of F denominators)^2 = f^M.
  long M = 0;
  for (const OpenSystemCoef& c : gsys.P_low.coefs) M += 2L * c.fpow;
  for (const OpenSystemEq& eq : gsys.F)
    for (const OpenSystemCoef& c : eq.coefs) M += 2L * c.fpow;

  // Scaled system: every coefficient picks up s / s_coef times the power of
  // s matching the substituted t = s*g degree drop.
  std::vector<Polynomial> scaled;
  {
    Polynomial eq(total);
    eq = eq + t.pow(d);
    for (const OpenSystemCoef& c : gsys.P_low.coefs) {
      long e = (M - c.fpow) + M * (d - 1 - c.tdeg);
      eq = eq + embed_front(c.a * fp.pow(e), total) * t.pow(c.tdeg);
    }
    scaled.push_back(eq);
  }
  for (const OpenSystemEq& feq : gsys.F) {
    int di = 0;
    for (const OpenSystemCoef& c : feq.coefs) di = std::max(di, c.tdeg);
    Polynomial eq(total);
    for (const OpenSystemCoef& c : feq.coefs) {
      long e = (M - c.fpow) + M * (di - c.tdeg);
      eq = eq + embed_front(c.a * fp.pow(e), total) * t.pow(c.tdeg);
    }
    scaled.push_back(eq);
  }

  ExtendResult out;
  out.N = M;
  out.scaled_system = scaled;
  out.verdict = is_regulous_with_system(X, std::nullopt, scaled,
                                        fresh_var_name(X.vars), stats);
  return out;
}

}  // namespace snk
