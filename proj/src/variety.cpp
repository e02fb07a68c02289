#include "snk/variety.hpp"

#include "snk/errors.hpp"

namespace snk {

void VarietyPresentation::validate(GbStats* stats) const {
  if (I.nvars() != nvars())
    throw InputError("variety: ideal ring does not match variable list");
  if (is_unit_ideal(I, stats))
    throw InputError("variety: defining ideal is the unit ideal");
  if (has_components()) {
    Ideal meet = components[0];
    for (size_t i = 1; i < components.size(); ++i)
      meet = intersect(meet, components[i], stats);
    if (!equal_radical(meet, I, stats))
      throw InputError(
          "variety: component intersection is not radical-equal to I");
  }
}

void ExtensionPresentation::validate(GbStats* stats) const {
  if (J.nvars() != total_vars())
    throw InputError("extension: relation ideal ring mismatch");
  Ideal elim = eliminate(J, adjoined_indices(), stats);
  Ideal baseI = embed_front(base.I, total_vars());
  if (!equal_radical(elim, baseI, stats))
    throw InputError("extension: J does not contract to I over the base");
}

namespace {

// Pure power of variable v: positive exponent there, zero elsewhere.
bool is_pure_power(const Monomial& m, int v) {
  if (m.e[v] <= 0) return false;
  for (int i = 0; i < m.nvars(); ++i)
    if (i != v && m.e[i] != 0) return false;
  return true;
}

}  // namespace

bool is_finite(const ExtensionPresentation& E, GbStats* stats) {
  Order ord = E.block_order();
  const Basis& gb = E.J.groebner(ord, 0, stats);
  for (int v : E.adjoined_indices()) {
    bool found = false;
    for (const Polynomial& g : gb) {
      if (is_pure_power(g.leading_term(ord).m, v)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Polynomial integral_equation(const ExtensionPresentation& E, int i,
                             GbStats* stats) {
  if (i < 0 || i >= static_cast<int>(E.adjoined.size()))
    throw InputError("integral_equation: adjoined index out of range");
  int v = E.base.nvars() + i;
  Order ord = E.block_order();
  const Basis& gb = E.J.groebner(ord, 0, stats);
  const Polynomial* best = nullptr;
  long best_deg = 0;
  for (const Polynomial& g : gb) {
    const Monomial& lm = g.leading_term(ord).m;
    if (is_pure_power(lm, v)) {
      if (!best || lm.e[v] < best_deg) {
        best = &g;
        best_deg = lm.e[v];
      }
    }
  }
  if (!best)
    throw NotFinite("no monic relation for adjoined variable " +
                    E.adjoined[i]);
  return *best;
}

bool fiber_injective(const ExtensionPresentation& E, InjectivityReport* report,
                     GbStats* stats) {
  int n = E.base.nvars();
  int m = static_cast<int>(E.adjoined.size());
  int total = n + 2 * m;
  // Ring: x1..xn, t1..tm, t1'..tm'.
  std::vector<int> primed_map(n + m);
  for (int i = 0; i < n; ++i) primed_map[i] = i;
  for (int i = 0; i < m; ++i) primed_map[n + i] = n + m + i;

  std::vector<Polynomial> gens;
  for (const Polynomial& g : E.J.gens()) {
    gens.push_back(embed_front(g, total));
    gens.push_back(g.embed(total, primed_map));
  }
  Ideal doubled(total, std::move(gens));

  if (report) report->per_var.assign(m, 0);
  bool all = true;
  for (int i = 0; i < m; ++i) {
    Polynomial diff = Polynomial::variable(total, n + i) -
                      Polynomial::variable(total, n + m + i);
    bool ok = radical_contains(doubled, diff, stats);
    if (report) report->per_var[i] = ok ? 1 : 0;
    if (!ok) all = false;
  }
  return all;
}

bool is_subintegral(const ExtensionPresentation& E, GbStats* stats) {
  if (E.adjoined.empty()) return true;  // identity extension
  if (!is_finite(E, stats)) return false;
  if (!fiber_injective(E, nullptr, stats)) return false;
  Ideal elim = eliminate(E.J, E.adjoined_indices(), stats);
  Ideal baseI = embed_front(E.base.I, E.total_vars());
  return equal_radical(elim, baseI, stats);
}

Ideal graph_ideal_of_fraction(const VarietyPresentation& X, const Polynomial& p,
                              const Polynomial& q, GbStats* stats) {
  int n = X.nvars();
  if (q.is_zero() || contains(X.I, q, stats))
    throw InputError("fraction denominator vanishes identically on X");
  int total = n + 1;
  Polynomial t = Polynomial::variable(total, n);
  Polynomial rel = embed_front(q, total) * t - embed_front(p, total);

  auto closure_over = [&](const Ideal& base_ideal) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : base_ideal.gens())
      gens.push_back(embed_front(g, total));
    gens.push_back(rel);
    return saturate(Ideal(total, std::move(gens)), embed_front(q, total),
                    stats);
  };

  if (!X.has_components()) {
    if (!is_nzd(X.I, q, stats))
      throw ReducibleAmbiguity(
          "denominator is a zero divisor and no component decomposition was "
          "supplied");
    return closure_over(X.I);
  }

  // Componentwise: zero extension on components where q vanishes
  // identically, graph closure elsewhere.
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
  return *acc;
}

ExtensionPresentation graph_extension(const VarietyPresentation& X,
                                      const Polynomial& p, const Polynomial& q,
                                      const std::string& tname,
                                      GbStats* stats) {
  ExtensionPresentation E;
  E.base = X;
  E.adjoined = {tname};
  E.J = graph_ideal_of_fraction(X, p, q, stats);
  return E;
}

Ideal conductor(const VarietyPresentation& X, const Polynomial& p,
                const Polynomial& q, int d, GbStats* stats) {
  int n = X.nvars();
  if (q.is_zero()) throw InputError("conductor: zero denominator");
  if (!is_nzd(X.I, q, stats))
    throw PreconditionFailed("conductor: denominator is a zero divisor on X");

  ExtensionPresentation E = graph_extension(X, p, q, "t", stats);
  if (!is_finite(E, stats))
    throw NotIntegral("conductor: p/q is not integral over the base ring");
  Polynomial rel = integral_equation(E, 0, stats);
  long d_true = rel.degree_in(n);
  if (d < d_true)
    throw NotIntegral("conductor: no monic relation of degree " +
                      std::to_string(d) + "; minimal degree is " +
                      std::to_string(d_true));

  std::optional<Ideal> acc;
  for (int i = 1; i < d; ++i) {
    std::vector<Polynomial> gens = X.I.gens();
    gens.push_back(q.pow(i));
    Ideal qi(n, std::move(gens));
    Ideal term = quotient_by(qi, p.pow(i), stats);
    acc = acc ? intersect(*acc, term, stats) : term;
  }
  if (!acc) {
    // d = 1: the fraction already lies in the base ring.
    return Ideal(n, {Polynomial::one(n)});
  }
  return *acc;
}

}  // namespace snk
