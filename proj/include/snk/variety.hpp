#ifndef SNK_VARIETY_HPP
#define SNK_VARIETY_HPP

#include <optional>
#include <string>
#include <vector>

#include "snk/ideal.hpp"

namespace snk {

/// Ambient variables plus the defining ideal of an affine variety X.
/// The defining ideal is assumed radical (caller contract). An optional
/// component list carries ideals whose intersection is radical-equal to I,
/// needed when componentwise conventions apply.
struct VarietyPresentation {
  std::vector<std::string> vars;
  Ideal I;
  std::vector<Ideal> components;

  int nvars() const { return static_cast<int>(vars.size()); }
  bool has_components() const { return !components.empty(); }

  /// 1 not in I; the component intersection matches I up to radical.
  void validate(GbStats* stats = nullptr) const;
};

/// Presentation of C[X] -> C[X][t1..tm] = C[x,t]/J with J containing I.
struct ExtensionPresentation {
  VarietyPresentation base;
  std::vector<std::string> adjoined;
  Ideal J;  // in base.nvars() + adjoined.size() variables

  int total_vars() const {
    return base.nvars() + static_cast<int>(adjoined.size());
  }
  std::vector<int> adjoined_indices() const {
    std::vector<int> idx;
    for (size_t i = 0; i < adjoined.size(); ++i)
      idx.push_back(base.nvars() + static_cast<int>(i));
    return idx;
  }
  std::vector<std::string> all_vars() const {
    std::vector<std::string> v = base.vars;
    v.insert(v.end(), adjoined.begin(), adjoined.end());
    return v;
  }
  /// The block order with adjoined variables ranked above the base.
  Order block_order() const {
    return Order::block(total_vars(), adjoined_indices());
  }

  /// Dominance invariant: eliminate(J, adjoined) radical-equal to I.
  void validate(GbStats* stats = nullptr) const;
};

/// Standard basis criterion for module finiteness: with adjoined variables
/// ranked above the base, the reduced basis of J must contain, for every
/// adjoined t_i, an element whose leading monomial is a pure power of t_i.
bool is_finite(const ExtensionPresentation& E, GbStats* stats = nullptr);

/// The monic relation witness for adjoined variable index i (0-based within
/// the adjoined list): minimal leading degree among pure-power elements of
/// the reduced block-order basis. Throws NotFinite when none exists.
Polynomial integral_equation(const ExtensionPresentation& E, int i,
                             GbStats* stats = nullptr);

struct InjectivityReport {
  std::vector<char> per_var;  // 1 iff (t_i - t_i') certified in the radical
  bool all() const {
    for (char c : per_var)
      if (!c) return false;
    return true;
  }
  int first_failure() const {
    for (size_t i = 0; i < per_var.size(); ++i)
      if (!per_var[i]) return static_cast<int>(i);
    return -1;
  }
};

/// Injectivity on closed points over the algebraic closure: for every i,
/// (t_i - t_i') lies in sqrt(J + J') where J' is J with adjoined variables
/// primed. Certified by radical membership, never by sampling.
bool fiber_injective(const ExtensionPresentation& E,
                     InjectivityReport* report = nullptr,
                     GbStats* stats = nullptr);

/// Subintegrality: finite, injective on closed points, and dominant onto X
/// (elimination matches I up to radical); surjectivity then follows from
/// lying-over.
bool is_subintegral(const ExtensionPresentation& E, GbStats* stats = nullptr);

/// Conductor of f = p/q as an ideal of the base ring:
/// intersection over 0 < i < d of ((<q^i> + I) : p^i).
/// d must be at least the degree of the monic relation of f; throws
/// NotIntegral when no monic relation of degree d exists.
Ideal conductor(const VarietyPresentation& X, const Polynomial& p,
                const Polynomial& q, int d, GbStats* stats = nullptr);

/// Zariski closure of the graph of p/q over D(q) adjoined as one fresh
/// trailing variable: saturate(I + <q*t - p>, q). On a reducible X whose
/// component list is supplied, components where q vanishes identically
/// contribute the zero extension (component x {t = 0}); a zero-divisor
/// denominator without a component list raises ReducibleAmbiguity.
Ideal graph_ideal_of_fraction(const VarietyPresentation& X, const Polynomial& p,
                              const Polynomial& q, GbStats* stats = nullptr);

/// The extension presentation carrying that graph.
ExtensionPresentation graph_extension(const VarietyPresentation& X,
                                      const Polynomial& p, const Polynomial& q,
                                      const std::string& tname = "t",
                                      GbStats* stats = nullptr);

}  // namespace snk

#endif
