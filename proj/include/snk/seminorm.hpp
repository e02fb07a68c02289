#ifndef SNK_SEMINORM_HPP
#define SNK_SEMINORM_HPP

#include "snk/regulous.hpp"

namespace snk {

struct TowerStep {
  Fraction fraction;   // over the presentation current at adjunction time
  std::string var_name;
  std::vector<Polynomial> relations;  // graph relations in the grown ring
};

/// Chain of verified subintegral adjunctions over a base variety. Towers are
/// immutable snapshots; adjoin returns a new tower.
struct SeminormTower {
  VarietyPresentation base;
  std::vector<TowerStep> steps;
  ExtensionPresentation current;

  int height() const { return static_cast<int>(steps.size()); }
  /// The grown presentation viewed as a variety in its own right.
  VarietyPresentation current_variety() const {
    VarietyPresentation v;
    v.vars = current.all_vars();
    v.I = current.J;
    return v;
  }
};

SeminormTower make_tower(const VarietyPresentation& X);

/// Polynomial representative of f in the coordinate ring, when f already
/// lies there (the graph basis contains t - h).
std::optional<Polynomial> ring_representative(const VarietyPresentation& X,
                                              const Fraction& f,
                                              GbStats* stats = nullptr);

/// Adjoins a verified regulous element: new adjoined variable, graph
/// relations appended, subintegrality of base -> grown presentation
/// re-verified. Throws AlreadyInRing / NotRegulousError.
SeminormTower adjoin(const SeminormTower& T, const Fraction& f,
                     GbStats* stats = nullptr);

enum class CandidateStatus { Adjoined, AlreadyInRing, NotRegulous, Error };

struct CandidateReport {
  Fraction candidate;
  CandidateStatus status;
  std::string detail;
  std::optional<Polynomial> in_ring_rep;
};

struct SeminormalizeResult {
  SeminormTower tower;
  std::vector<CandidateReport> report;
};

/// Greedy adjunction of each candidate over the grown presentation;
/// per-candidate failures land in the report.
SeminormalizeResult seminormalize_with_candidates(
    const VarietyPresentation& X, const std::vector<Fraction>& candidates,
    GbStats* stats = nullptr);

struct SwanScanHit {
  Polynomial p, q;
  SwanResult solved;
};

/// Bounded enumeration of Swan pairs (p^2 = q^3 mod I) over polynomials with
/// monomials of degree <= degree_bound and coefficients drawn from the given
/// finite set; returns the pairs whose cube root is properly regulous.
std::vector<SwanScanHit> swan_scan(const VarietyPresentation& X,
                                   int degree_bound,
                                   const std::vector<Rational>& coefficient_set,
                                   GbStats* stats = nullptr);

struct NullstellensatzWitness {
  int n = 0;
  std::vector<Polynomial> cofactors;  // aligned with gens
};

/// Smallest n <= bound with f^n in <gens> + J, with explicit cofactors from
/// tracked division: f^n = sum h_i g_i modulo J. Throws NotInRadical when
/// the underlying radical membership fails, NotFoundWithinBound when only
/// the explicit witness is out of reach.
NullstellensatzWitness nullstellensatz_witness(
    const SeminormTower& T, const Polynomial& f,
    const std::vector<Polynomial>& gens, int bound = 12,
    GbStats* stats = nullptr);

}  // namespace snk

#endif
