#ifndef SNK_REGULOUS_HPP
#define SNK_REGULOUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "snk/variety.hpp"

namespace snk {

/// Element p/q of the total ring of fractions of C[X]; q must be a
/// non-zero-divisor modulo I (or vanish only on listed components, in which
/// case the zero-extension convention applies).
struct Fraction {
  Polynomial p, q;
};

struct Stratum {
  Polynomial p, q;
};

/// Ordered stratified representation p1/q1 on D(q1), p2/q2 on
/// Z(q1) cap D(q2), ..., with final value 0 on the common zero set.
struct StratifiedFraction {
  std::vector<Stratum> strata;
};

/// Overlap compatibility of a stratified representation:
/// p_i q_j - p_j q_i lies in sqrt(I + <q_1, ..., q_(min(i,j)-1)>).
/// Throws InputError on violation.
void validate_stratified(const VarietyPresentation& X,
                         const StratifiedFraction& f,
                         GbStats* stats = nullptr);

enum class Verdict { Regulous, NotRegulous, Undecided };

enum class FailureKind {
  None,
  NoMonicRelation,      // not integral over the base ring
  InjectivityFailure,   // some fiber of the graph carries two points
  EliminationMismatch,  // graph does not project onto X
  FractionMismatch,     // supplied system incompatible with the fraction
  Budget,
};

struct RegulousVerdict {
  Verdict verdict = Verdict::Undecided;
  std::string adjoined_name = "t";
  Ideal graph_ideal;  // in C[x, t], t the trailing variable
  std::optional<Polynomial> monic_relation;
  InjectivityReport injectivity;
  FailureKind failure = FailureKind::None;
  std::string message;

  bool regulous() const { return verdict == Verdict::Regulous; }
};

/// Zariski closure of the graph of f over D(q), as an ideal of C[x, t].
Ideal graph_closure(const VarietyPresentation& X, const Fraction& f,
                    GbStats* stats = nullptr);

/// Decision procedure: f is regulous iff its graph closure is finite over X,
/// carries one point per fiber, and projects onto X. Negative verdicts carry
/// the failing check; budget exhaustion yields Undecided.
RegulousVerdict is_regulous(const VarietyPresentation& X, const Fraction& f,
                            GbStats* stats = nullptr);

/// Stratified input: the verdict is computed from the densest stratum.
RegulousVerdict is_regulous(const VarietyPresentation& X,
                            const StratifiedFraction& f,
                            GbStats* stats = nullptr);

/// Same pipeline on a caller-supplied graph system (polynomials in C[x, t],
/// the defining ideal is added). If a fraction is supplied, compatibility
/// q*t - p in sqrt(J) is verified first.
RegulousVerdict is_regulous_with_system(const VarietyPresentation& X,
                                        const std::optional<Fraction>& f,
                                        const std::vector<Polynomial>& system,
                                        const std::string& tname = "t",
                                        GbStats* stats = nullptr);

/// Power-pair criterion: gcd(n, m) = 1 and f^n, f^m in C[X] make the
/// zero-extension of f regulous; builds the pair graph with the Bezout
/// exponents u in (0, m), v = (1 - u n)/m and runs the pipeline on it.
RegulousVerdict check_power_pair(const VarietyPresentation& X,
                                 const Fraction& f, int n, int m,
                                 GbStats* stats = nullptr);

struct SwanResult {
  enum Kind { InRing, ProperlyRegulous, NotAPair } kind;
  std::optional<Polynomial> h;  // InRing representative
  Ideal graph_ideal;            // for the pair outcomes
};

/// Swan pair solver: p^2 = q^3 on X yields the cube-root function f with
/// f^2 = q, f^3 = p; decides whether f already lies in C[X].
SwanResult swan_pair_solve(const VarietyPresentation& X, const Polynomial& p,
                           const Polynomial& q, GbStats* stats = nullptr);

struct ElementaryWitness {
  Fraction g;          // element of C[X][f] outside C[X]
  int m = 0;           // g = (normalized f)^m * h
  Polynomial h;        // expansion coefficient with f^m h outside C[X]
  Polynomial g2, g3;   // base-ring representatives of g^2 and g^3
  Fraction normalized; // strata-normalized primary fraction
};

/// Constructs g in C[X][f] \ C[X] with g^2, g^3 in C[X]; f must be regulous
/// and outside C[X].
ElementaryWitness elementary_witness(const VarietyPresentation& X,
                                     const StratifiedFraction& f,
                                     GbStats* stats = nullptr);

struct RestrictionResult {
  RegulousVerdict verdict;
  std::optional<Fraction> restricted;  // representation used on V
  Basis attached_gb;                   // graph basis when Undecided
};

/// Restriction of a regulous f to a subvariety V (I_V contains I).
RestrictionResult restrict_regulous(const VarietyPresentation& X,
                                    const VarietyPresentation& V,
                                    const Fraction& f,
                                    GbStats* stats = nullptr);

/// Polynomial system over D(f) with coefficients a / f^k; the monic lead
/// t^d is implicit, `P_low` lists the lower coefficients of the monic
/// equation.
struct OpenSystemCoef {
  int tdeg = 0;
  Polynomial a;
  int fpow = 0;
};
struct OpenSystemEq {
  std::vector<OpenSystemCoef> coefs;
};
struct OpenSystem {
  int lead_degree = 1;
  OpenSystemEq P_low;
  std::vector<OpenSystemEq> F;
};

struct ExtendResult {
  long N = 0;
  std::vector<Polynomial> scaled_system;  // in C[x, t]
  RegulousVerdict verdict;                // for f^N * g on all of X
};

/// Extension from a principal open set: g given by a system over D(f) whose
/// unique solution is g; scales by s = (product of denominators)^2 and
/// certifies f^N g regulous on X. f must be polynomial on the presentation
/// (adjoin it first otherwise).
ExtendResult extend_from_principal_open(const VarietyPresentation& X,
                                        const Fraction& f,
                                        const OpenSystem& gsys,
                                        GbStats* stats = nullptr);

/// Fresh variable name not colliding with the declared ones.
std::string fresh_var_name(const std::vector<std::string>& vars,
                           const std::string& base = "t");

}  // namespace snk

#endif
