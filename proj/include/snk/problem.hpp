#ifndef SNK_PROBLEM_HPP
#define SNK_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "snk/regulous.hpp"

namespace snk {

/// Line-oriented problem file: `key: value` headers plus polynomial-per-line
/// blocks terminated by `end`. Unknown keys are rejected; parsing is
/// deterministic and canonical emission round-trips byte-identically.
struct ProblemFile {
  std::string task;
  std::vector<std::string> vars;
  std::vector<std::string> adjoined;

  std::vector<Polynomial> ideal;                    // in vars
  std::vector<std::vector<Polynomial>> components;  // in vars, one per line
  std::vector<Polynomial> relations;                // in vars + adjoined
  std::vector<Polynomial> graph;                    // in vars + adjoined
  std::optional<Fraction> fraction;                 // in vars
  std::vector<Fraction> candidates;                 // in vars
  std::optional<Polynomial> member;                 // in vars
  std::vector<std::string> eliminate_vars;
  std::optional<Polynomial> saturate_by;            // in vars
  std::optional<Polynomial> swan_p, swan_q;         // in vars
  std::optional<int> degree_bound;                  // swan-scan
  std::vector<Rational> coefficients;               // swan-scan
  std::optional<Polynomial> target;                 // nullstellensatz
  std::vector<Polynomial> gens;                     // nullstellensatz
  std::optional<int> bound;                         // nullstellensatz
  std::optional<int> conductor_degree;

  std::vector<std::string> all_vars() const {
    std::vector<std::string> v = vars;
    v.insert(v.end(), adjoined.begin(), adjoined.end());
    return v;
  }
};

extern const std::vector<std::string> kKnownTasks;

ProblemFile parse_problem(const std::string& text);
std::string emit_problem(const ProblemFile& p);

/// Fraction text "p / q" (or a bare polynomial meaning denominator 1).
Fraction parse_fraction(const std::string& text,
                        const std::vector<std::string>& vars);
std::string print_fraction(const Fraction& f,
                           const std::vector<std::string>& vars);

}  // namespace snk

#endif
