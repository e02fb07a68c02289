#ifndef SNK_CERTIFICATE_HPP
#define SNK_CERTIFICATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snk/ideal.hpp"
#include "snk/problem.hpp"

namespace snk {

/// A reduced Groebner basis witness. Self-contained: `rows` write every
/// basis element as an explicit combination of `gens`, the generators
/// reduce to zero against the basis, and all S-pairs reduce to zero, so a
/// verifier needs only expansion and division to confirm that `basis` is
/// the reduced basis of <gens>.
struct GbBlock {
  std::string name;
  std::vector<std::string> ring;
  std::string order_spec;  // "grevlex" | "lex" | "block v1 v2 ..."
  std::vector<Polynomial> gens;
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> rows;
};

/// A linear membership witness: target = sum cofactors[i] * gens[i].
struct IdentityBlock {
  std::string name;
  std::vector<std::string> ring;
  Polynomial target;
  std::vector<Polynomial> gens;
  std::vector<Polynomial> cofactors;
};

/// Structured claims tie blocks to the verdict; each claim is re-checked
/// against its block.
/// Kinds: unit, no-unit, monic-power, no-monic-power, linear-solution,
/// no-linear-solution, normal-form.
struct Claim {
  std::string kind;
  std::string block;
  std::map<std::string, std::string> args;  // index=, var=, degree=, of=, is=
};

struct Certificate {
  std::string version = "v1";
  std::string engine;
  std::string task;
  std::string verdict;
  int exit_code = 0;
  long budget_used = 0;
  std::string timestamp;
  std::string inputs;  // canonical problem text
  std::vector<GbBlock> gb_blocks;
  std::vector<IdentityBlock> id_blocks;
  std::vector<Claim> claims;
  std::vector<std::string> results;  // task output lines (canonical)
  std::vector<std::string> notes;

  const GbBlock* find_gb(const std::string& name) const;
  const IdentityBlock* find_identity(const std::string& name) const;
  bool has_claim(const std::string& kind, const std::string& block) const;
  const Claim* find_claim(const std::string& kind,
                          const std::string& block) const;
};

std::string emit_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

Order order_from_spec(const std::string& spec,
                      const std::vector<std::string>& ring);
std::string order_spec_string(const std::string& kind,
                              const std::vector<std::string>& elim_names);

struct VerifyOutcome {
  bool ok = false;
  std::string reason;  // first failure
};

/// Re-checks every witness by expansion and division alone; never runs a
/// basis computation. Task-aware: the expected shape of the witness chain is
/// re-derived from the embedded inputs.
VerifyOutcome verify_certificate(const Certificate& cert);

}  // namespace snk

#endif
