#ifndef SNK_TRACKED_HPP
#define SNK_TRACKED_HPP

#include "snk/ideal.hpp"

namespace snk {

/// Reduced Groebner basis with transformation rows: every basis element is
/// an explicit combination of the input generators. Used where certificates
/// or explicit cofactors are required; the plain engine stays row-free.
struct TrackedBasis {
  std::vector<Polynomial> gens;
  std::vector<Polynomial> basis;
  // basis[i] == sum_j rows[i][j] * gens[j]
  std::vector<std::vector<Polynomial>> rows;
};

TrackedBasis groebner_tracked(const std::vector<Polynomial>& gens,
                              const Order& ord, long budget = 0,
                              GbStats* stats = nullptr);

struct TrackedNF {
  Polynomial remainder;
  // f == sum_j cofactors[j] * gens[j] + remainder
  std::vector<Polynomial> cofactors;
};

/// Normal form of f against tb.basis with cofactors re-expressed over the
/// original generators.
TrackedNF tracked_normal_form(const Polynomial& f, const TrackedBasis& tb,
                              const Order& ord);

}  // namespace snk

#endif
