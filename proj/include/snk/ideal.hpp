#ifndef SNK_IDEAL_HPP
#define SNK_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "snk/polynomial.hpp"

namespace snk {

using Basis = std::vector<Polynomial>;

namespace config {
/// Global S-pair budget applied when a call does not override it.
long spair_budget();
void set_spair_budget(long budget);
}  // namespace config

struct GbStats {
  long spairs = 0;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i]*G[i] + remainder, with no
/// remainder monomial divisible by any leading monomial of G.
DivisionResult divide_multi(const Polynomial& f,
                            const std::vector<Polynomial>& G,
                            const Order& ord);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const Order& ord);

/// Buchberger S-polynomial; leading terms cancel.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const Order& ord);

/// Reduced Groebner basis of <gens>: monic, auto-reduced, sorted descending
/// by leading monomial. Deterministic. budget == 0 uses the global default.
Basis groebner_basis(const std::vector<Polynomial>& gens, const Order& ord,
                     long budget = 0, GbStats* stats = nullptr);

/// Generator list with a per-order reduced-basis cache. Immutable after
/// construction; the cache is a thread-safe memo shared across copies.
class Ideal {
 public:
  Ideal() : nvars_(0), cache_(std::make_shared<Cache>()) {}
  Ideal(int nvars, std::vector<Polynomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const Basis& groebner(const Order& ord, long budget = 0,
                        GbStats* stats = nullptr) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<Basis>> entries;
  };
  int nvars_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Ideal membership: normal form of f vanishes.
bool contains(const Ideal& I, const Polynomial& f, GbStats* stats = nullptr);

/// Radical membership via the Rabinowitsch trick:
/// f in sqrt(I)  iff  1 in I + <1 - z*f>.
bool radical_contains(const Ideal& I, const Polynomial& f,
                      GbStats* stats = nullptr);

bool is_unit_ideal(const Ideal& I, GbStats* stats = nullptr);

/// I intersected with the subring of variables outside drop_vars, via a
/// block-order basis. Generators of the result are free of drop_vars but the
/// ambient ring is kept.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop_vars,
                GbStats* stats = nullptr);

/// (I : q^inf)
Ideal saturate(const Ideal& I, const Polynomial& q, GbStats* stats = nullptr);

/// (I : q)
Ideal quotient_by(const Ideal& I, const Polynomial& q,
                  GbStats* stats = nullptr);

Ideal intersect(const Ideal& I, const Ideal& J, GbStats* stats = nullptr);

/// Mutual radical membership of the generators.
bool equal_radical(const Ideal& I, const Ideal& J, GbStats* stats = nullptr);

/// q is a non-zero-divisor modulo I: (I : q) = I. Assumes I radical.
bool is_nzd(const Ideal& I, const Polynomial& q, GbStats* stats = nullptr);

/// Drops unused trailing variables; every generator must live in the first
/// new_nvars variables.
Ideal restrict_front(const Ideal& I, int new_nvars);

/// Identity embedding of a polynomial into a ring with extra trailing vars.
Polynomial embed_front(const Polynomial& p, int new_nvars);

/// Re-embeds all generators into a larger ring.
Ideal embed(const Ideal& I, int new_nvars, const std::vector<int>& var_map);

/// Identity embedding convenience: old variable i stays variable i.
Ideal embed_front(const Ideal& I, int new_nvars);

}  // namespace snk

#endif
