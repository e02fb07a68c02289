#ifndef SNK_ORDER_HPP
#define SNK_ORDER_HPP

#include <string>
#include <vector>

#include "snk/errors.hpp"
#include "snk/monomial.hpp"

namespace snk {

/// Total, multiplicative, well-founded order on monomials of a fixed ring.
///
/// Kinds: lex, grevlex, and block elimination orders. A block order compares
/// the elimination-variable part first (by the inner kind), so every monomial
/// containing an elimination variable ranks above every monomial free of
/// them. Variable precedence defaults to declaration order.
class Order {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static Order lex(int nvars) { return lex(default_prec(nvars)); }
  static Order lex(std::vector<int> prec) {
    return Order(Kind::Lex, std::move(prec), {}, Kind::Lex);
  }
  static Order grevlex(int nvars) { return grevlex(default_prec(nvars)); }
  static Order grevlex(std::vector<int> prec) {
    return Order(Kind::Grevlex, std::move(prec), {}, Kind::Grevlex);
  }
  /// Elimination order: `elim_vars` rank above everything else; both blocks
  /// compared by `inner` (grevlex unless stated otherwise).
  static Order block(int nvars, const std::vector<int>& elim_vars,
                     Kind inner = Kind::Grevlex) {
    return block(default_prec(nvars), elim_vars, inner);
  }
  static Order block(std::vector<int> prec, const std::vector<int>& elim_vars,
                     Kind inner = Kind::Grevlex) {
    std::vector<char> mask(prec.size(), 0);
    for (int v : elim_vars) {
      if (v < 0 || v >= static_cast<int>(prec.size()))
        throw InputError("block order: elimination variable out of range");
      mask[v] = 1;
    }
    return Order(Kind::Block, std::move(prec), std::move(mask), inner);
  }

  Kind kind() const { return kind_; }
  int nvars() const { return static_cast<int>(prec_.size()); }
  const std::vector<char>& elim_mask() const { return elim_; }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        return cmp_lex(a, b, nullptr, 0);
      case Kind::Grevlex:
        return cmp_grevlex(a, b, nullptr, 0);
      case Kind::Block: {
        int c = cmp_block_part(a, b, 1);
        if (c != 0) return c;
        return cmp_block_part(a, b, 0);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) > 0;
  }

  /// Stable identity used as a cache key.
  std::string key() const {
    std::string k;
    switch (kind_) {
      case Kind::Lex: k = "lex"; break;
      case Kind::Grevlex: k = "grevlex"; break;
      case Kind::Block: k = inner_ == Kind::Lex ? "block-lex" : "block-grevlex"; break;
    }
    k += ";p=";
    for (int v : prec_) k += std::to_string(v) + ",";
    if (kind_ == Kind::Block) {
      k += ";e=";
      for (char c : elim_) k += c ? '1' : '0';
    }
    return k;
  }

  friend bool operator==(const Order& a, const Order& b) {
    return a.key() == b.key();
  }

 private:
  Order(Kind kind, std::vector<int> prec, std::vector<char> elim, Kind inner)
      : kind_(kind), prec_(std::move(prec)), elim_(std::move(elim)),
        inner_(inner) {}

  static std::vector<int> default_prec(int nvars) {
    std::vector<int> p(nvars);
    for (int i = 0; i < nvars; ++i) p[i] = i;
    return p;
  }

  // mask-filtered lex: only variables with mask[v] == want participate;
  // mask == nullptr means all.
  int cmp_lex(const Monomial& a, const Monomial& b, const std::vector<char>* mask,
              char want) const {
    for (int v : prec_) {
      if (mask && (*mask)[v] != want) continue;
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }

  int cmp_grevlex(const Monomial& a, const Monomial& b,
                  const std::vector<char>* mask, char want) const {
    long da = 0, db = 0;
    for (int v : prec_) {
      if (mask && (*mask)[v] != want) continue;
      da += a.e[v];
      db += b.e[v];
    }
    if (da != db) return da > db ? 1 : -1;
    // Equal degree: the monomial with the larger exponent in the least
    // significant differing variable is the smaller one.
    for (auto it = prec_.rbegin(); it != prec_.rend(); ++it) {
      int v = *it;
      if (mask && (*mask)[v] != want) continue;
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }

  int cmp_block_part(const Monomial& a, const Monomial& b, char want) const {
    if (inner_ == Kind::Lex) return cmp_lex(a, b, &elim_, want);
    return cmp_grevlex(a, b, &elim_, want);
  }

  Kind kind_;
  std::vector<int> prec_;
  std::vector<char> elim_;
  Kind inner_;
};

}  // namespace snk

#endif
