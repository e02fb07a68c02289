#ifndef SNK_MONOMIAL_HPP
#define SNK_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace snk {

/// Exponent vector, one slot per declared variable of its ring.
struct Monomial {
  std::vector<int32_t> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }
  bool is_one() const {
    for (int32_t x : e)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e == b.e;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return a.e != b.e;
  }
  /// Container ordering only (not a monomial order).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.e < b.e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.e[i] += b.e[i];
    return r;
  }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  /// other / this; caller guarantees divisibility.
  Monomial quotient_into(const Monomial& other) const {
    Monomial r = other;
    for (int i = 0; i < r.nvars(); ++i) r.e[i] -= e[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
  }

  static Monomial var(int nvars, int i, int32_t exp = 1) {
    Monomial m(nvars);
    m.e[i] = exp;
    return m;
  }
};

}  // namespace snk

#endif
