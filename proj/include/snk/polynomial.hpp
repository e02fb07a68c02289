#ifndef SNK_POLYNOMIAL_HPP
#define SNK_POLYNOMIAL_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "snk/errors.hpp"
#include "snk/monomial.hpp"
#include "snk/order.hpp"
#include "snk/rational.hpp"

namespace snk {

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no zero coefficients, no duplicate monomials, terms kept
/// sorted descending under grevlex in declaration precedence. The zero
/// polynomial has an empty term list. Values are immutable after
/// construction; all operations are pure.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  /// Canonicalizes a raw term list: merges duplicates, drops zeros.
  static Polynomial normalize(int nvars, std::vector<Term> terms) {
    for (const Term& t : terms)
      if (t.m.nvars() != nvars)
        throw InputError("term references a different ring size");
    Order ord = Order::grevlex(nvars);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.m, b.m);
    });
    Polynomial p(nvars);
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c += t.c;
        if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
      } else if (!t.c.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }
  static Polynomial one(int nvars) { return constant(nvars, 1); }
  static Polynomial variable(int nvars, int i, int32_t exp = 1) {
    Polynomial p(nvars);
    p.terms_.push_back({Monomial::var(nvars, i, exp), Rational(1)});
    return p;
  }
  static Polynomial monomial(int nvars, Monomial m, Rational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  long total_degree() const {
    long d = 0;
    for (const Term& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  long degree_in(int var) const {
    long d = 0;
    for (const Term& t : terms_) d = std::max(d, (long)t.m.e[var]);
    return d;
  }

  bool uses_var(int var) const {
    for (const Term& t : terms_)
      if (t.m.e[var] != 0) return true;
    return false;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  /// Leading term with respect to an arbitrary order (linear scan).
  const Term& leading_term(const Order& ord) const {
    if (terms_.empty()) throw InputError("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
      if (ord.greater(t.m, best->m)) best = &t;
    return *best;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
      return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, true);
  }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
  }

  /// this * (c * m)
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    // Multiplication by a monomial preserves the canonical sort.
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
      for (const Term& tb : b.terms_)
        acc.push_back({ta.m * tb.m, ta.c * tb.c});
    return normalize(a.nvars_, std::move(acc));
  }

  Polynomial pow(int e) const {
    if (e < 0) throw InputError("negative polynomial power");
    Polynomial r = one(nvars_);
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = e > 1 ? b * b : b;
      e >>= 1;
    }
    return r;
  }

  /// Re-embeds into a ring with `new_nvars` variables; old variable i
  /// becomes var_map[i].
  Polynomial embed(int new_nvars, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != nvars_)
      throw InputError("embed: variable map size mismatch");
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const Term& t : terms_) {
      Monomial m(new_nvars);
      for (int i = 0; i < nvars_; ++i) {
        if (t.m.e[i] != 0) {
          int j = var_map[i];
          if (j < 0 || j >= new_nvars)
            throw InputError("embed: variable map out of range");
          m.e[j] += t.m.e[i];
        }
      }
      acc.push_back({std::move(m), t.c});
    }
    return normalize(new_nvars, std::move(acc));
  }

  /// Projection onto the first `new_nvars` variables; requires that the
  /// polynomial does not use any dropped variable.
  Polynomial restrict_front(int new_nvars) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const Term& t : terms_) {
      Monomial m(new_nvars);
      for (int i = 0; i < nvars_; ++i) {
        if (t.m.e[i] != 0) {
          if (i >= new_nvars)
            throw InputError("restrict: polynomial uses a dropped variable");
          m.e[i] = t.m.e[i];
        }
      }
      acc.push_back({std::move(m), t.c});
    }
    return normalize(new_nvars, std::move(acc));
  }

  /// Substitutes var -> value (a polynomial in the same ring).
  Polynomial substitute(int var, const Polynomial& value) const {
    Polynomial r(nvars_);
    for (const Term& t : terms_) {
      Monomial m = t.m;
      int32_t e = m.e[var];
      m.e[var] = 0;
      Polynomial piece = monomial(nvars_, m, t.c);
      if (e > 0) piece = piece * value.pow(e);
      r = r + piece;
    }
    return r;
  }

  /// Divides content out and makes the leading coefficient (w.r.t. ord)
  /// positive: integer coefficients with gcd 1.
  Polynomial primitive(const Order& ord) const {
    if (is_zero()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              t.c.num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              t.c.den().get_mpz_t());
    }
    Rational scale{mpq_class(den_lcm) / mpq_class(num_gcd)};
    if (leading_term(ord).c.sign() < 0) scale = -scale;
    return scaled(scale);
  }

  Polynomial monic(const Order& ord) const {
    if (is_zero()) return *this;
    return scaled(leading_term(ord).c.inverse());
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b,
                          bool subtract) {
    if (a.nvars_ != b.nvars_) throw InputError("ring size mismatch");
    Order ord = Order::grevlex(a.nvars_);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && ord.greater(a.terms_[i].m, b.terms_[j].m))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() ||
                 ord.greater(b.terms_[j].m, a.terms_[i].m)) {
        Term t = b.terms_[j++];
        if (subtract) t.c = -t.c;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = subtract ? a.terms_[i].c - b.terms_[j].c
                              : a.terms_[i].c + b.terms_[j].c;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace snk

#endif
