#include "oracle_helpers.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "snk/errors.hpp"

namespace snk::oracle {

namespace {

// Plain long division against a list, top reduction only on the whole
// polynomial (moves irreducible leading terms to the remainder).
Polynomial naive_nf(Polynomial p, const std::vector<Polynomial>& G,
                    const Order& ord) {
  Polynomial rem(p.nvars());
  while (!p.is_zero()) {
    const Term lt = p.leading_term(ord);
    bool hit = false;
    for (const Polynomial& g : G) {
      if (g.is_zero()) continue;
      const Term lg = g.leading_term(ord);
      if (lg.m.divides(lt.m)) {
        p = p - g.times_term(lg.m.quotient_into(lt.m), lt.c / lg.c);
        hit = true;
        break;
      }
    }
    if (!hit) {
      Polynomial t = Polynomial::monomial(p.nvars(), lt.m, lt.c);
      rem = rem + t;
      p = p - t;
    }
  }
  return rem;
}

Polynomial naive_spoly(const Polynomial& f, const Polynomial& g,
                       const Order& ord) {
  const Term lf = f.leading_term(ord);
  const Term lg = g.leading_term(ord);
  Monomial l = lcm(lf.m, lg.m);
  return f.times_term(lf.m.quotient_into(l), lf.c.inverse()) -
         g.times_term(lg.m.quotient_into(l), lg.c.inverse());
}

}  // namespace

Basis naive_groebner(const std::vector<Polynomial>& gens, const Order& ord) {
  std::vector<Polynomial> basis;
  int nvars = 0;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    nvars = g.nvars();
    basis.push_back(g);
  }
  if (basis.empty()) return {};

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t j = 1; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Polynomial s = naive_nf(naive_spoly(basis[i], basis[j], ord), basis, ord);
    if (s.is_zero()) continue;
    basis.push_back(s);
    for (size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimalize.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const Monomial mi = basis[i].leading_term(ord).m;
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial mj = basis[j].leading_term(ord).m;
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail-reduce, make monic, sort.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial nf = naive_nf(minimal[i], others, ord);
    if (!nf.is_zero()) reduced.push_back(nf.monic(ord));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.greater(a.leading_term(ord).m, b.leading_term(ord).m);
            });
  return reduced;
}

namespace {

void enumerate_monomials(int nvars, long max_deg, Monomial& cur, int var,
                         std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  long used = 0;
  for (int i = 0; i < var; ++i) used += cur.e[i];
  for (long e = 0; used + e <= max_deg; ++e) {
    cur.e[var] = static_cast<int32_t>(e);
    enumerate_monomials(nvars, max_deg, cur, var + 1, out);
  }
  cur.e[var] = 0;
}

std::vector<Monomial> monomials_up_to(int nvars, long max_deg) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  enumerate_monomials(nvars, max_deg, cur, 0, out);
  return out;
}

}  // namespace

bool linear_membership_cofactors(const Polynomial& f,
                                 const std::vector<Polynomial>& gens,
                                 long degree_bound,
                                 std::vector<Polynomial>* cofactors) {
  int nvars = f.nvars();
  // Unknown columns: (generator index, cofactor monomial).
  struct Col {
    size_t gen;
    Monomial m;
  };
  std::vector<Col> cols;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    long room = degree_bound - gens[i].total_degree();
    if (room < 0) continue;
    for (const Monomial& m : monomials_up_to(nvars, room))
      cols.push_back({i, m});
  }
  // Row index: every monomial of degree <= degree_bound.
  std::vector<Monomial> rows = monomials_up_to(nvars, degree_bound);
  std::map<std::vector<int32_t>, size_t> row_of;
  for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r].e] = r;

  if (f.total_degree() > degree_bound) return false;

  // Dense augmented matrix over Q.
  std::vector<std::vector<Rational>> A(
      rows.size(), std::vector<Rational>(cols.size() + 1, Rational(0)));
  for (size_t c = 0; c < cols.size(); ++c) {
    Polynomial prod = gens[cols[c].gen].times_term(cols[c].m, Rational(1));
    for (const Term& t : prod.terms()) A[row_of.at(t.m.e)][c] = t.c;
  }
  for (const Term& t : f.terms()) A[row_of.at(t.m.e)][cols.size()] = t.c;

  // Gaussian elimination.
  size_t nrows = A.size(), ncols = cols.size();
  std::vector<long> pivot_col_of_row(nrows, -1);
  size_t rank = 0;
  for (size_t c = 0; c < ncols && rank < nrows; ++c) {
    size_t piv = rank;
    while (piv < nrows && A[piv][c].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(A[piv], A[rank]);
    Rational inv = A[rank][c].inverse();
    for (size_t k = c; k <= ncols; ++k) A[rank][k] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == rank || A[r][c].is_zero()) continue;
      Rational factor = A[r][c];
      for (size_t k = c; k <= ncols; ++k) A[r][k] -= factor * A[rank][k];
    }
    pivot_col_of_row[rank] = static_cast<long>(c);
    ++rank;
  }
  for (size_t r = rank; r < nrows; ++r)
    if (!A[r][ncols].is_zero()) return false;

  if (cofactors) {
    std::vector<Rational> x(ncols, Rational(0));
    for (size_t r = 0; r < rank; ++r)
      x[pivot_col_of_row[r]] = A[r][ncols];
    cofactors->assign(gens.size(), Polynomial(nvars));
    for (size_t c = 0; c < ncols; ++c) {
      if (x[c].is_zero()) continue;
      (*cofactors)[cols[c].gen] =
          (*cofactors)[cols[c].gen] +
          Polynomial::monomial(nvars, cols[c].m, x[c]);
    }
  }
  return true;
}

bool linear_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                       long degree_bound) {
  return linear_membership_cofactors(f, gens, degree_bound, nullptr);
}

namespace {

struct FpPoly {
  struct T {
    long c;
    std::vector<int32_t> e;
  };
  std::vector<T> terms;
};

long fp_mod(const mpz_class& z, long p) {
  mpz_class r = z % p;
  long v = r.get_si();
  return v < 0 ? v + p : v;
}

long fp_pow(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

bool fp_reduce(const Polynomial& poly, long p, FpPoly* out) {
  out->terms.clear();
  for (const Term& t : poly.terms()) {
    long den = fp_mod(t.c.den(), p);
    if (den == 0) return false;
    long num = fp_mod(t.c.num(), p);
    long c = (num * fp_pow(den, p - 2, p)) % p;
    if (c != 0) out->terms.push_back({c, t.m.e});
  }
  return true;
}

long fp_eval(const FpPoly& poly, const std::vector<long>& point, long p) {
  long acc = 0;
  for (const auto& t : poly.terms) {
    long v = t.c;
    for (size_t i = 0; i < point.size(); ++i)
      if (t.e[i] != 0) v = (v * fp_pow(point[i], t.e[i], p)) % p;
    acc = (acc + v) % p;
  }
  return acc;
}

}  // namespace

std::vector<std::pair<long, long>> fp_plane_zeros(
    const std::vector<Polynomial>& gens, long p, bool* good_prime) {
  *good_prime = true;
  std::vector<FpPoly> fps(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!fp_reduce(gens[i], p, &fps[i])) {
      *good_prime = false;
      return {};
    }
  }
  std::vector<std::pair<long, long>> points;
  std::vector<long> pt(2);
  for (long x = 0; x < p; ++x) {
    pt[0] = x;
    // Per-x specialization: evaluate the x-powers once per term.
    std::vector<std::vector<std::pair<long, int32_t>>> iny(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
      for (const auto& t : fps[i].terms) {
        long c = (t.c * fp_pow(x, t.e[0], p)) % p;
        if (c != 0) iny[i].push_back({c, t.e[1]});
      }
    }
    for (long y = 0; y < p; ++y) {
      bool zero = true;
      for (size_t i = 0; i < gens.size() && zero; ++i) {
        long acc = 0;
        for (const auto& [c, ey] : iny[i]) acc = (acc + c * fp_pow(y, ey, p)) % p;
        if (acc % p != 0) zero = false;
      }
      if (zero) points.emplace_back(x, y);
    }
  }
  return points;
}

FpFiberReport fp_graph_bijectivity(const std::vector<Polynomial>& I_gens,
                                   const std::vector<Polynomial>& J_gens,
                                   long p) {
  FpFiberReport rep;
  auto base = fp_plane_zeros(I_gens, p, &rep.good_prime);
  if (!rep.good_prime) return rep;
  std::vector<FpPoly> fpj(J_gens.size());
  for (size_t i = 0; i < J_gens.size(); ++i) {
    if (!fp_reduce(J_gens[i], p, &fpj[i])) {
      rep.good_prime = false;
      return rep;
    }
  }
  rep.base_points = static_cast<long>(base.size());
  std::vector<long> pt(3);
  for (const auto& [x, y] : base) {
    pt[0] = x;
    pt[1] = y;
    // Specialize each relation to a univariate table in t.
    std::vector<std::vector<std::pair<long, int32_t>>> int_(fpj.size());
    for (size_t i = 0; i < fpj.size(); ++i) {
      for (const auto& t : fpj[i].terms) {
        long c = (t.c * fp_pow(x, t.e[0], p)) % p;
        c = (c * fp_pow(y, t.e[1], p)) % p;
        if (c != 0) int_[i].push_back({c, t.e[2]});
      }
    }
    long count = 0;
    for (long t = 0; t < p && count < 2; ++t) {
      bool zero = true;
      for (size_t i = 0; i < fpj.size() && zero; ++i) {
        long acc = 0;
        for (const auto& [c, et] : int_[i]) acc = (acc + c * fp_pow(t, et, p)) % p;
        if (acc % p != 0) zero = false;
      }
      if (zero) ++count;
    }
    if (count != 1) ++rep.mismatched;
  }
  rep.bijective = rep.mismatched == 0;
  return rep;
}

Polynomial random_poly(std::mt19937& rng, int nvars, int max_degree,
                       int max_terms, int coeff_span) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-coeff_span, coeff_span);
  std::uniform_int_distribution<int> expo(0, max_degree);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(nvars);
    long remaining = max_degree;
    for (int v = 0; v < nvars; ++v) {
      int e = expo(rng) % (remaining + 1);
      m.e[v] = e;
      remaining -= e;
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    terms.push_back({m, Rational(c)});
  }
  return Polynomial::normalize(nvars, std::move(terms));
}

}  // namespace snk::oracle
