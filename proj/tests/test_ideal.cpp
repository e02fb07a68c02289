#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <thread>

#include "oracle_helpers.hpp"
#include "snk/errors.hpp"
#include "snk/ideal.hpp"
#include "snk/parser.hpp"
#include "snk/tracked.hpp"

using namespace snk;

namespace {
const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = XY) {
  return parse_polynomial(s, vars);
}

Ideal ideal(const std::vector<std::string>& gens,
            const std::vector<std::string>& vars = XY) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
  return Ideal((int)vars.size(), std::move(ps));
}

bool same_basis(const Basis& a, const Basis& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}
}  // namespace

TEST_CASE("groebner: single generator is already reduced") {
  Basis gb = groebner_basis({P("x")}, Order::lex(2));
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == P("x"));
}

TEST_CASE("groebner: cusp graph ideal in lex t>y>x agrees with naive oracle") {
  std::vector<std::string> vars = {"t", "y", "x"};
  std::vector<Polynomial> gens = {P("y^2 - x^3", vars), P("x*t - y", vars),
                                  P("t^2 - x", vars)};
  Order ord = Order::lex(3);
  Basis gb = groebner_basis(gens, ord);
  Basis oracle_gb = oracle::naive_groebner(gens, ord);
  CHECK(same_basis(gb, oracle_gb));

  // Contains t^2 - x, an element with leading term t*(...), and the
  // eliminated relation y^2 - x^3.
  bool has_t2 = false, has_t_linear = false, has_elim = false;
  for (const Polynomial& g : gb) {
    Monomial lm = g.leading_term(ord).m;
    if (g == P("t^2 - x", vars)) has_t2 = true;
    if (lm.e[0] == 1) has_t_linear = true;
    if (g == P("y^2 - x^3", vars)) has_elim = true;
  }
  CHECK(has_t2);
  CHECK(has_t_linear);
  CHECK(has_elim);
}

TEST_CASE("groebner: grevlex example with hand-computed basis") {
  Basis gb = groebner_basis({P("x^2 + y"), P("x*y + 1")}, Order::grevlex(2));
  Basis expected = {P("x^2 + y"), P("x*y + 1"), P("y^2 - x")};
  // Reduced basis sorted descending by grevlex leading monomial.
  REQUIRE(gb.size() == 3);
  std::set<std::string> got, want;
  for (const auto& g : gb) got.insert(print_polynomial(g, XY));
  for (const auto& g : expected) want.insert(print_polynomial(g, XY));
  CHECK(got == want);
  CHECK(same_basis(gb, oracle::naive_groebner({P("x^2 + y"), P("x*y + 1")},
                                              Order::grevlex(2))));
}

TEST_CASE("engine agrees with the criterion-free oracle on random ideals") {
  std::mt19937 rng(8128);
  int done = 0;
  while (done < 25) {
    int nvars = 2 + done % 2;
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2 + done % 2; ++i) {
      Polynomial g = oracle::random_poly(rng, nvars, 3, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    ++done;
    Order ord = done % 2 ? Order::grevlex(nvars) : Order::lex(nvars);
    Basis fast = groebner_basis(gens, ord);
    Basis slow = oracle::naive_groebner(gens, ord);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    // The tracked engine must reproduce the same reduced basis.
    TrackedBasis tracked = groebner_tracked(gens, ord);
    REQUIRE(tracked.basis.size() == fast.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(tracked.basis[i] == fast[i]);
  }
}

TEST_CASE("cyclic-4 completes and stays consistent") {
  std::vector<std::string> vars = {"a", "b", "c", "d"};
  std::vector<Polynomial> gens = {
      P("a + b + c + d", vars),
      P("a*b + b*c + c*d + d*a", vars),
      P("a*b*c + b*c*d + c*d*a + d*a*b", vars),
      P("a*b*c*d - 1", vars),
  };
  Order ord = Order::grevlex(4);
  Basis gb = groebner_basis(gens, ord);
  CHECK(gb.size() >= 4);
  for (const Polynomial& g : gens)
    CHECK(normal_form(g, gb, ord).is_zero());
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j)
      CHECK(normal_form(spoly(gb[i], gb[j], ord), gb, ord).is_zero());
}

TEST_CASE("groebner idempotence") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 20; ++it) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2 + it % 2; ++i)
      gens.push_back(oracle::random_poly(rng, 3, 3, 3, 3));
    Order ord = Order::grevlex(3);
    Basis gb = groebner_basis(gens, ord);
    Basis gb2 = groebner_basis(gb, ord);
    CHECK(same_basis(gb, gb2));
  }
}

TEST_CASE("groebner budget produces a hard error") {
  std::vector<std::string> vars = {"x", "y", "z"};
  std::vector<Polynomial> gens = {P("x^2 + y*z", vars), P("y^2 + x*z", vars),
                                  P("z^2 + x*y", vars)};
  CHECK_THROWS_AS(groebner_basis(gens, Order::grevlex(3), 2), BudgetExceeded);
}

TEST_CASE("contains: cusp examples") {
  Ideal I = ideal({"y^2 - x^3"});
  CHECK(contains(I, P("y^2 - x^3")));
  CHECK(!contains(I, P("y")));
}

TEST_CASE("contains: three lines identity from the worked example") {
  // 4x^2y^2 - xy(x+y)^2 = -xy(x-y)^2 lies in <xy(y-x)>.
  Ideal I = ideal({"x*y*(y - x)"});
  Polynomial f = P("4*x^2*y^2 - x*y*(x + y)^2");
  CHECK(f == P("-x*y*(x - y)^2"));  // expansion identity
  CHECK(contains(I, f));
}

TEST_CASE("radical membership via Rabinowitsch") {
  CHECK(radical_contains(ideal({"x^2"}), P("x")));
  CHECK(!radical_contains(ideal({"x"}), P("y")));
  // V(y^2 - x^3, x) = {(0,0)}: y vanishes there. Oracle: y^2 = -(x^3) + (y^2-x^3)
  // + x*x^2 is in the ideal, so y is in the radical by the point check.
  Ideal I = ideal({"y^2 - x^3", "x"});
  CHECK(contains(I, P("y^2")));
  CHECK(radical_contains(I, P("y")));
  CHECK(!contains(I, P("y")));
}

TEST_CASE("eliminate: graph projections") {
  std::vector<std::string> vars = {"x", "y", "t"};
  // Graph of a polynomial projects onto everything.
  Ideal g1 = ideal({"t - x^2 - y"}, vars);
  Ideal e1 = eliminate(g1, {2});
  CHECK(e1.gens().empty());

  // Hyperbola closure: eliminate t from <xt - 1> gives 0.
  Ideal g2 = ideal({"x*t - 1"}, vars);
  CHECK(eliminate(g2, {2}).gens().empty());

  // Cusp graph eliminates to the cusp, up to radical.
  Ideal g3 = ideal({"y^2 - x^3", "x*t - y", "t^2 - x"}, vars);
  Ideal e3 = eliminate(g3, {2});
  CHECK(!e3.gens().empty());
  Ideal cusp3 = ideal({"y^2 - x^3"}, vars);
  CHECK(equal_radical(e3, cusp3));
}

TEST_CASE("saturate: basic laws and the cusp graph") {
  std::vector<std::string> vars = {"x", "q"};
  CHECK(equal_radical(saturate(ideal({"x*q"}, vars), P("q", vars)),
                      ideal({"x"}, vars)));
  Basis unit = saturate(ideal({"x^2"}, vars), P("x", vars))
                   .groebner(Order::grevlex(2));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == P("1", vars));

  // Cusp: saturating <y^2 - x^3, xt - y> by x reproduces the full graph
  // ideal of y/x, radical-equal to <y^2 - x^3, xt - y, t^2 - x>.
  std::vector<std::string> g = {"x", "y", "t"};
  Ideal J = saturate(ideal({"y^2 - x^3", "x*t - y"}, g), P("x", g));
  Ideal expected = ideal({"y^2 - x^3", "x*t - y", "t^2 - x"}, g);
  CHECK(equal_radical(J, expected));
  CHECK(contains(J, P("t^2 - x", g)));
}

TEST_CASE("quotient: colon ideal basics") {
  CHECK(equal_radical(quotient_by(ideal({"x*y"}), P("x")), ideal({"y"})));
  // (I : 1) = I
  Ideal I = ideal({"y^2 - x^3"});
  Ideal q = quotient_by(I, P("1"));
  CHECK(equal_radical(q, I));

  // On the cusp: (<x> + I : y) = <x, y> + I, checked against the
  // bounded-degree linear-algebra membership oracle.
  Ideal J = ideal({"x", "y^2 - x^3"});
  Ideal col = quotient_by(J, P("y"));
  Ideal expected = ideal({"x", "y"});
  CHECK(equal_radical(col, expected));
  // Oracle cross-check: x*y and y*y lie in <x, y^2-x^3> with small cofactors;
  // 1*y does not.
  CHECK(oracle::linear_membership(P("x*y"), {P("x"), P("y^2 - x^3")}, 6));
  CHECK(oracle::linear_membership(P("y^2"), {P("x"), P("y^2 - x^3")}, 6));
  CHECK(!oracle::linear_membership(P("y"), {P("x"), P("y^2 - x^3")}, 6));
}

TEST_CASE("containment chain: saturate >= quotient >= I") {
  std::mt19937 rng(99);
  for (int it = 0; it < 10; ++it) {
    Polynomial a = oracle::random_poly(rng, 2, 3, 3, 3);
    Polynomial b = oracle::random_poly(rng, 2, 2, 2, 3);
    Polynomial q = oracle::random_poly(rng, 2, 2, 2, 3);
    if (q.is_zero()) continue;
    Ideal I(2, {a, b});
    Ideal quo = quotient_by(I, q);
    Ideal sat = saturate(I, q);
    for (const Polynomial& g : I.gens()) CHECK(contains(quo, g));
    for (const Polynomial& g : quo.gens()) CHECK(contains(sat, g));
  }
}

TEST_CASE("equal_radical basics") {
  CHECK(equal_radical(ideal({"x^2"}), ideal({"x"})));
  CHECK(!equal_radical(ideal({"x"}), ideal({"y"})));
}

TEST_CASE("is_nzd examples") {
  CHECK(is_nzd(ideal({"x*y*(y - x)"}), P("x + y")));
  CHECK(!is_nzd(ideal({"x*y"}), P("x")));
  CHECK(is_nzd(ideal({"y^2 - x^3"}), P("x")));
  CHECK(!is_nzd(ideal({"x"}), P("0")));
}

TEST_CASE("membership soundness against construction and linear oracle") {
  std::mt19937 rng(31415);
  int agreements = 0;
  for (int it = 0; it < 50; ++it) {
    int nvars = 2 + it % 2;
    std::vector<Polynomial> gens;
    int k = 1 + it % 3;
    for (int i = 0; i < k; ++i) {
      Polynomial g = oracle::random_poly(rng, nvars, 3, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I(nvars, gens);

    // f built inside the ideal must test positive.
    Polynomial f(nvars);
    for (const Polynomial& g : gens)
      f = f + oracle::random_poly(rng, nvars, 2, 2, 2) * g;
    CHECK(contains(I, f));

    // Random f: engine verdict must agree with the bounded-degree oracle.
    Polynomial h = oracle::random_poly(rng, nvars, 3, 4, 4);
    bool engine = contains(I, h);
    bool lin = oracle::linear_membership(h, gens, 6);
    if (engine == lin) ++agreements;
    // The linear oracle is complete for membership up to its degree bound:
    // engine false implies oracle false.
    if (!engine) CHECK(!lin);
  }
  CHECK(agreements >= 45);  // degree-6 bound decides these small instances
}

TEST_CASE("eliminate commutes with radical on zero-dimensional instances") {
  // Points over F_p cross-check on <y^2 - x^3, x - 4>: a zero-dimensional
  // ideal; projection of its points equals the points of the eliminated
  // ideal, excluding bad primes.
  std::vector<std::string> vars = {"x", "y"};
  Ideal I = ideal({"y^2 - x^3", "x - 4"}, vars);
  Ideal ex = eliminate(I, {1});  // drop y -> constraints on x alone
  for (long p : {10007L, 10009L}) {
    bool ok = true;
    auto pts = oracle::fp_plane_zeros(I.gens(), p, &ok);
    REQUIRE(ok);
    std::set<long> proj;
    for (auto [x, y] : pts) proj.insert(x);
    // x - 4 pins x = 4 and y^2 = 64 has the two roots +-8.
    CHECK(proj == std::set<long>({4}));
    CHECK(pts.size() == 2);
    bool ok2 = true;
    auto exz = oracle::fp_plane_zeros(ex.gens(), p, &ok2);
    REQUIRE(ok2);
    std::set<long> exx;
    for (auto [x, y] : exz) exx.insert(x);
    CHECK(exx == proj);  // elimination = projection on points
  }
}

TEST_CASE("tracked groebner rows reproduce the basis") {
  std::vector<std::string> vars = {"x", "y", "t"};
  std::vector<Polynomial> gens = {P("y^2 - x^3", vars), P("x*t - y", vars),
                                  P("t^2 - x", vars)};
  Order ord = Order::block(3, {2});
  TrackedBasis tb = groebner_tracked(gens, ord);
  REQUIRE(!tb.basis.empty());
  for (size_t i = 0; i < tb.basis.size(); ++i) {
    Polynomial back(3);
    for (size_t j = 0; j < gens.size(); ++j)
      back = back + tb.rows[i][j] * gens[j];
    CHECK(back == tb.basis[i]);
  }
  // Tracked and plain engines agree on the reduced basis.
  Basis plain = groebner_basis(gens, ord);
  REQUIRE(plain.size() == tb.basis.size());
  for (size_t i = 0; i < plain.size(); ++i) CHECK(plain[i] == tb.basis[i]);

  // Tracked normal form writes f as combination + remainder.
  Polynomial f = P("t^3 + y^2", vars);
  TrackedNF nf = tracked_normal_form(f, tb, ord);
  Polynomial back = nf.remainder;
  for (size_t j = 0; j < gens.size(); ++j)
    back = back + nf.cofactors[j] * gens[j];
  CHECK(back == f);
}

TEST_CASE("concurrent basis queries against one ideal") {
  Ideal I = ideal({"x^2 + y", "x*y + 1", "y^2 - x"});
  std::vector<std::thread> pool;
  std::vector<size_t> sizes(8, 0);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&I, &sizes, t]() {
      Order ord = t % 2 ? Order::grevlex(2) : Order::lex(2);
      const Basis& b = I.groebner(ord);
      sizes[t] = b.size();
      // Pure read-side operations are safe concurrently.
      contains(I, parse_polynomial("x^2 + y", XY));
    });
  for (auto& th : pool) th.join();
  for (int t = 2; t < 8; ++t) CHECK(sizes[t] == sizes[t - 2]);
}

TEST_CASE("ideal cache is consistent") {
  Ideal I = ideal({"x^2 + y", "x*y + 1"});
  const Basis& b1 = I.groebner(Order::grevlex(2));
  const Basis& b2 = I.groebner(Order::grevlex(2));
  CHECK(&b1 == &b2);  // memoized
  Ideal copy = I;
  const Basis& b3 = copy.groebner(Order::grevlex(2));
  CHECK(&b1 == &b3);  // cache shared across copies
}
