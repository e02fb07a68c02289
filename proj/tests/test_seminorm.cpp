#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_helpers.hpp"
#include "snk/errors.hpp"
#include "snk/parser.hpp"
#include "snk/seminorm.hpp"

using namespace snk;

namespace {

const std::vector<std::string> XY = {"x", "y"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars = XY) {
  return parse_polynomial(s, vars);
}

VarietyPresentation variety(const std::vector<std::string>& gens,
                            const std::vector<std::string>& vars = XY) {
  VarietyPresentation X;
  X.vars = vars;
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
  X.I = Ideal((int)vars.size(), std::move(ps));
  return X;
}

const char* kCusp = "y^2 - x^3";
const char* kNode = "y^2 - x^2*(x + 1)";
const char* kThreeLines = "x*y*(y - x)";

}  // namespace

TEST_CASE("adjoin y/x to the cusp") {
  auto X = variety({kCusp});
  SeminormTower T = make_tower(X);
  CHECK(T.height() == 0);
  SeminormTower T1 = adjoin(T, Fraction{P("y"), P("x")});
  CHECK(T1.height() == 1);
  CHECK(T1.current.adjoined == std::vector<std::string>{"t1"});
  std::vector<std::string> v3 = {"x", "y", "t1"};
  CHECK(contains(T1.current.J, P("t1^2 - x", v3)));
  CHECK(contains(T1.current.J, P("x*t1 - y", v3)));
  CHECK(is_subintegral(T1.current));

  // The grown ring is a polynomial ring: x = t1^2 and y = t1^3.
  CHECK(contains(T1.current.J, P("x - t1^2", v3)));
  CHECK(contains(T1.current.J, P("y - t1^3", v3)));
}

TEST_CASE("adjoining a polynomial raises AlreadyInRing") {
  auto X = variety({kCusp});
  SeminormTower T = make_tower(X);
  CHECK_THROWS_AS(adjoin(T, Fraction{P("x^2 + y"), P("1")}), AlreadyInRing);
}

TEST_CASE("adjoining a non-regulous fraction raises") {
  auto X = variety({"y^2 + (x^2 - 1)*x^4"});
  SeminormTower T = make_tower(X);
  CHECK_THROWS_AS(adjoin(T, Fraction{P("y"), P("x^2")}), NotRegulousError);
}

TEST_CASE("seminormalize_with_candidates on the cusp") {
  auto X = variety({kCusp});
  SeminormalizeResult r =
      seminormalize_with_candidates(X, {Fraction{P("y"), P("x")}});
  CHECK(r.tower.height() == 1);
  REQUIRE(r.report.size() == 1);
  CHECK(r.report[0].status == CandidateStatus::Adjoined);
}

TEST_CASE("seminormalize_with_candidates on the sextic: one of each") {
  auto X = variety({"y^2 + (x^2 - 1)*x^4"});
  SeminormalizeResult r = seminormalize_with_candidates(
      X, {Fraction{P("y"), P("x")}, Fraction{P("y"), P("x^2")}});
  CHECK(r.tower.height() == 1);
  REQUIRE(r.report.size() == 2);
  CHECK(r.report[0].status == CandidateStatus::Adjoined);
  CHECK(r.report[1].status == CandidateStatus::NotRegulous);
}

TEST_CASE("empty candidate list gives a height-0 tower") {
  auto X = variety({kCusp});
  SeminormalizeResult r = seminormalize_with_candidates(X, {});
  CHECK(r.tower.height() == 0);
  CHECK(r.report.empty());
}

TEST_CASE("idempotence: re-running on the grown tower adjoins nothing") {
  auto X = variety({kCusp});
  SeminormalizeResult first =
      seminormalize_with_candidates(X, {Fraction{P("y"), P("x")}});
  REQUIRE(first.tower.height() == 1);

  VarietyPresentation grown = first.tower.current_variety();
  std::vector<Fraction> lifted = {
      Fraction{embed_front(P("y"), 3), embed_front(P("x"), 3)}};
  SeminormalizeResult again = seminormalize_with_candidates(grown, lifted);
  CHECK(again.tower.height() == 0);
  REQUIRE(again.report.size() == 1);
  CHECK(again.report[0].status == CandidateStatus::AlreadyInRing);
  REQUIRE(again.report[0].in_ring_rep.has_value());
  // y/x = t1 in the grown ring.
  CHECK(contains(grown.I,
                 *again.report[0].in_ring_rep -
                     parse_polynomial("t1", {"x", "y", "t1"})));
}

TEST_CASE("tower prefixes stay subintegral") {
  auto X = variety({kThreeLines});
  SeminormTower T = make_tower(X);
  T = adjoin(T, Fraction{P("2*x*y"), P("x + y")});
  CHECK(is_subintegral(T.current));
  // Second, trivial-looking candidate over the grown presentation.
  std::vector<std::string> v3 = {"x", "y", "t1"};
  Fraction f2{parse_polynomial("t1 + x", v3), parse_polynomial("1", v3)};
  CHECK_THROWS_AS(adjoin(T, f2), AlreadyInRing);

  // Each prefix extension is subintegral.
  for (int h = 0; h <= T.height(); ++h) {
    ExtensionPresentation prefix;
    prefix.base = X;
    for (int i = 0; i < h; ++i)
      prefix.adjoined.push_back(T.steps[i].var_name);
    prefix.J = h == 0 ? X.I : Ideal(2 + h, T.steps[h - 1].relations);
    CHECK(is_subintegral(prefix));
  }
}

TEST_CASE("order independence up to isomorphism on two candidates") {
  auto X = variety({kCusp});
  Fraction f1{P("y"), P("x")};
  Fraction f2{P("y + x^2"), P("x")};

  SeminormalizeResult A = seminormalize_with_candidates(X, {f1, f2});
  SeminormalizeResult B = seminormalize_with_candidates(X, {f2, f1});
  CHECK(A.tower.height() == 1);
  CHECK(B.tower.height() == 1);
  REQUIRE(A.report[1].status == CandidateStatus::AlreadyInRing);
  REQUIRE(B.report[1].status == CandidateStatus::AlreadyInRing);
  REQUIRE(A.report[1].in_ring_rep.has_value());
  REQUIRE(B.report[1].in_ring_rep.has_value());

  // Match variables: in A the second candidate equals t1 + x; in B the
  // second candidate (= f1) equals t1 - x. Substituting the relation into
  // each tower's graph relations lands in the other, up to radical.
  std::vector<std::string> v3 = {"x", "y", "t1"};
  Polynomial hA = *A.report[1].in_ring_rep;  // f2 in tower A
  Polynomial hB = *B.report[1].in_ring_rep;  // f1 in tower B
  CHECK(contains(A.tower.current.J, hA - parse_polynomial("t1 + x", v3)));
  CHECK(contains(B.tower.current.J, hB - parse_polynomial("t1 - x", v3)));

  // Map tower A's relations through t1 -> hB (the image of f1 in tower B).
  for (const Polynomial& rel : A.tower.current.J.gens()) {
    Polynomial mapped = rel.substitute(2, hB);
    CHECK(radical_contains(B.tower.current.J, mapped));
  }
  for (const Polynomial& rel : B.tower.current.J.gens()) {
    Polynomial mapped = rel.substitute(2, hA);
    CHECK(radical_contains(A.tower.current.J, mapped));
  }
}

TEST_CASE("swan_scan finds the cusp pair and nothing on seminormal curves") {
  auto cusp = variety({kCusp});
  auto hits = swan_scan(cusp, 2, {Rational(0), Rational(1)});
  bool found = false;
  for (const auto& h : hits)
    if (h.p == P("y") && h.q == P("x")) found = true;
  CHECK(found);

  VarietyPresentation A1;
  A1.vars = {"s"};
  A1.I = Ideal(1, {});
  CHECK(swan_scan(A1, 3, {Rational(0), Rational(1)}).empty());

  auto node = variety({kNode});
  CHECK(swan_scan(node, 2, {Rational(0), Rational(1)}).empty());
}

TEST_CASE("swan hits satisfy the defining identities") {
  auto cusp = variety({kCusp});
  auto hits = swan_scan(cusp, 2, {Rational(0), Rational(1)});
  for (const auto& h : hits) {
    CHECK(contains(cusp.I, h.p * h.p - h.q.pow(3)));
    CHECK(h.solved.kind == SwanResult::ProperlyRegulous);
  }
}

TEST_CASE("nullstellensatz witness on the affine line") {
  VarietyPresentation A1;
  A1.vars = {"s"};
  A1.I = Ideal(1, {});
  SeminormTower T = make_tower(A1);
  Polynomial s = parse_polynomial("s", {"s"});
  NullstellensatzWitness w =
      nullstellensatz_witness(T, s, {parse_polynomial("s^2", {"s"})});
  CHECK(w.n == 2);
  REQUIRE(w.cofactors.size() == 1);
  CHECK(w.cofactors[0] == parse_polynomial("1", {"s"}));
}

TEST_CASE("nullstellensatz witness on the cusp tower") {
  auto X = variety({kCusp});
  SeminormTower T = adjoin(make_tower(X), Fraction{P("y"), P("x")});
  std::vector<std::string> v3 = {"x", "y", "t1"};
  Polynomial f = parse_polynomial("t1", v3);
  NullstellensatzWitness w =
      nullstellensatz_witness(T, f, {parse_polynomial("x", v3)});
  CHECK(w.n == 2);
  // Re-substitution: t1^2 - h*x reduces to zero modulo the tower relations.
  Polynomial r = f * f - w.cofactors[0] * parse_polynomial("x", v3);
  CHECK(contains(T.current.J, r));
}

TEST_CASE("nullstellensatz rejects claims outside the radical") {
  auto X = variety({kCusp});
  SeminormTower T = make_tower(X);
  CHECK_THROWS_AS(
      nullstellensatz_witness(T, P("1"), {P("x")}),
      NotInRadical);
}

TEST_CASE("nullstellensatz distinguishes bound exhaustion from failure") {
  VarietyPresentation A1;
  A1.vars = {"s"};
  A1.I = Ideal(1, {});
  SeminormTower T = make_tower(A1);
  Polynomial s = parse_polynomial("s", {"s"});
  // s^20 needs n = 20 > bound = 3.
  CHECK_THROWS_AS(nullstellensatz_witness(
                      T, s, {parse_polynomial("s^20", {"s"})}, 3),
                  NotFoundWithinBound);
}

TEST_CASE("nullstellensatz cofactors re-substitute on random instances") {
  std::mt19937 rng(60901);
  int done = 0;
  for (int it = 0; it < 30 && done < 10; ++it) {
    int nvars = 2;
    Polynomial b1 = oracle::random_poly(rng, nvars, 2, 2, 2);
    Polynomial b2 = oracle::random_poly(rng, nvars, 2, 2, 2);
    if (b1.is_zero() || b2.is_zero()) continue;
    int e = 1 + (it % 2);
    std::vector<Polynomial> gens = {b1.pow(e), b2};
    Polynomial f = b1 * oracle::random_poly(rng, nvars, 1, 2, 2) +
                   b2 * oracle::random_poly(rng, nvars, 1, 2, 2);
    if (f.is_zero()) continue;
    VarietyPresentation A;
    A.vars = XY;
    A.I = Ideal(2, {});
    SeminormTower T = make_tower(A);
    NullstellensatzWitness w;
    try {
      w = nullstellensatz_witness(T, f, gens, 12);
    } catch (const NotFoundWithinBound&) {
      continue;
    }
    Polynomial back(nvars);
    for (size_t i = 0; i < gens.size(); ++i)
      back = back + w.cofactors[i] * gens[i];
    CHECK(back == f.pow(w.n));
    ++done;
  }
  CHECK(done >= 10);
}
