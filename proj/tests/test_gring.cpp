#include "grlocal/gring.hpp"

#include <set>

#include "doctest.h"
#include "test_rings.hpp"

using namespace grlocal;
using namespace grlocal::testrings;

namespace {

int rank(const GradedRing& R, const Degree& g) {
  return static_cast<int>(R.surviving_words(g).size());
}

HomogeneousElement word_elt(const GradedRing& R, const Degree& g, const GenWord& w) {
  RowVec v(R.word_count(g));
  int idx = R.word_index(g, w);
  REQUIRE(idx >= 0);
  v[idx] = R.coeff().one();
  return R.element(g, std::move(v));
}

}  // namespace

TEST_CASE("truncated polynomial ring has the expected component ranks") {
  GradedRing R = dual_numbers_f2(4);
  // Brute span: in degree d the relation multiples are x^a (x*x) x^b, which
  // kill everything from degree 2 on.
  std::vector<int> ranks;
  for (std::uint32_t d = 0; d <= 4; ++d) ranks.push_back(rank(R, n1(d)));
  CHECK(ranks == std::vector<int>{1, 1, 0, 0, 0});
  CHECK(R.visibly_bounded());
}

TEST_CASE("monomial algebra components strike words containing the relation") {
  GradedRing R = monomial_xy(3);
  CHECK(rank(R, n1(2)) == 3);
  std::set<GenWord> basis2;
  for (int i : R.surviving_words(n1(2))) basis2.insert(R.words(n1(2))[i]);
  // Surviving degree-2 words: xx, yx, yy.
  CHECK(basis2 == std::set<GenWord>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(rank(R, n1(3)) == 4);
  std::set<GenWord> basis3;
  for (int i : R.surviving_words(n1(3))) basis3.insert(R.words(n1(3))[i]);
  CHECK(basis3 == std::set<GenWord>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  CHECK_FALSE(R.visibly_bounded());
}

TEST_CASE("commutator reduction collapses mixed monomials") {
  GradedRing R = poly2_f2(2, 2);
  CHECK(rank(R, n2(1, 1)) == 1);
  CHECK(rank(R, n2(2, 1)) == 1);
  CHECK(rank(R, n2(0, 2)) == 1);
}

TEST_CASE("multiplication follows the relations") {
  GradedRing R = dual_numbers_f2(4);
  HomogeneousElement x = word_elt(R, n1(1), {0});
  CHECK(R.is_zero(R.multiply(x, x)));
  HomogeneousElement onexx = R.multiply(R.one(), x);
  CHECK(onexx.degree == x.degree);
  CHECK(R.coeff().equal(onexx.coords[0], x.coords[0]));

  GradedRing M = monomial_xy(3);
  HomogeneousElement mx = word_elt(M, n1(1), {0});
  HomogeneousElement my = word_elt(M, n1(1), {1});
  CHECK(M.is_zero(M.multiply(mx, my)));
  HomogeneousElement yx = M.multiply(my, mx);
  CHECK_FALSE(M.is_zero(yx));
  CHECK(yx.degree == n1(2));
}

TEST_CASE("products beyond the bound raise a distinct truncation error") {
  GradedRing R = dual_numbers_f2(2);
  HomogeneousElement x = word_elt(R, n1(1), {0});
  HomogeneousElement x2 = R.multiply(x, x);  // degree 2, inside
  CHECK(R.is_zero(x2));
  CHECK_THROWS_AS(R.multiply(x2, x), TruncationError);
  // A truncation error is also a precondition error, but not vice versa.
  CHECK_THROWS_AS(R.multiply(x2, x), PreconditionError);
}

TEST_CASE("maximal graded ideal componentwise description") {
  GradedRing R = dual_numbers_f2(4);
  CHECK(R.mideal_rows(n1(0)).rows() == 0);  // field coefficients: m = 0
  CHECK(R.mideal_rows(n1(1)).rows() == 1);

  GradedRing Z = z4x(2);
  ScalarMatrix m0 = Z.mideal_rows(n1(0));
  REQUIRE(m0.rows() == 1);
  CHECK(m0.at(0, 0).rep() == 2);
  CHECK(Z.mideal_rows(n1(1)).rows() == 1);
  CHECK(Z.mideal_support() ==
        std::vector<Degree>{n1(0), n1(1), n1(2)});
}

TEST_CASE("locality axioms hold on the stock examples") {
  for (const GradedRing& R :
       {dual_numbers_f2(3), monomial_xy(3), z4x(2), exterior_f3(3),
        trivial_ring(CoeffRing::prime_field(2)), word_ring("yy")}) {
    LocalityReport rep = R.check_local_axioms(20, 1);
    CHECK(rep.ok());
    CHECK(rep.checked_units > 0);
  }
  GradedRing P = poly2_f2(2, 2);
  CHECK(P.check_local_axioms(20, 1).ok());

  RingPresentation q;
  q.monoid = Monoid::nat_vec(1);
  q.coeff = CoeffRing::rationals();
  q.bound = n1(2);
  q.commutative = true;
  q.generators = {{"x", n1(1)}, {"y", n1(1)}};
  CHECK(GradedRing::build(q).check_local_axioms(25, 3).ok());
}

TEST_CASE("the trivial ring is its own residue ring") {
  GradedRing R = trivial_ring(CoeffRing::prime_field(2));
  CHECK(R.mideal_rows(n1(0)).rows() == 0);
  GradedRing D = R.residue_ring();
  CHECK(D.coeff().kind() == CoeffKind::PrimeField);
  CHECK(rank(D, n1(0)) == 1);
}

TEST_CASE("residue ring is concentrated in degree e") {
  GradedRing Z = z4x(2);
  GradedRing D = Z.residue_ring();
  CHECK(D.coeff().prime() == 2);
  CHECK(D.coeff().kind() == CoeffKind::PrimeField);
  CHECK(rank(D, n1(0)) == 1);
  CHECK(rank(D, n1(1)) == 0);
  CHECK(rank(D, n1(2)) == 0);

  // Projection: zero beyond degree e, reduction mod p at e.
  RowVec at_e{Z.coeff().from_int(3)};
  CHECK(Z.project_to_residue(n1(0), at_e)[0].rep() == 1);
  RowVec at_one(Z.word_count(n1(1)));
  at_one[0] = Z.coeff().one();
  CHECK(Z.project_to_residue(n1(1), at_one).empty());
}

TEST_CASE("multiplication tables are associative and unital within the bound") {
  for (const GradedRing& R : {monomial_xy(3), exterior_f3(3), z4x(3), word_ring("yy")}) {
    const Monoid& mono = R.monoid();
    for (const Degree& g1 : R.window())
      for (const Degree& g2 : R.window()) {
        if (!R.in_window(mono.compose(g1, g2))) continue;
        for (const Degree& g3 : R.window()) {
          Degree g123 = mono.compose(mono.compose(g1, g2), g3);
          if (!R.in_window(g123)) continue;
          for (int i = 0; i < R.word_count(g1); ++i)
            for (int j = 0; j < R.word_count(g2); ++j)
              for (int l = 0; l < R.word_count(g3); ++l) {
                HomogeneousElement a = word_elt(R, g1, R.words(g1)[i]);
                HomogeneousElement b = word_elt(R, g2, R.words(g2)[j]);
                HomogeneousElement c = word_elt(R, g3, R.words(g3)[l]);
                HomogeneousElement lhs = R.multiply(R.multiply(a, b), c);
                HomogeneousElement rhs = R.multiply(a, R.multiply(b, c));
                CHECK(mat_equal(R.coeff(),
                                [&] {
                                  ScalarMatrix m;
                                  m.set_cols((int)lhs.coords.size());
                                  m.append_row(lhs.coords);
                                  return m;
                                }(),
                                [&] {
                                  ScalarMatrix m;
                                  m.set_cols((int)rhs.coords.size());
                                  m.append_row(rhs.coords);
                                  return m;
                                }()));
              }
        }
        // Unitality.
        for (int i = 0; i < R.word_count(g1); ++i) {
          HomogeneousElement a = word_elt(R, g1, R.words(g1)[i]);
          HomogeneousElement l = R.multiply(R.one(), a);
          HomogeneousElement r = R.multiply(a, R.one());
          for (size_t c = 0; c < a.coords.size(); ++c) {
            CHECK(R.coeff().equal(l.coords[c], a.coords[c]));
            CHECK(R.coeff().equal(r.coords[c], a.coords[c]));
          }
        }
      }
  }
}

TEST_CASE("presentation validation rejects bad input") {
  RingPresentation p;
  p.monoid = Monoid::nat_vec(1);
  p.coeff = CoeffRing::prime_field(2);
  p.bound = n1(2);
  p.generators = {{"x", n1(0)}};
  CHECK_THROWS_AS(GradedRing::build(p), PreconditionError);

  p.generators = {{"x", n1(1)}, {"y", n1(2)}};
  RelPoly bad{n1(2), {{p.coeff.one(), GenWord{0, 0}}, {p.coeff.one(), GenWord{1, 0}}}};
  p.relations = {bad};
  CHECK_THROWS_AS(GradedRing::build(p), PreconditionError);

  p.relations.clear();
  p.bound = Degree::word("xx");
  CHECK_THROWS_AS(GradedRing::build(p), PreconditionError);
}

TEST_CASE("word-graded ring separates degrees by words") {
  GradedRing R = word_ring("yy");
  CHECK(rank(R, Degree::word("xy")) == 1);
  CHECK(rank(R, Degree::word("yx")) == 1);
  HomogeneousElement a = word_elt(R, Degree::word("x"), {0});
  HomogeneousElement b = word_elt(R, Degree::word("y"), {1});
  HomogeneousElement ab = R.multiply(a, b);
  CHECK(ab.degree == Degree::word("xy"));
  CHECK_FALSE(R.is_zero(ab));
}

TEST_CASE("homogeneity of products within the window") {
  GradedRing R = poly2_f2(2, 2);
  for (const Degree& g1 : R.window())
    for (const Degree& g2 : R.window()) {
      Degree gp = R.monoid().compose(g1, g2);
      if (!R.in_window(gp)) continue;
      for (int i = 0; i < R.word_count(g1); ++i)
        for (int j = 0; j < R.word_count(g2); ++j) {
          HomogeneousElement prod =
              R.multiply(word_elt(R, g1, R.words(g1)[i]), word_elt(R, g2, R.words(g2)[j]));
          CHECK(prod.degree == gp);
        }
    }
}
