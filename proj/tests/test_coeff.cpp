#include "grlocal/coeff.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace grlocal;

namespace {

ScalarMatrix from_ints(const CoeffRing& ring, std::vector<std::vector<long long>> rows) {
  ScalarMatrix m;
  if (!rows.empty()) m.set_cols(static_cast<int>(rows[0].size()));
  for (auto& r : rows) {
    RowVec row;
    for (long long v : r) row.push_back(ring.from_int(v));
    m.append_row(std::move(row));
  }
  return m;
}

RowVec vec_from_ints(const CoeffRing& ring, std::vector<long long> v) {
  RowVec out;
  for (long long x : v) out.push_back(ring.from_int(x));
  return out;
}

// Exhaustive element list of ring^n (finite kinds, small n).
std::vector<RowVec> all_vectors(const CoeffRing& ring, int n) {
  std::vector<RowVec> out{RowVec()};
  for (int i = 0; i < n; ++i) {
    std::vector<RowVec> next;
    for (const auto& v : out)
      for (std::uint64_t e = 0; e < ring.size(); ++e) {
        RowVec w = v;
        w.push_back(ring.nth(e));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::uint64_t> reps(const CoeffRing&, const RowVec& v) {
  std::vector<std::uint64_t> out;
  for (const auto& s : v) out.push_back(s.rep());
  return out;
}

}  // namespace

TEST_CASE("units are exactly the elements outside the maximal ideal") {
  CoeffRing q = CoeffRing::rationals();
  CHECK(q.is_unit(q.from_rational(Rational(5, 3))));
  CHECK_FALSE(q.is_unit(q.zero()));

  CoeffRing z4 = CoeffRing::prime_power(2, 2);
  CHECK_FALSE(z4.is_unit(z4.from_int(2)));
  CHECK(z4.is_unit(z4.from_int(3)));
  CHECK_FALSE(z4.is_unit(z4.zero()));

  CoeffRing f5 = CoeffRing::prime_field(5);
  CHECK_FALSE(f5.is_unit(f5.zero()));
}

TEST_CASE("inverse values match exhaustive search") {
  CoeffRing f5 = CoeffRing::prime_field(5);
  // Oracle: scan all of F5 for the inverse of 2.
  std::uint64_t found = 0;
  for (std::uint64_t c = 0; c < 5; ++c)
    if (f5.equal(f5.mul(f5.from_int(2), f5.nth(c)), f5.one())) found = c;
  CHECK(found == 3);
  CHECK(f5.inverse(f5.from_int(2)).rep() == 3);

  CoeffRing z4 = CoeffRing::prime_power(2, 2);
  found = 0;
  for (std::uint64_t c = 0; c < 4; ++c)
    if (z4.equal(z4.mul(z4.from_int(3), z4.nth(c)), z4.one())) found = c;
  CHECK(found == 3);
  CHECK(z4.inverse(z4.from_int(3)).rep() == 3);

  CHECK(z4.inverse(z4.one()).rep() == 1);
  CHECK_THROWS_AS(z4.inverse(z4.from_int(2)), PreconditionError);

  // Every unit in every small modular ring has a two-sided inverse.
  for (const CoeffRing& r : {CoeffRing::prime_field(3), CoeffRing::prime_power(2, 3),
                             CoeffRing::prime_power(3, 2)}) {
    for (std::uint64_t i = 0; i < r.size(); ++i) {
      Scalar s = r.nth(i);
      if (!r.is_unit(s)) continue;
      CHECK(r.equal(r.mul(s, r.inverse(s)), r.one()));
    }
  }
}

TEST_CASE("residue is a ring homomorphism onto the residue field") {
  CoeffRing z4 = CoeffRing::prime_power(2, 2);
  CoeffRing f2 = z4.residue_ring();
  CHECK(f2.kind() == CoeffKind::PrimeField);
  CHECK(z4.residue(z4.from_int(2)).rep() == 0);
  CHECK(z4.residue(z4.from_int(3)).rep() == 1);

  CoeffRing f5 = CoeffRing::prime_field(5);
  CHECK(f5.residue(f5.from_int(4)).rep() == 4);

  for (const CoeffRing& r : {CoeffRing::prime_power(2, 2), CoeffRing::prime_power(3, 2)}) {
    CoeffRing d = r.residue_ring();
    for (std::uint64_t a = 0; a < r.size(); ++a)
      for (std::uint64_t b = 0; b < r.size(); ++b) {
        Scalar sa = r.nth(a), sb = r.nth(b);
        CHECK(d.equal(r.residue(r.add(sa, sb)), d.add(r.residue(sa), r.residue(sb))));
        CHECK(d.equal(r.residue(r.mul(sa, sb)), d.mul(r.residue(sa), r.residue(sb))));
      }
  }
}

TEST_CASE("left kernel matches the spec examples") {
  CoeffRing f2 = CoeffRing::prime_field(2);
  ScalarMatrix k = left_kernel(f2, from_ints(f2, {{1}, {1}}));
  REQUIRE(k.rows() == 1);
  CHECK(reps(f2, k.row(0)) == std::vector<std::uint64_t>{1, 1});

  CoeffRing z4 = CoeffRing::prime_power(2, 2);
  // Oracle: v*2 == 0 mod 4 exactly for v in {0, 2}.
  std::set<std::uint64_t> brute;
  for (std::uint64_t v = 0; v < 4; ++v)
    if ((v * 2) % 4 == 0) brute.insert(v);
  CHECK(brute == std::set<std::uint64_t>{0, 2});
  ScalarMatrix kz = left_kernel(z4, from_ints(z4, {{2}}));
  REQUIRE(kz.rows() == 1);
  CHECK(kz.at(0, 0).rep() == 2);

  ScalarMatrix ki = left_kernel(f2, ScalarMatrix::identity(f2, 3));
  CHECK(ki.rows() == 0);
}

TEST_CASE("kernel rows annihilate and span the whole kernel") {
  testutil::Rng rng(2024);
  std::vector<CoeffRing> rings{CoeffRing::prime_field(2), CoeffRing::prime_field(3),
                               CoeffRing::prime_power(2, 2), CoeffRing::prime_power(2, 3),
                               CoeffRing::prime_power(3, 2)};
  for (const auto& ring : rings) {
    for (int iter = 0; iter < 25; ++iter) {
      int rows = 1 + static_cast<int>(rng.next(3));
      int cols = 1 + static_cast<int>(rng.next(3));
      ScalarMatrix M(rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) M.at(r, c) = ring.nth(rng.next(ring.size()));
      ScalarMatrix K = left_kernel(ring, M);
      for (int r = 0; r < K.rows(); ++r)
        CHECK(row_is_zero(ring, row_times_matrix(ring, K.row(r), M)));

      // Exhaustive kernel as a set, vs the set of row combinations of K.
      std::set<std::vector<std::uint64_t>> brute;
      for (const auto& v : all_vectors(ring, rows))
        if (row_is_zero(ring, row_times_matrix(ring, v, M))) brute.insert(reps(ring, v));
      std::set<std::vector<std::uint64_t>> spanned;
      for (const auto& c : all_vectors(ring, K.rows())) {
        RowVec v(rows, ring.zero());
        for (int r = 0; r < K.rows(); ++r) row_axpy(ring, v, c[r], K.row(r));
        spanned.insert(reps(ring, v));
      }
      if (K.rows() == 0) spanned.insert(reps(ring, RowVec(rows, ring.zero())));
      CHECK(brute == spanned);
    }
  }
}

TEST_CASE("solve matches the spec examples") {
  CoeffRing f2 = CoeffRing::prime_field(2);
  auto x = solve_left(f2, from_ints(f2, {{1, 1}}), vec_from_ints(f2, {1, 1}));
  REQUIRE(x.has_value());
  CHECK(reps(f2, *x) == std::vector<std::uint64_t>{1});

  CoeffRing z4 = CoeffRing::prime_power(2, 2);
  // Oracle: 2x mod 4 is in {0, 2}, so (1) is unreachable.
  std::set<std::uint64_t> reach;
  for (std::uint64_t v = 0; v < 4; ++v) reach.insert((2 * v) % 4);
  CHECK(reach == std::set<std::uint64_t>{0, 2});
  CHECK_FALSE(solve_left(z4, from_ints(z4, {{2}}), vec_from_ints(z4, {1})).has_value());

  auto zero = solve_left(z4, from_ints(z4, {{2, 1}, {0, 3}}), vec_from_ints(z4, {0, 0}));
  REQUIRE(zero.has_value());
  CHECK(row_is_zero(z4, row_times_matrix(z4, *zero, from_ints(z4, {{2, 1}, {0, 3}}))));
}

TEST_CASE("solve decides solvability exactly on random systems") {
  testutil::Rng rng(99);
  std::vector<CoeffRing> rings{CoeffRing::prime_field(2), CoeffRing::prime_power(2, 2),
                               CoeffRing::prime_power(3, 2), CoeffRing::rationals()};
  for (const auto& ring : rings) {
    for (int iter = 0; iter < 40; ++iter) {
      int rows = 1 + static_cast<int>(rng.next(3));
      int cols = 1 + static_cast<int>(rng.next(3));
      ScalarMatrix M(rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) M.at(r, c) = ring.from_int(rng.next_int(-4, 4));
      RowVec planted(rows);
      for (int r = 0; r < rows; ++r) planted[r] = ring.from_int(rng.next_int(-4, 4));
      RowVec b = row_times_matrix(ring, planted, M);
      auto x = solve_left(ring, M, b);
      REQUIRE(x.has_value());
      RowVec check = row_times_matrix(ring, *x, M);
      for (int c = 0; c < cols; ++c) CHECK(ring.equal(check[c], b[c]));
    }
  }
  // Over finite kinds, compare solvability against exhaustive search.
  for (const auto& ring : {CoeffRing::prime_field(2), CoeffRing::prime_power(2, 2)}) {
    for (int iter = 0; iter < 20; ++iter) {
      int rows = 1 + static_cast<int>(rng.next(2));
      int cols = 1 + static_cast<int>(rng.next(2));
      ScalarMatrix M(rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) M.at(r, c) = ring.nth(rng.next(ring.size()));
      RowVec b(cols);
      for (int c = 0; c < cols; ++c) b[c] = ring.nth(rng.next(ring.size()));
      bool brute = false;
      for (const auto& v : all_vectors(ring, rows)) {
        RowVec img = row_times_matrix(ring, v, M);
        bool eq = true;
        for (int c = 0; c < cols; ++c) eq = eq && ring.equal(img[c], b[c]);
        if (eq) brute = true;
      }
      CHECK(solve_left(ring, M, b).has_value() == brute);
    }
  }
}

TEST_CASE("a scalar is a unit iff 1 is solvable against it") {
  for (const auto& ring : {CoeffRing::prime_field(5), CoeffRing::prime_power(2, 2),
                           CoeffRing::prime_power(3, 2)}) {
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
      Scalar s = ring.nth(i);
      ScalarMatrix M(1, 1);
      M.at(0, 0) = s;
      CHECK(ring.is_unit(s) == solve_left(ring, M, RowVec{ring.one()}).has_value());
    }
  }
}

TEST_CASE("canonical forms are invariant under row operations") {
  testutil::Rng rng(7);
  std::vector<CoeffRing> rings{CoeffRing::prime_field(2), CoeffRing::prime_power(2, 2),
                               CoeffRing::prime_power(3, 2), CoeffRing::rationals()};
  for (const auto& ring : rings) {
    for (int iter = 0; iter < 30; ++iter) {
      int rows = 2 + static_cast<int>(rng.next(2));
      int cols = 2 + static_cast<int>(rng.next(3));
      ScalarMatrix M(rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) M.at(r, c) = ring.from_int(rng.next_int(-3, 3));
      ScalarMatrix H = howell_form(ring, M);

      // Shuffle rows, add multiples of one row to another, rescale by units.
      ScalarMatrix N = M;
      for (int ops = 0; ops < 6; ++ops) {
        int a = static_cast<int>(rng.next(rows));
        int b = static_cast<int>(rng.next(rows));
        switch (rng.next(3)) {
          case 0:
            std::swap(N.row(a), N.row(b));
            break;
          case 1:
            if (a != b) row_axpy(ring, N.row(a), ring.from_int(rng.next_int(-3, 3)), N.row(b));
            break;
          default: {
            Scalar u = ring.from_int(rng.next_int(1, 3));
            if (ring.is_unit(u)) N.row(a) = row_scale(ring, u, N.row(a));
            break;
          }
        }
      }
      ScalarMatrix H2 = howell_form(ring, N);
      CHECK(mat_equal(ring, H, H2));
      // Membership: every original row reduces to zero against the form.
      for (int r = 0; r < rows; ++r) CHECK(in_row_span(ring, H, M.row(r)));
    }
  }
}

TEST_CASE("reduce_row_mod yields one representative per coset") {
  CoeffRing z4 = CoeffRing::prime_power(2, 2);
  ScalarMatrix H = howell_form(z4, from_ints(z4, {{2, 2}, {0, 1}}));
  // All vectors in the same coset share a canonical representative.
  for (const auto& v : all_vectors(z4, 2)) {
    RowVec canon = reduce_row_mod(z4, H, v);
    for (const auto& c : all_vectors(z4, H.rows())) {
      RowVec w = v;
      for (int r = 0; r < H.rows(); ++r) row_axpy(z4, w, c[r], H.row(r));
      CHECK(reps(z4, reduce_row_mod(z4, H, w)) == reps(z4, canon));
    }
  }
}
