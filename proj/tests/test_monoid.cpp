#include "grlocal/monoid.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace grlocal;

namespace {
Degree nv(std::vector<std::uint32_t> v) { return Degree::nat(std::move(v)); }
}  // namespace

TEST_CASE("compose adds natvec degrees componentwise") {
  Monoid m = Monoid::nat_vec(2);
  CHECK(m.compose(nv({1, 0}), nv({0, 1})) == nv({1, 1}));
  CHECK(m.compose(nv({0, 0}), nv({2, 3})) == nv({2, 3}));
}

TEST_CASE("compose concatenates words and is order sensitive") {
  Monoid m = Monoid::free_word("xy");
  CHECK(m.compose(Degree::word("xy"), Degree::word("")) == Degree::word("xy"));
  CHECK(m.compose(Degree::word("x"), Degree::word("y")) == Degree::word("xy"));
  CHECK(m.compose(Degree::word("y"), Degree::word("x")) == Degree::word("yx"));
  CHECK(m.compose(Degree::word("x"), Degree::word("y")) !=
        m.compose(Degree::word("y"), Degree::word("x")));
}

TEST_CASE("compose rejects kind mismatch") {
  Monoid m = Monoid::nat_vec(2);
  CHECK_THROWS_AS(m.compose(nv({1, 0}), Degree::word("x")), PreconditionError);
  CHECK_THROWS_AS(m.compose(nv({1, 0}), nv({1})), PreconditionError);
}

TEST_CASE("grlex chain on N^2") {
  Monoid m = Monoid::nat_vec(2, DegreeOrder::GrLex);
  CHECK(m.compare(nv({0, 0}), nv({0, 1})) < 0);
  CHECK(m.compare(nv({0, 1}), nv({1, 0})) < 0);
  CHECK(m.compare(nv({1, 0}), nv({1, 1})) < 0);
  CHECK(m.compare(nv({1, 1}), nv({1, 1})) == 0);
}

TEST_CASE("deglex chain on words") {
  Monoid m = Monoid::free_word("xy");
  CHECK(m.compare(Degree::word(""), Degree::word("x")) < 0);
  CHECK(m.compare(Degree::word("x"), Degree::word("y")) < 0);
  CHECK(m.compare(Degree::word("y"), Degree::word("xx")) < 0);
  CHECK(m.compare(Degree::word("yx"), Degree::word("yx")) == 0);
}

TEST_CASE("enumerate_upto lists the window in increasing order") {
  Monoid m = Monoid::nat_vec(2, DegreeOrder::GrLex);
  auto win = m.enumerate_upto(nv({1, 1}));
  std::vector<Degree> expect{nv({0, 0}), nv({0, 1}), nv({1, 0}), nv({1, 1})};
  CHECK(win == expect);

  Monoid w = Monoid::free_word("xy");
  auto wwin = w.enumerate_upto(Degree::word("yy"));
  std::vector<Degree> wexpect{Degree::word(""),   Degree::word("x"),
                              Degree::word("y"),  Degree::word("xx"),
                              Degree::word("xy"), Degree::word("yx"),
                              Degree::word("yy")};
  CHECK(wwin == wexpect);

  Monoid one = Monoid::nat_vec(2);
  auto only_e = one.enumerate_upto(nv({0, 0}));
  CHECK(only_e == std::vector<Degree>{nv({0, 0})});
}

TEST_CASE("factorizations are complete ordered splittings") {
  Monoid m = Monoid::nat_vec(2);
  auto f = m.factorizations(nv({1, 1}));
  std::set<std::pair<Degree, Degree>> got(f.begin(), f.end());
  std::set<std::pair<Degree, Degree>> expect{
      {nv({0, 0}), nv({1, 1})}, {nv({0, 1}), nv({1, 0})},
      {nv({1, 0}), nv({0, 1})}, {nv({1, 1}), nv({0, 0})}};
  CHECK(got == expect);

  Monoid w = Monoid::free_word("xy");
  auto wf = w.factorizations(Degree::word("xy"));
  std::vector<std::pair<Degree, Degree>> wexpect{
      {Degree::word(""), Degree::word("xy")},
      {Degree::word("x"), Degree::word("y")},
      {Degree::word("xy"), Degree::word("")}};
  CHECK(wf == wexpect);
}

TEST_CASE("factorizations always contain the neutral splits") {
  Monoid m = Monoid::nat_vec(3);
  Degree g = nv({2, 0, 1});
  auto f = m.factorizations(g);
  bool left = false, right = false;
  for (auto& [a, b] : f) {
    if (a == m.neutral() && b == g) left = true;
    if (a == g && b == m.neutral()) right = true;
  }
  CHECK(left);
  CHECK(right);
}

TEST_CASE("cancelation holds for random degrees") {
  testutil::Rng rng(42);
  Monoid m = Monoid::nat_vec(2);
  Monoid w = Monoid::free_word("xy");
  for (int iter = 0; iter < 200; ++iter) {
    Degree a = nv({(std::uint32_t)rng.next(4), (std::uint32_t)rng.next(4)});
    Degree b = nv({(std::uint32_t)rng.next(4), (std::uint32_t)rng.next(4)});
    Degree c = nv({(std::uint32_t)rng.next(4), (std::uint32_t)rng.next(4)});
    CHECK((m.compose(a, b) == m.compose(a, c)) == (b == c));
    CHECK((m.compose(b, a) == m.compose(c, a)) == (b == c));
    auto rand_word = [&] {
      std::string s;
      for (std::uint64_t i = rng.next(4); i > 0; --i) s += rng.next(2) ? 'y' : 'x';
      return Degree::word(s);
    };
    Degree wa = rand_word(), wb = rand_word(), wc = rand_word();
    CHECK((w.compose(wa, wb) == w.compose(wa, wc)) == (wb == wc));
    CHECK((w.compose(wb, wa) == w.compose(wc, wa)) == (wb == wc));
  }
}

TEST_CASE("orders are translation invariant and have e smallest") {
  for (DegreeOrder ord : {DegreeOrder::GrLex, DegreeOrder::GrRevLex, DegreeOrder::Lex}) {
    Monoid m = Monoid::nat_vec(2, ord);
    auto win = m.enumerate_upto(nv({2, 2}));
    for (const auto& a : win) {
      CHECK(m.compare(m.neutral(), a) <= 0);
      for (const auto& b : win)
        for (const auto& c : win) {
          if (m.less(a, b)) {
            CHECK(m.less(m.compose(c, a), m.compose(c, b)));
            CHECK(m.less(m.compose(a, c), m.compose(b, c)));
          }
        }
    }
  }
  Monoid w = Monoid::free_word("xy");
  auto win = w.enumerate_upto(Degree::word("yy"));
  for (const auto& a : win) {
    CHECK(w.compare(w.neutral(), a) <= 0);
    for (const auto& b : win)
      for (const auto& c : win) {
        if (w.less(a, b)) {
          CHECK(w.less(w.compose(c, a), w.compose(c, b)));
          CHECK(w.less(w.compose(a, c), w.compose(b, c)));
        }
      }
  }
}

TEST_CASE("factorizations agree with brute force pairing over the window") {
  Monoid m = Monoid::nat_vec(2);
  Monoid w = Monoid::free_word("xy");
  for (const Degree& g : {nv({2, 1}), nv({0, 0}), nv({3, 0})}) {
    auto f = m.factorizations(g);
    for (auto& [a, b] : f) CHECK(m.compose(a, b) == g);
    std::set<std::pair<Degree, Degree>> got(f.begin(), f.end());
    CHECK(got.size() == f.size());
    auto win = m.enumerate_upto(g);
    for (const auto& a : win)
      for (const auto& b : win)
        if (m.compose(a, b) == g) CHECK(got.count({a, b}) == 1);
  }
  for (const Degree& g : {Degree::word("xyx"), Degree::word("")}) {
    auto f = w.factorizations(g);
    for (auto& [a, b] : f) CHECK(w.compose(a, b) == g);
    std::set<std::pair<Degree, Degree>> got(f.begin(), f.end());
    auto win = w.enumerate_upto(g);
    for (const auto& a : win)
      for (const auto& b : win)
        if (w.compose(a, b) == g) CHECK(got.count({a, b}) == 1);
  }
}

TEST_CASE("left and right factors solve degree equations uniquely") {
  Monoid w = Monoid::free_word("xy");
  Degree g = Degree::word("xyx");
  CHECK(w.left_factor(g, Degree::word("yx")) == Degree::word("x"));
  CHECK(w.left_factor(g, Degree::word("xy")) == std::nullopt);
  CHECK(w.right_factor(g, Degree::word("xy")) == Degree::word("x"));
  CHECK(w.right_factor(g, Degree::word("yx")) == std::nullopt);
  Monoid m = Monoid::nat_vec(2);
  CHECK(m.left_factor(nv({2, 1}), nv({1, 1})) == nv({1, 0}));
  CHECK(m.left_factor(nv({2, 1}), nv({3, 0})) == std::nullopt);
}

TEST_CASE("degree literals render in the file syntax") {
  Monoid m = Monoid::nat_vec(2);
  CHECK(m.show(nv({1, 0})) == "(1,0)");
  Monoid w = Monoid::free_word("xy");
  CHECK(w.show(Degree::word("yx")) == "\"yx\"");
  CHECK(w.show(Degree::word("")) == "\"\"");
}
