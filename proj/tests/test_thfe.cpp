#include <doctest.h>

#include <set>

#include "support.hpp"
#include "thf/errors.hpp"

using namespace thf;
using namespace thf::testing;

namespace {

/// Closure by naive fixpoint over all ordered pairs; independent of the worklist.
std::set<Thfe> closure_oracle(std::set<Thfe> current) {
  while (true) {
    std::set<Thfe> next = current;
    for (const auto& x : current)
      for (const auto& y : current) {
        next.insert(inf_combination(x, y));
        next.insert(sup_combination(x, y));
      }
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace

TEST_CASE("canonicalize sorts and deduplicates") {
  CHECK(h({"1/2", "1/2", "1/4"}) == h({"1/4", "1/2"}));
  CHECK(h({"1"}).size() == 1);
  const Thfe x = h({"9/10", "3/5", "3/5", "0"});
  REQUIRE(x.size() == 3);
  CHECK(x.degrees()[0] == q("0"));
  CHECK(x.degrees()[1] == q("3/5"));
  CHECK(x.degrees()[2] == q("9/10"));
  CHECK(Thfe::canonicalize(x.degrees()) == x);
  CHECK_THROWS_AS(Thfe::canonicalize(std::vector<Rational>{}), Error);
}

TEST_CASE("inf- and sup-combination") {
  const Thfe x = h({"3/10", "7/10"});
  CHECK(inf_combination(x, h({"1/2"})) == h({"3/10", "1/2"}));
  CHECK(sup_combination(x, h({"1/2"})) == h({"1/2", "7/10"}));
  CHECK(inf_combination(x, Thfe::one()) == x);
  CHECK(inf_combination(x, Thfe::zero()) == Thfe::zero());
  CHECK(sup_combination(x, Thfe::zero()) == x);
  CHECK(sup_combination(x, Thfe::one()) == Thfe::one());
}

TEST_CASE("n-ary sup-combination") {
  CHECK(sup_combination_n({}) == Thfe::zero());
  std::vector<Thfe> one = {h({"1/5"})};
  CHECK(sup_combination_n(one) == h({"1/5"}));
  std::vector<Thfe> three = {h({"1/5"}), h({"2/5"}), h({"3/10", "3/5"})};
  CHECK(sup_combination_n(three) == h({"2/5", "3/5"}));
}

TEST_CASE("leq") {
  CHECK(leq(h({"3/10"}), h({"3/10", "7/10"})));
  CHECK_FALSE(leq(h({"1/2"}), h({"3/10", "7/10"})));
  CHECK(leq(h({"3/10", "7/10"}), h({"3/10", "7/10"})));
  CHECK(leq(h({"3/10", "7/10"}), h({"7/10"})));
}

TEST_CASE("degenerate elements") {
  CHECK(is_degenerate(h({"1/2"})));
  CHECK_FALSE(is_degenerate(h({"0", "1"})));
  CHECK(is_degenerate(Thfe::one()));
}

TEST_CASE("generated closure") {
  CHECK(generated_closure({Thfe::zero(), Thfe::one()}) == std::set<Thfe>{Thfe::zero(), Thfe::one()});
  const Thfe x = h({"1/4", "3/4"});
  CHECK(generated_closure({x}) == std::set<Thfe>{x});
  CHECK(generated_closure({h({"1/4"}), h({"3/4"})}) == std::set<Thfe>{h({"1/4"}), h({"3/4"})});

  const std::set<Thfe> seed = {h({"1/4", "3/4"}), h({"1/2"}), h({"0", "1"})};
  const auto closed = generated_closure(seed);
  CHECK(closed == closure_oracle(seed));
  for (const auto& s : seed) CHECK(closed.contains(s));

  CHECK_THROWS_AS(generated_closure(seed, 3), Error);
}

TEST_CASE("generated closure agrees with the naive fixpoint on random seeds") {
  Generator gen(11);
  for (int i = 0; i < 60; ++i) {
    std::set<Thfe> seed;
    for (std::size_t k = gen.uniform(1, 4); k > 0; --k) seed.insert(gen.thfe());
    CHECK(generated_closure(seed) == closure_oracle(seed));
  }
}

TEST_CASE("monoid, annihilator and order laws on random elements") {
  Generator gen(7, denominator_pool(10));
  gen.max_cardinality = 4;
  for (int i = 0; i < 400; ++i) {
    const Thfe x = gen.thfe(), y = gen.thfe(), z = gen.thfe();
    CHECK(inf_combination(x, y) == inf_combination(y, x));
    CHECK(sup_combination(x, y) == sup_combination(y, x));
    CHECK(inf_combination(x, inf_combination(y, z)) == inf_combination(inf_combination(x, y), z));
    CHECK(sup_combination(x, sup_combination(y, z)) == sup_combination(sup_combination(x, y), z));
    CHECK(inf_combination(x, x) == x);
    CHECK(sup_combination(x, x) == x);
    CHECK(sup_combination(x, Thfe::one()) == Thfe::one());
    CHECK(inf_combination(x, Thfe::zero()) == Thfe::zero());
    CHECK(leq(Thfe::zero(), x));
    CHECK(leq(x, Thfe::one()));
    CHECK(leq(x, sup_combination(x, y)));
    CHECK(inf_combination(x, y).size() <= x.size() * y.size());
    const Thfe xy = inf_combination(x, y);
    for (const auto& d : xy.degrees()) {
      bool found = false;
      for (const auto& a : x.degrees())
        for (const auto& b : y.degrees()) found = found || d == min(a, b);
      CHECK(found);
    }
    if (leq(x, y) && leq(y, x)) CHECK(x == y);
    if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
    if (leq(x, y)) {
      CHECK(leq(sup_combination(x, z), sup_combination(y, z)));
      CHECK(leq(x, inf_combination(x, y)));
      CHECK(leq(x, sup_combination(x, y)));
    }
    if (leq(x, z) && leq(y, z)) CHECK(leq(sup_combination(x, y), z));
  }
}

TEST_CASE("leq restricted to degenerate elements is the numeric order") {
  const auto grid = denominator_pool(10);
  for (const auto& a : grid)
    for (const auto& b : grid) CHECK(leq(Thfe{a}, Thfe{b}) == (a <= b));
}

// Distributivity and ⊗-monotonicity only hold on degenerate elements.
TEST_CASE("distributivity fails on hesitant elements") {
  const Thfe x = h({"0", "1"}), y = h({"1/2"}), z = h({"3/10"});
  CHECK(inf_combination(x, sup_combination(y, z)) == h({"0", "1/2"}));
  CHECK(sup_combination(inf_combination(x, y), inf_combination(x, z)) == h({"0", "3/10", "1/2"}));

  const Thfe u = h({"0", "1/2"}), v = h({"0"}), w = h({"1/4"});
  CHECK(sup_combination(u, inf_combination(v, w)) == h({"0", "1/2"}));
  CHECK(inf_combination(sup_combination(u, v), sup_combination(u, w)) == h({"0", "1/4", "1/2"}));
}

TEST_CASE("inf-combination is not monotone for leq on hesitant elements") {
  const Thfe x = h({"1/4"}), y = h({"1/2"}), z = h({"0", "1/2"});
  REQUIRE(leq(x, y));
  CHECK(inf_combination(x, z) == h({"0", "1/4"}));
  CHECK(inf_combination(y, z) == h({"0", "1/2"}));
  CHECK_FALSE(leq(inf_combination(x, z), inf_combination(y, z)));
}

TEST_CASE("distributivity and monotonicity hold on degenerate elements") {
  Generator gen(3, denominator_pool(10));
  for (int i = 0; i < 300; ++i) {
    const Thfe x = gen.degenerate(), y = gen.degenerate(), z = gen.degenerate();
    CHECK(inf_combination(x, sup_combination(y, z)) == sup_combination(inf_combination(x, y), inf_combination(x, z)));
    CHECK(sup_combination(x, inf_combination(y, z)) == inf_combination(sup_combination(x, y), sup_combination(x, z)));
    if (leq(x, y)) CHECK(leq(inf_combination(x, z), inf_combination(y, z)));
  }
}

TEST_CASE("printing") {
  CHECK(to_string(h({"1/2", "9/10", "3/5"})) == "{1/2, 3/5, 9/10}");
  CHECK(to_string(Thfe::zero()) == "{0}");
}
