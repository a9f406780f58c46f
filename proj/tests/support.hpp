#pragma once

// Fixtures and random generators shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "thf/classic.hpp"
#include "thf/hesitant.hpp"
#include "thf/oracle.hpp"
#include "thf/thfe.hpp"

namespace thf::testing {

inline Rational q(const std::string& text) { return Rational::parse(text); }

inline Thfe h(std::initializer_list<const char*> degrees) {
  std::vector<Rational> raw;
  for (const char* d : degrees) raw.push_back(Rational::parse(d));
  return Thfe::canonicalize(raw);
}

inline Word word(const std::string& chars) {
  Word w;
  for (char c : chars) w.emplace_back(1, c);
  return w;
}

inline Alphabet unary() { return Alphabet({"a"}); }

/// Two states over {a}: ψ(q0,a,q0)={1/5}, ψ(q0,a,q1)={1/2,9/10},
/// ψ(q1,a,q0)={2/5}, ψ(q1,a,q1)={7/10}; F(q0)={1/10}, F(q1)={3/5,1}.
inline Nthfa fixture_m1() {
  return Nthfa(StateTable({"q0", "q1"}), unary(),
               {{0, 0, 0, h({"1/5"})},
                {0, 0, 1, h({"1/2", "9/10"})},
                {1, 0, 0, h({"2/5"})},
                {1, 0, 1, h({"7/10"})}},
               0, {h({"1/10"}), h({"3/5", "1"})});
}

/// δ(q0,a)={q0,q1}, δ(q1,a)=∅; F(q0)={1/5}, F(q1)={2/5,4/5}.
inline Cnthfa fixture_n1() {
  return Cnthfa(StateTable({"q0", "q1"}), unary(), {{0, 1}, {}}, 0, {h({"1/5"}), h({"2/5", "4/5"})});
}

/// Two-state cycle over {a}; F(q0)={0}, F(q1)={1/3,1}.
inline Cdthfa fixture_cycle() {
  return Cdthfa(StateTable({"q0", "q1"}), unary(), {1, 0}, 0, {h({"0"}), h({"1/3", "1"})});
}

/// Zero-one weighted automaton over {a,b}.
inline Nthfa fixture_zero_one() {
  return Nthfa(StateTable({"s", "t", "u"}), Alphabet({"a", "b"}),
               {{0, 0, 1, Thfe::one()}, {0, 1, 0, Thfe::one()}, {1, 0, 1, Thfe::one()},
                {1, 0, 2, Thfe::one()}, {2, 1, 0, Thfe::one()}},
               0, {h({"1/4"}), h({"1/2", "3/4"}), h({"1"})});
}

inline std::vector<Rational> default_pool() { return {q("0"), q("1/4"), q("1/2"), q("3/4"), q("1")}; }

/// Every rational p/q with q ≤ max_den in [0,1].
inline std::vector<Rational> denominator_pool(int max_den) {
  std::vector<Rational> out;
  for (int d = 1; d <= max_den; ++d)
    for (int n = 0; n <= d; ++n) out.emplace_back(n, d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Generator {
  explicit Generator(std::uint64_t seed, std::vector<Rational> pool = default_pool())
      : rng(seed), pool(std::move(pool)) {}

  std::mt19937_64 rng;
  std::vector<Rational> pool;
  std::size_t max_states = 3;
  std::size_t max_symbols = 2;
  std::size_t max_cardinality = 3;
  /// Probability that a weight / transition is present.
  double density = 0.6;

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  Thfe thfe() {
    std::vector<Rational> raw;
    const std::size_t n = uniform(1, max_cardinality);
    for (std::size_t i = 0; i < n; ++i) raw.push_back(pool[uniform(0, pool.size() - 1)]);
    return Thfe::canonicalize(raw);
  }

  Thfe degenerate() { return Thfe{pool[uniform(0, pool.size() - 1)]}; }

  Alphabet alphabet() {
    const std::vector<std::string> all = {"a", "b", "c"};
    return Alphabet({all.begin(), all.begin() + static_cast<long>(uniform(1, max_symbols))});
  }

  StateTable states(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    return StateTable(std::move(names));
  }

  Nthfa nthfa(const Alphabet& sigma, bool degenerate_only = false) {
    const std::size_t n = uniform(1, max_states);
    std::vector<WeightedTransition> ts;
    for (StateId p = 0; p < n; ++p)
      for (SymbolId a = 0; a < sigma.size(); ++a)
        for (StateId r = 0; r < n; ++r)
          if (coin(density)) ts.push_back({p, a, r, degenerate_only ? degenerate() : thfe()});
    std::vector<Thfe> finals;
    for (std::size_t i = 0; i < n; ++i) finals.push_back(degenerate_only ? degenerate() : thfe());
    return Nthfa(states(n), sigma, std::move(ts), uniform(0, n - 1), std::move(finals));
  }
  Nthfa nthfa() { return nthfa(alphabet()); }

  Nthfa zero_one_nthfa(const Alphabet& sigma) {
    const std::size_t n = uniform(1, max_states);
    std::vector<WeightedTransition> ts;
    for (StateId p = 0; p < n; ++p)
      for (SymbolId a = 0; a < sigma.size(); ++a)
        for (StateId r = 0; r < n; ++r)
          if (coin(0.4)) ts.push_back({p, a, r, Thfe::one()});
    std::vector<Thfe> finals;
    for (std::size_t i = 0; i < n; ++i) finals.push_back(thfe());
    return Nthfa(states(n), sigma, std::move(ts), 0, std::move(finals));
  }

  Cnthfa cnthfa(const Alphabet& sigma) {
    const std::size_t n = uniform(1, max_states);
    std::vector<StateSet> delta(n * sigma.size());
    for (auto& row : delta)
      for (StateId r = 0; r < n; ++r)
        if (coin(0.4)) row.push_back(r);
    std::vector<Thfe> finals;
    for (std::size_t i = 0; i < n; ++i) finals.push_back(thfe());
    return Cnthfa(states(n), sigma, std::move(delta), uniform(0, n - 1), std::move(finals));
  }

  Cdthfa cdthfa(const Alphabet& sigma) {
    const std::size_t n = uniform(1, max_states);
    std::vector<StateId> delta(n * sigma.size());
    for (auto& t : delta) t = uniform(0, n - 1);
    std::vector<Thfe> finals;
    for (std::size_t i = 0; i < n; ++i) finals.push_back(thfe());
    return Cdthfa(states(n), sigma, std::move(delta), uniform(0, n - 1), std::move(finals));
  }

  Nfa nfa(const Alphabet& sigma) {
    const std::size_t n = uniform(1, max_states + 1);
    std::vector<StateSet> delta(n * sigma.size());
    for (auto& row : delta)
      for (StateId r = 0; r < n; ++r)
        if (coin(0.35)) row.push_back(r);
    std::vector<bool> finals(n);
    for (std::size_t i = 0; i < n; ++i) finals[i] = coin(0.4);
    return Nfa(states(n), sigma, std::move(delta), 0, std::move(finals));
  }
};

/// Every word of length ≤ max_length, shortest first.
inline std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_length) {
  std::vector<Word> out;
  WordStream stream(sigma, max_length);
  while (auto w = stream.next()) out.push_back(sigma.decode(*w));
  return out;
}

}  // namespace thf::testing
