#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "thf/rational.hpp"

namespace thf {

inline constexpr std::size_t kDefaultClosureBudget = 100000;

/// Typical hesitant fuzzy element: a finite non-empty set of degrees, stored
/// strictly ascending so that structural equality is set equality.
class Thfe {
public:
  /// Sorts and deduplicates. Throws InvalidTHFE on empty input.
  static Thfe canonicalize(std::span<const Rational> raw);
  Thfe(std::initializer_list<Rational> raw);

  static Thfe zero() { return Thfe{Rational::zero()}; }
  static Thfe one() { return Thfe{Rational::one()}; }

  std::span<const Rational> degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  const Rational& min() const { return degrees_.front(); }
  const Rational& max() const { return degrees_.back(); }

  friend bool operator==(const Thfe&, const Thfe&) = default;
  /// Lexicographic on the degree sequence. Only a key order for containers,
  /// unrelated to leq().
  friend std::strong_ordering operator<=>(const Thfe& a, const Thfe& b);

private:
  explicit Thfe(std::vector<Rational> canonical) : degrees_(std::move(canonical)) {}
  std::vector<Rational> degrees_;
};

/// {x ∧ y | x ∈ a, y ∈ b}
Thfe inf_combination(const Thfe& a, const Thfe& b);
/// {x ∨ y | x ∈ a, y ∈ b}
Thfe sup_combination(const Thfe& a, const Thfe& b);
/// Left fold of sup_combination; the empty family gives {0}.
Thfe sup_combination_n(std::span<const Thfe> family);

/// a ⊑ b  iff  a ⊔ b = b
bool leq(const Thfe& a, const Thfe& b);
bool is_degenerate(const Thfe& x);

/// Smallest superset of `seed` closed under both combinations.
/// Throws ClosureBudgetExceeded once more than `budget` elements are produced.
std::set<Thfe> generated_closure(const std::set<Thfe>& seed,
                                 std::size_t budget = kDefaultClosureBudget);

/// "{1/4, 1/2}"
std::string to_string(const Thfe& x);
std::ostream& operator<<(std::ostream& os, const Thfe& x);

}  // namespace thf
