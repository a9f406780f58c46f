#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "thf/classic.hpp"
#include "thf/constructions.hpp"
#include "thf/hesitant.hpp"

// Brute-force reference implementations. Nothing here reuses the vector fold,
// subset constructions or product search it is meant to check.

namespace thf {

inline constexpr std::size_t kDefaultOracleBound = 6;

/// All words of length 0..max_length, shortest first, then by symbol index.
class WordStream {
public:
  WordStream(const Alphabet& alphabet, std::size_t max_length);

  /// Σ_{i=0}^{max_length} |Σ|^i
  std::size_t count() const;
  std::optional<SymbolString> next();

private:
  std::size_t sigma_;
  std::size_t max_length_;
  SymbolString current_;
  bool started_ = false;
  bool done_ = false;
};

/// ψ̂ by direct structural recursion, no memoization. Throws WordTooLong
/// when |w| > bound.
Thfe reference_psi_hat(const Nthfa& m, StateId q, const Word& w, StateId q2,
                       std::size_t bound = kDefaultOracleBound);
Thfe reference_eval(const Nthfa& m, const Word& w, std::size_t bound = kDefaultOracleBound);

/// {f_M(w) : |w| ≤ max_length}
std::set<Thfe> empirical_range(const Nthfa& m, std::size_t max_length);

/// Compares both languages word by word; the counterexample is the first
/// mismatch in WordStream order. Throws AlphabetMismatch.
EquivalenceVerdict languages_agree_up_to(const HesitantAutomaton& a, const HesitantAutomaton& b,
                                         std::size_t max_length);

}  // namespace thf
