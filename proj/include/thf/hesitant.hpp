#pragma once

#include <compare>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "thf/classic.hpp"
#include "thf/thfe.hpp"

namespace thf {

/// One weighted edge of an Nthfa.
struct WeightedTransition {
  StateId from;
  SymbolId symbol;
  StateId to;
  Thfe value;
};

/// Automaton with hesitant transition weights ψ and hesitant final map.
/// ψ is sparse: any (q, a, p) not listed weighs {0}.
class Nthfa {
public:
  using Row = std::vector<std::pair<StateId, Thfe>>;

  /// Throws UnknownState, UnknownSymbol, DuplicateTransition, InvalidStates.
  Nthfa(StateTable states, Alphabet alphabet, std::vector<WeightedTransition> transitions,
        StateId initial, std::vector<Thfe> final_map);

  const StateTable& states() const { return states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  const Thfe& final_value(StateId q) const { return final_map_[q]; }
  const std::vector<Thfe>& final_map() const { return final_map_; }

  /// Edges leaving q on a whose weight is not {0}, sorted by target.
  const Row& row(StateId q, SymbolId a) const { return rows_[q * alphabet_.size() + a]; }
  Thfe psi(StateId q, SymbolId a, StateId p) const;

  /// Every weight is {0} or {1}.
  bool is_zero_one() const;

private:
  StateTable states_;
  Alphabet alphabet_;
  std::vector<Row> rows_;
  StateId initial_;
  std::vector<Thfe> final_map_;
};

/// Crisp nondeterministic transitions, hesitant final map. Rows may be empty.
class Cnthfa {
public:
  Cnthfa(StateTable states, Alphabet alphabet, std::vector<StateSet> delta, StateId initial,
         std::vector<Thfe> final_map);

  const StateTable& states() const { return states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  const StateSet& delta(StateId q, SymbolId a) const { return delta_[q * alphabet_.size() + a]; }
  const Thfe& final_value(StateId q) const { return final_map_[q]; }
  const std::vector<Thfe>& final_map() const { return final_map_; }

private:
  StateTable states_;
  Alphabet alphabet_;
  std::vector<StateSet> delta_;
  StateId initial_;
  std::vector<Thfe> final_map_;
};

/// Crisp complete deterministic transitions, hesitant final map.
class Cdthfa {
public:
  Cdthfa(StateTable states, Alphabet alphabet, std::vector<StateId> delta, StateId initial,
         std::vector<Thfe> final_map);

  const StateTable& states() const { return states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  StateId delta(StateId q, SymbolId a) const { return delta_[q * alphabet_.size() + a]; }
  const Thfe& final_value(StateId q) const { return final_map_[q]; }
  const std::vector<Thfe>& final_map() const { return final_map_; }

private:
  StateTable states_;
  Alphabet alphabet_;
  std::vector<StateId> delta_;
  StateId initial_;
  std::vector<Thfe> final_map_;
};

using HesitantAutomaton = std::variant<Nthfa, Cnthfa, Cdthfa>;

/// ψ̂(q0, w, ·) for one word: one THFE per state.
class StateValueVector {
public:
  explicit StateValueVector(std::vector<Thfe> values) : values_(std::move(values)) {}

  /// {1} at `at`, {0} elsewhere.
  static StateValueVector unit(std::size_t n, StateId at);

  std::size_t size() const { return values_.size(); }
  const Thfe& operator[](StateId q) const { return values_[q]; }
  std::span<const Thfe> values() const { return values_; }

  friend bool operator==(const StateValueVector&, const StateValueVector&) = default;
  friend std::strong_ordering operator<=>(const StateValueVector& a, const StateValueVector& b) {
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                  b.values_.begin(), b.values_.end());
  }

private:
  std::vector<Thfe> values_;
};

/// V'(p) = ⊔_q V(q) ⊗ ψ(q, a, p)
StateValueVector advance(const Nthfa& m, const StateValueVector& v, SymbolId a);
/// ⊔_q V(q) ⊗ F(q)
Thfe read_out(const Nthfa& m, const StateValueVector& v);
/// ψ̂(q, w, ·)
StateValueVector run_from(const Nthfa& m, StateId q, const SymbolString& w);

Thfe psi_hat(const Nthfa& m, StateId q, const Word& w, StateId q2);
Thfe nthfa_eval(const Nthfa& m, const Word& w);
Thfe nthfa_eval(const Nthfa& m, const SymbolString& w);

/// ⊔ of final values over the crisp reachable set; {0} when it is empty.
Thfe cnthfa_eval(const Cnthfa& n, const Word& w);
Thfe cnthfa_eval(const Cnthfa& n, const SymbolString& w);
/// Same, starting from `start` instead of the initial state.
Thfe cnthfa_eval_from(const Cnthfa& n, StateId start, const Word& w);

Thfe cdthfa_eval(const Cdthfa& d, const Word& w);
Thfe cdthfa_eval(const Cdthfa& d, const SymbolString& w);

Thfe evaluate(const HesitantAutomaton& a, const Word& w);
Thfe evaluate(const HesitantAutomaton& a, const SymbolString& w);
const Alphabet& alphabet_of(const HesitantAutomaton& a);
const StateTable& states_of(const HesitantAutomaton& a);

/// Reads a Cdthfa as a Cnthfa with singleton rows.
Cnthfa as_cnthfa(const Cdthfa& d);

}  // namespace thf
