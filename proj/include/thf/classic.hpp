#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace thf {

using StateId = std::size_t;
using SymbolId = std::size_t;

/// Sorted, duplicate-free list of state indices.
using StateSet = std::vector<StateId>;

/// A word as written by the user: one token per symbol; empty means λ.
using Word = std::vector<std::string>;

/// A word after symbol lookup.
using SymbolString = std::vector<SymbolId>;

/// Symbols may not contain whitespace or this character.
inline constexpr char kSymbolSeparator = '.';

class Alphabet {
public:
  /// Throws InvalidAlphabet on empty, duplicate or malformed tokens.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& operator[](SymbolId a) const { return symbols_[a]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Throws UnknownSymbol.
  SymbolId index_of(std::string_view token) const;
  SymbolString encode(const Word& w) const;
  Word decode(const SymbolString& w) const;

  /// True when every token is a single character, so words can be written
  /// without separators.
  bool single_characters() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
  std::vector<std::string> symbols_;
  std::map<std::string, SymbolId, std::less<>> index_;
};

class StateTable {
public:
  /// Throws InvalidStates on empty list, empty or duplicate names.
  explicit StateTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(StateId q) const { return names_[q]; }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(std::string_view name) const { return index_.find(name) != index_.end(); }
  /// Throws UnknownState.
  StateId id_of(std::string_view name) const;

private:
  std::vector<std::string> names_;
  std::map<std::string, StateId, std::less<>> index_;
};

/// Returns `base`, or the first of `base`_1, `base`_2, ... not used in `taken`.
std::string fresh_name(std::string base, const std::vector<const StateTable*>& taken);

/// Complete deterministic automaton. Transitions are stored row-major:
/// delta[q * |Σ| + a].
class Dfa {
public:
  Dfa(StateTable states, Alphabet alphabet, std::vector<StateId> delta, StateId initial,
      std::vector<bool> finals);

  const StateTable& states() const { return states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  StateId delta(StateId q, SymbolId a) const { return delta_[q * alphabet_.size() + a]; }
  bool is_final(StateId q) const { return finals_[q]; }

private:
  StateTable states_;
  Alphabet alphabet_;
  std::vector<StateId> delta_;
  StateId initial_;
  std::vector<bool> finals_;
};

/// Nondeterministic automaton; rows may be empty.
class Nfa {
public:
  Nfa(StateTable states, Alphabet alphabet, std::vector<StateSet> delta, StateId initial,
      std::vector<bool> finals);

  const StateTable& states() const { return states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  const StateSet& delta(StateId q, SymbolId a) const { return delta_[q * alphabet_.size() + a]; }
  bool is_final(StateId q) const { return finals_[q]; }

private:
  StateTable states_;
  Alphabet alphabet_;
  std::vector<StateSet> delta_;
  StateId initial_;
  std::vector<bool> finals_;
};

StateId dfa_extended(const Dfa& d, StateId q, const Word& w);
bool dfa_accepts(const Dfa& d, const Word& w);

StateSet nfa_extended(const Nfa& n, StateId q, const Word& w);
/// Evaluation from an arbitrary start set.
StateSet nfa_extended(const Nfa& n, const StateSet& from, const Word& w);
bool nfa_accepts(const Nfa& n, const Word& w);

/// Subset construction over the subsets reachable from {initial}. States are
/// named "{q0,q1}" with members in declared order; "{}" is the non-final sink.
Dfa nfa_to_dfa(const Nfa& n);

/// "{q0,q1}"
std::string subset_name(const StateTable& states, const StateSet& subset);

/// Union of the rows `rows(q)` over q ∈ from, sorted.
template <class RowOf>
StateSet post_image(const StateSet& from, RowOf rows) {
  std::vector<StateId> out;
  for (StateId q : from) {
    const auto& row = rows(q);
    out.insert(out.end(), row.begin(), row.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace thf
