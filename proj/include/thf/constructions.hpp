#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "thf/classic.hpp"
#include "thf/hesitant.hpp"
#include "thf/thfe.hpp"

namespace thf {

/// A hesitant language given as a word evaluator.
using Language = std::function<Thfe(const Word&)>;

/// f1(w) ⊔ f2(w)
Thfe h_union_pointwise(const Language& f1, const Language& f2, const Word& w);
/// f1(w) ⊗ f2(w)
Thfe h_intersection_pointwise(const Language& f1, const Language& f2, const Word& w);

/// NTHFA whose language is f1 ⊔ f2 pointwise. Adds one fresh initial state
/// that routes into both operands; operand state names get "L."/"R."
/// prefixes when the two state sets intersect. Throws AlphabetMismatch.
Nthfa union_nthfa(const Nthfa& m1, const Nthfa& m2);
/// Left fold of union_nthfa. Throws std::invalid_argument on an empty family.
Nthfa union_nthfa_n(std::span<const Nthfa> family);

/// Deterministic automaton over the vectors ψ̂(q0, w, ·) reachable from λ,
/// discovered breadth-first with symbols in alphabet order.
struct ValueVectorAutomaton {
  std::vector<StateValueVector> vectors;
  /// Row-major successor table: delta[i * |Σ| + a].
  std::vector<std::size_t> delta;
  /// read_out() of each vector, i.e. the language value of any word reaching it.
  std::vector<Thfe> values;
};

/// Throws ClosureBudgetExceeded when more than `budget` vectors are reachable.
ValueVectorAutomaton reachable_vectors(const Nthfa& m, std::size_t budget = kDefaultClosureBudget);

/// Exactly {f_M(w) : w ∈ Σ*}.
std::set<Thfe> compute_range(const Nthfa& m, std::size_t budget = kDefaultClosureBudget);

/// NFA accepting exactly {w : k ⊑ f_M(w)}. Built over the reachable
/// value vectors (states "v0", "v1", ... in discovery order).
Nfa level_automaton(const Nthfa& m, const Thfe& k, std::size_t budget = kDefaultClosureBudget);

/// Cut of M at k on M's own states: edge q -a-> p iff k ⊑ ψ(q,a,p),
/// q final iff k ⊑ F(q). Recognizes {w : k ⊑ f_M(w)} when every weight and
/// final value of M is degenerate. On general hesitant weights it can disagree
/// with that set, so decompose() does not use it.
Nfa threshold_automaton(const Nthfa& m, const Thfe& k);

struct Level {
  Thfe key;
  Nfa nfa;
};

/// f(w) = ⊔ {k : nfa_k accepts w}, {0} when no level accepts.
class LevelDecomposition {
public:
  /// Throws DuplicateLevel, AlphabetMismatch.
  LevelDecomposition(Alphabet alphabet, std::vector<Level> levels);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Level>& levels() const { return levels_; }

private:
  Alphabet alphabet_;
  std::vector<Level> levels_;
};

/// One level per element of compute_range(m), keys in ascending key order.
LevelDecomposition decompose(const Nthfa& m, std::size_t budget = kDefaultClosureBudget);
Thfe eval_decomposition(const LevelDecomposition& l, const Word& w);

/// Each level NFA is determinized, turned into a zero-one NTHFA with final
/// value k on accepting states, and the results are folded with union_nthfa.
/// An empty decomposition yields a one-state automaton with language {0}.
Nthfa recompose(const LevelDecomposition& l);

/// ψ(q,a,p) = {1} iff p ∈ δ(q,a), {0} otherwise.
Nthfa embed_cnthfa(const Cnthfa& n);
/// embed_cnthfa on the singleton-row view of a deterministic automaton.
Nthfa to_nthfa(const HesitantAutomaton& a);

struct Crispified {
  Cnthfa automaton;
  /// True when the input had weights outside {{0},{1}} and was first
  /// rewritten through decompose/recompose.
  bool normalized;
};

/// Crisp transitions plus one absorbing sink with final value {0}.
Crispified crispify_nthfa(const Nthfa& m, std::size_t budget = kDefaultClosureBudget);

/// Reachable subset construction from {q0}; F_D(X) = ⊔_{q∈X} F(q), {0} for ∅.
Cdthfa determinize_cnthfa(const Cnthfa& n);

/// Product on reachable pairs with F((q,p)) = F1(q) ⊗ F2(p). Throws AlphabetMismatch.
Cdthfa intersect_cdthfa(const Cdthfa& d1, const Cdthfa& d2);
/// Left fold of intersect_cdthfa. Throws std::invalid_argument on an empty family.
Cdthfa intersect_cdthfa_n(std::span<const Cdthfa> family);

/// Crispifies and determinizes as needed.
Cdthfa to_cdthfa(const HesitantAutomaton& a, std::size_t budget = kDefaultClosureBudget);

struct EquivalenceVerdict {
  bool equivalent;
  /// Present iff !equivalent.
  std::optional<Word> counterexample;
};

/// Decides f_a = f_b on all of Σ*. Both sides are brought to deterministic
/// crisp form and their product is explored breadth-first, so a returned
/// counterexample is the first distinguishing word in length-then-symbol order.
EquivalenceVerdict equivalent(const HesitantAutomaton& a, const HesitantAutomaton& b,
                              std::size_t budget = kDefaultClosureBudget);

/// Two states, every weight and final value equal to x; the language is constantly x.
Nthfa constant_automaton(const Thfe& x, const Alphabet& alphabet);

/// {1/(2^i + 1) : 0 ≤ i ≤ |w|}. Its range is infinite, so no automaton computes it.
Thfe hyperbolic_language_eval(const Word& w);

}  // namespace thf
