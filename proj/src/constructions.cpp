#include "thf/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "thf/errors.hpp"

namespace thf {

namespace {

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw Error(ErrorCode::AlphabetMismatch, "operands are over different alphabets");
}

bool tables_intersect(const StateTable& s, const StateTable& p) {
  for (const auto& name : s.names())
    if (p.contains(name)) return true;
  return false;
}

}  // namespace

Thfe h_union_pointwise(const Language& f1, const Language& f2, const Word& w) {
  return sup_combination(f1(w), f2(w));
}

Thfe h_intersection_pointwise(const Language& f1, const Language& f2, const Word& w) {
  return inf_combination(f1(w), f2(w));
}

Nthfa union_nthfa(const Nthfa& m1, const Nthfa& m2) {
  require_same_alphabet(m1.alphabet(), m2.alphabet());
  const std::size_t sigma = m1.alphabet().size();
  const std::size_t n1 = m1.states().size();
  const std::size_t n2 = m2.states().size();
  const bool prefix = tables_intersect(m1.states(), m2.states());

  // Layout: fresh initial at 0, then S at 1.., then P.
  std::vector<std::string> names;
  names.reserve(n1 + n2 + 1);
  names.push_back(fresh_name("init", {&m1.states(), &m2.states()}));
  for (const auto& s : m1.states().names()) names.push_back(prefix ? "L." + s : s);
  for (const auto& p : m2.states().names()) names.push_back(prefix ? "R." + p : p);
  const StateId offset1 = 1, offset2 = 1 + n1;

  std::vector<WeightedTransition> transitions;
  for (SymbolId a = 0; a < sigma; ++a) {
    for (const auto& [q2, v] : m1.row(m1.initial(), a)) transitions.push_back({0, a, offset1 + q2, v});
    for (const auto& [q2, v] : m2.row(m2.initial(), a)) transitions.push_back({0, a, offset2 + q2, v});
    for (StateId q = 0; q < n1; ++q)
      for (const auto& [q2, v] : m1.row(q, a)) transitions.push_back({offset1 + q, a, offset1 + q2, v});
    for (StateId q = 0; q < n2; ++q)
      for (const auto& [q2, v] : m2.row(q, a)) transitions.push_back({offset2 + q, a, offset2 + q2, v});
  }

  std::vector<Thfe> finals;
  finals.reserve(names.size());
  finals.push_back(sup_combination(m1.final_value(m1.initial()), m2.final_value(m2.initial())));
  finals.insert(finals.end(), m1.final_map().begin(), m1.final_map().end());
  finals.insert(finals.end(), m2.final_map().begin(), m2.final_map().end());

  return Nthfa(StateTable(std::move(names)), m1.alphabet(), std::move(transitions), 0, std::move(finals));
}

Nthfa union_nthfa_n(std::span<const Nthfa> family) {
  if (family.empty()) throw std::invalid_argument("union of an empty family");
  Nthfa acc = family.front();
  for (const auto& m : family.subspan(1)) acc = union_nthfa(acc, m);
  return acc;
}

ValueVectorAutomaton reachable_vectors(const Nthfa& m, std::size_t budget) {
  const std::size_t sigma = m.alphabet().size();
  ValueVectorAutomaton out;
  std::map<StateValueVector, std::size_t> index;
  std::deque<std::size_t> queue;

  auto intern = [&](StateValueVector v) {
    auto [it, fresh] = index.emplace(v, out.vectors.size());
    if (fresh) {
      if (out.vectors.size() >= budget)
        throw Error(ErrorCode::ClosureBudgetExceeded,
                    "more than " + std::to_string(budget) + " reachable value vectors");
      out.vectors.push_back(std::move(v));
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(StateValueVector::unit(m.states().size(), m.initial()));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    out.delta.resize(out.vectors.size() * sigma);
    for (SymbolId a = 0; a < sigma; ++a) {
      std::size_t target = intern(advance(m, out.vectors[i], a));
      out.delta.resize(out.vectors.size() * sigma);
      out.delta[i * sigma + a] = target;
    }
  }
  out.values.reserve(out.vectors.size());
  for (const auto& v : out.vectors) out.values.push_back(read_out(m, v));
  return out;
}

std::set<Thfe> compute_range(const Nthfa& m, std::size_t budget) {
  auto vva = reachable_vectors(m, budget);
  return {vva.values.begin(), vva.values.end()};
}

namespace {

Nfa level_from_vectors(const ValueVectorAutomaton& vva, const Alphabet& alphabet, const Thfe& k) {
  const std::size_t sigma = alphabet.size();
  std::vector<std::string> names;
  std::vector<StateSet> delta(vva.vectors.size() * sigma);
  std::vector<bool> finals;
  for (std::size_t i = 0; i < vva.vectors.size(); ++i) {
    names.push_back("v" + std::to_string(i));
    finals.push_back(leq(k, vva.values[i]));
    for (SymbolId a = 0; a < sigma; ++a) delta[i * sigma + a] = {vva.delta[i * sigma + a]};
  }
  return Nfa(StateTable(std::move(names)), alphabet, std::move(delta), 0, std::move(finals));
}

}  // namespace

Nfa level_automaton(const Nthfa& m, const Thfe& k, std::size_t budget) {
  return level_from_vectors(reachable_vectors(m, budget), m.alphabet(), k);
}

Nfa threshold_automaton(const Nthfa& m, const Thfe& k) {
  const std::size_t sigma = m.alphabet().size();
  const std::size_t n = m.states().size();
  std::vector<StateSet> delta(n * sigma);
  std::vector<bool> finals(n);
  for (StateId q = 0; q < n; ++q) {
    finals[q] = leq(k, m.final_value(q));
    for (SymbolId a = 0; a < sigma; ++a)
      for (StateId p = 0; p < n; ++p)
        if (leq(k, m.psi(q, a, p))) delta[q * sigma + a].push_back(p);
  }
  return Nfa(m.states(), m.alphabet(), std::move(delta), m.initial(), std::move(finals));
}

LevelDecomposition::LevelDecomposition(Alphabet alphabet, std::vector<Level> levels)
    : alphabet_(std::move(alphabet)), levels_(std::move(levels)) {
  std::set<Thfe> keys;
  for (const auto& level : levels_) {
    if (!keys.insert(level.key).second)
      throw Error(ErrorCode::DuplicateLevel, "level " + to_string(level.key) + " appears twice");
    require_same_alphabet(alphabet_, level.nfa.alphabet());
  }
}

LevelDecomposition decompose(const Nthfa& m, std::size_t budget) {
  auto vva = reachable_vectors(m, budget);
  std::set<Thfe> range(vva.values.begin(), vva.values.end());
  std::vector<Level> levels;
  for (const auto& k : range) levels.push_back({k, level_from_vectors(vva, m.alphabet(), k)});
  return LevelDecomposition(m.alphabet(), std::move(levels));
}

Thfe eval_decomposition(const LevelDecomposition& l, const Word& w) {
  l.alphabet().encode(w);  // UnknownSymbol even when there are no levels
  std::vector<Thfe> applicable;
  for (const auto& level : l.levels())
    if (nfa_accepts(level.nfa, w)) applicable.push_back(level.key);
  return sup_combination_n(applicable);
}

namespace {

/// Zero-one NTHFA of one level: {1} along the DFA's edges, k on accepting states.
Nthfa level_machine(const Level& level, std::size_t index) {
  const Dfa dfa = nfa_to_dfa(level.nfa);
  const std::size_t sigma = dfa.alphabet().size();
  const std::string prefix = "L" + std::to_string(index) + ".";
  std::vector<std::string> names;
  std::vector<Thfe> finals;
  std::vector<WeightedTransition> transitions;
  for (StateId q = 0; q < dfa.states().size(); ++q) {
    names.push_back(prefix + dfa.states().name(q));
    finals.push_back(dfa.is_final(q) ? level.key : Thfe::zero());
    for (SymbolId a = 0; a < sigma; ++a) transitions.push_back({q, a, dfa.delta(q, a), Thfe::one()});
  }
  return Nthfa(StateTable(std::move(names)), dfa.alphabet(), std::move(transitions), dfa.initial(),
               std::move(finals));
}

}  // namespace

Nthfa recompose(const LevelDecomposition& l) {
  if (l.levels().empty())
    return Nthfa(StateTable({"q0"}), l.alphabet(), {}, 0, {Thfe::zero()});
  std::vector<Nthfa> machines;
  for (std::size_t i = 0; i < l.levels().size(); ++i) machines.push_back(level_machine(l.levels()[i], i));
  return union_nthfa_n(machines);
}

Nthfa embed_cnthfa(const Cnthfa& n) {
  std::vector<WeightedTransition> transitions;
  for (StateId q = 0; q < n.states().size(); ++q)
    for (SymbolId a = 0; a < n.alphabet().size(); ++a)
      for (StateId p : n.delta(q, a)) transitions.push_back({q, a, p, Thfe::one()});
  return Nthfa(n.states(), n.alphabet(), std::move(transitions), n.initial(), n.final_map());
}

Nthfa to_nthfa(const HesitantAutomaton& a) {
  if (const auto* m = std::get_if<Nthfa>(&a)) return *m;
  if (const auto* n = std::get_if<Cnthfa>(&a)) return embed_cnthfa(*n);
  return embed_cnthfa(as_cnthfa(std::get<Cdthfa>(a)));
}

namespace {

Cnthfa crispify_zero_one(const Nthfa& m) {
  const std::size_t n = m.states().size();
  const std::size_t sigma = m.alphabet().size();
  const StateId sink = n;

  std::vector<std::string> names = m.states().names();
  names.push_back(fresh_name("__sink", {&m.states()}));

  std::vector<StateSet> delta((n + 1) * sigma);
  for (StateId q = 0; q < n; ++q) {
    for (SymbolId a = 0; a < sigma; ++a) {
      auto& out = delta[q * sigma + a];
      for (const auto& [p, v] : m.row(q, a)) out.push_back(p);
      // Some target still carries weight {0}: route it to the sink.
      if (out.size() < n) out.push_back(sink);
    }
  }
  for (SymbolId a = 0; a < sigma; ++a) delta[sink * sigma + a] = {sink};

  std::vector<Thfe> finals = m.final_map();
  finals.push_back(Thfe::zero());
  return Cnthfa(StateTable(std::move(names)), m.alphabet(), std::move(delta), m.initial(), std::move(finals));
}

}  // namespace

Crispified crispify_nthfa(const Nthfa& m, std::size_t budget) {
  if (m.is_zero_one()) return {crispify_zero_one(m), false};
  return {crispify_zero_one(recompose(decompose(m, budget))), true};
}

Cdthfa determinize_cnthfa(const Cnthfa& n) {
  const std::size_t sigma = n.alphabet().size();
  std::map<StateSet, StateId> index;
  std::vector<StateSet> subsets;
  std::vector<StateId> delta;
  std::deque<StateId> queue;

  auto intern = [&](StateSet s) {
    auto [it, fresh] = index.emplace(s, subsets.size());
    if (fresh) {
      subsets.push_back(std::move(s));
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(StateSet{n.initial()});
  while (!queue.empty()) {
    StateId x = queue.front();
    queue.pop_front();
    delta.resize(subsets.size() * sigma);
    for (SymbolId a = 0; a < sigma; ++a) {
      StateId target =
          intern(post_image(subsets[x], [&](StateId q) -> const StateSet& { return n.delta(q, a); }));
      delta.resize(subsets.size() * sigma);
      delta[x * sigma + a] = target;
    }
  }

  std::vector<std::string> names;
  std::vector<Thfe> finals;
  for (const auto& s : subsets) {
    names.push_back(subset_name(n.states(), s));
    std::vector<Thfe> members;
    for (StateId q : s) members.push_back(n.final_value(q));
    finals.push_back(sup_combination_n(members));
  }
  return Cdthfa(StateTable(std::move(names)), n.alphabet(), std::move(delta), 0, std::move(finals));
}

Cdthfa intersect_cdthfa(const Cdthfa& d1, const Cdthfa& d2) {
  require_same_alphabet(d1.alphabet(), d2.alphabet());
  const std::size_t sigma = d1.alphabet().size();
  const bool prefix = tables_intersect(d1.states(), d2.states());
  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, StateId> index;
  std::vector<Pair> pairs;
  std::vector<StateId> delta;
  std::deque<StateId> queue;

  auto intern = [&](Pair p) {
    auto [it, fresh] = index.emplace(p, pairs.size());
    if (fresh) {
      pairs.push_back(p);
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern({d1.initial(), d2.initial()});
  while (!queue.empty()) {
    StateId x = queue.front();
    queue.pop_front();
    delta.resize(pairs.size() * sigma);
    for (SymbolId a = 0; a < sigma; ++a) {
      StateId target = intern({d1.delta(pairs[x].first, a), d2.delta(pairs[x].second, a)});
      delta.resize(pairs.size() * sigma);
      delta[x * sigma + a] = target;
    }
  }

  std::vector<std::string> names;
  std::vector<Thfe> finals;
  for (const auto& [q, p] : pairs) {
    const std::string left = prefix ? "L." + d1.states().name(q) : d1.states().name(q);
    const std::string right = prefix ? "R." + d2.states().name(p) : d2.states().name(p);
    names.push_back("(" + left + "," + right + ")");
    finals.push_back(inf_combination(d1.final_value(q), d2.final_value(p)));
  }
  return Cdthfa(StateTable(std::move(names)), d1.alphabet(), std::move(delta), 0, std::move(finals));
}

Cdthfa intersect_cdthfa_n(std::span<const Cdthfa> family) {
  if (family.empty()) throw std::invalid_argument("intersection of an empty family");
  Cdthfa acc = family.front();
  for (const auto& d : family.subspan(1)) acc = intersect_cdthfa(acc, d);
  return acc;
}

Cdthfa to_cdthfa(const HesitantAutomaton& a, std::size_t budget) {
  if (const auto* d = std::get_if<Cdthfa>(&a)) return *d;
  if (const auto* n = std::get_if<Cnthfa>(&a)) return determinize_cnthfa(*n);
  return determinize_cnthfa(crispify_nthfa(std::get<Nthfa>(a), budget).automaton);
}

EquivalenceVerdict equivalent(const HesitantAutomaton& a, const HesitantAutomaton& b, std::size_t budget) {
  require_same_alphabet(alphabet_of(a), alphabet_of(b));
  const Cdthfa d1 = to_cdthfa(a, budget);
  const Cdthfa d2 = to_cdthfa(b, budget);
  const std::size_t sigma = d1.alphabet().size();

  struct Visit {
    StateId left, right;
    std::size_t parent;
    SymbolId via;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::map<std::pair<StateId, StateId>, std::size_t> seen;
  std::vector<Visit> visits;

  // Visits are appended in BFS order, so the first mismatch dequeued has the
  // least access word in length-then-symbol order.
  visits.push_back({d1.initial(), d2.initial(), kRoot, 0});
  seen.emplace(std::pair{d1.initial(), d2.initial()}, 0);
  for (std::size_t i = 0; i < visits.size(); ++i) {
    const Visit v = visits[i];
    if (d1.final_value(v.left) != d2.final_value(v.right)) {
      SymbolString word;
      for (std::size_t j = i; visits[j].parent != kRoot; j = visits[j].parent) word.push_back(visits[j].via);
      std::reverse(word.begin(), word.end());
      return {false, d1.alphabet().decode(word)};
    }
    for (SymbolId s = 0; s < sigma; ++s) {
      std::pair next{d1.delta(v.left, s), d2.delta(v.right, s)};
      if (seen.emplace(next, visits.size()).second) visits.push_back({next.first, next.second, i, s});
    }
  }
  return {true, std::nullopt};
}

Nthfa constant_automaton(const Thfe& x, const Alphabet& alphabet) {
  std::vector<WeightedTransition> transitions;
  for (StateId q = 0; q < 2; ++q)
    for (SymbolId a = 0; a < alphabet.size(); ++a)
      for (StateId p = 0; p < 2; ++p) transitions.push_back({q, a, p, x});
  return Nthfa(StateTable({"q0", "q1"}), alphabet, std::move(transitions), 0, {x, x});
}

Thfe hyperbolic_language_eval(const Word& w) {
  std::vector<Rational> degrees;
  BigInt power = 1;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    degrees.emplace_back(1, power + 1);
    power *= 2;
  }
  return Thfe::canonicalize(degrees);
}

}  // namespace thf
