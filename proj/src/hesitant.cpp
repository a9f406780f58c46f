#include "thf/hesitant.hpp"

#include <algorithm>

#include "thf/errors.hpp"

namespace thf {

namespace {

void check_state(const StateTable& states, StateId q, std::string_view what) {
  if (q >= states.size())
    throw Error(ErrorCode::UnknownState, std::string(what) + " refers to state #" + std::to_string(q));
}

void check_symbol(const Alphabet& alphabet, SymbolId a) {
  if (a >= alphabet.size())
    throw Error(ErrorCode::UnknownSymbol, "symbol #" + std::to_string(a) + " is not in the alphabet");
}

std::vector<Thfe> checked_final_map(const StateTable& states, std::vector<Thfe> final_map) {
  if (final_map.size() != states.size())
    throw Error(ErrorCode::InvalidStates, "final map does not cover every state");
  return final_map;
}

}  // namespace

Nthfa::Nthfa(StateTable states, Alphabet alphabet, std::vector<WeightedTransition> transitions,
             StateId initial, std::vector<Thfe> final_map)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      rows_(states_.size() * alphabet_.size()),
      initial_(initial),
      final_map_(checked_final_map(states_, std::move(final_map))) {
  check_state(states_, initial_, "initial state");
  for (auto& t : transitions) {
    check_state(states_, t.from, "transition source");
    check_state(states_, t.to, "transition target");
    check_symbol(alphabet_, t.symbol);
    auto& row = rows_[t.from * alphabet_.size() + t.symbol];
    for (const auto& [to, value] : row)
      if (to == t.to)
        throw Error(ErrorCode::DuplicateTransition, "transition " + states_.name(t.from) + " -" +
                                                        alphabet_[t.symbol] + "-> " + states_.name(t.to) +
                                                        " listed twice");
    if (t.value != Thfe::zero()) row.emplace_back(t.to, std::move(t.value));
  }
  for (auto& row : rows_)
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
}

Thfe Nthfa::psi(StateId q, SymbolId a, StateId p) const {
  for (const auto& [to, value] : row(q, a))
    if (to == p) return value;
  return Thfe::zero();
}

bool Nthfa::is_zero_one() const {
  for (const auto& row : rows_)
    for (const auto& [to, value] : row)
      if (value != Thfe::one()) return false;
  return true;
}

Cnthfa::Cnthfa(StateTable states, Alphabet alphabet, std::vector<StateSet> delta, StateId initial,
               std::vector<Thfe> final_map)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      final_map_(checked_final_map(states_, std::move(final_map))) {
  if (delta_.size() != states_.size() * alphabet_.size())
    throw Error(ErrorCode::IncompleteTransition, "transition table has the wrong shape");
  check_state(states_, initial_, "initial state");
  for (auto& row : delta_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (StateId t : row) check_state(states_, t, "transition target");
  }
}

Cdthfa::Cdthfa(StateTable states, Alphabet alphabet, std::vector<StateId> delta, StateId initial,
               std::vector<Thfe> final_map)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      final_map_(checked_final_map(states_, std::move(final_map))) {
  if (delta_.size() != states_.size() * alphabet_.size())
    throw Error(ErrorCode::IncompleteTransition, "transition table is not total");
  check_state(states_, initial_, "initial state");
  for (StateId t : delta_) check_state(states_, t, "transition target");
}

StateValueVector StateValueVector::unit(std::size_t n, StateId at) {
  std::vector<Thfe> values(n, Thfe::zero());
  values.at(at) = Thfe::one();
  return StateValueVector(std::move(values));
}

StateValueVector advance(const Nthfa& m, const StateValueVector& v, SymbolId a) {
  // {0} is the ⊔ identity and the ⊗ annihilator, so zero terms are skipped.
  std::vector<Thfe> next(m.states().size(), Thfe::zero());
  const Thfe zero = Thfe::zero();
  for (StateId q = 0; q < v.size(); ++q) {
    if (v[q] == zero) continue;
    for (const auto& [p, weight] : m.row(q, a)) next[p] = sup_combination(next[p], inf_combination(v[q], weight));
  }
  return StateValueVector(std::move(next));
}

Thfe read_out(const Nthfa& m, const StateValueVector& v) {
  Thfe acc = Thfe::zero();
  for (StateId q = 0; q < v.size(); ++q) acc = sup_combination(acc, inf_combination(v[q], m.final_value(q)));
  return acc;
}

StateValueVector run_from(const Nthfa& m, StateId q, const SymbolString& w) {
  check_state(m.states(), q, "start state");
  auto v = StateValueVector::unit(m.states().size(), q);
  for (SymbolId a : w) {
    check_symbol(m.alphabet(), a);
    v = advance(m, v, a);
  }
  return v;
}

Thfe psi_hat(const Nthfa& m, StateId q, const Word& w, StateId q2) {
  check_state(m.states(), q2, "target state");
  return run_from(m, q, m.alphabet().encode(w))[q2];
}

Thfe nthfa_eval(const Nthfa& m, const SymbolString& w) { return read_out(m, run_from(m, m.initial(), w)); }
Thfe nthfa_eval(const Nthfa& m, const Word& w) { return nthfa_eval(m, m.alphabet().encode(w)); }

namespace {

Thfe cnthfa_fold(const Cnthfa& n, StateSet current, const SymbolString& w) {
  for (SymbolId a : w) {
    check_symbol(n.alphabet(), a);
    current = post_image(current, [&](StateId q) -> const StateSet& { return n.delta(q, a); });
  }
  std::vector<Thfe> reached;
  reached.reserve(current.size());
  for (StateId q : current) reached.push_back(n.final_value(q));
  return sup_combination_n(reached);
}

}  // namespace

Thfe cnthfa_eval(const Cnthfa& n, const SymbolString& w) { return cnthfa_fold(n, {n.initial()}, w); }
Thfe cnthfa_eval(const Cnthfa& n, const Word& w) { return cnthfa_eval(n, n.alphabet().encode(w)); }

Thfe cnthfa_eval_from(const Cnthfa& n, StateId start, const Word& w) {
  check_state(n.states(), start, "start state");
  return cnthfa_fold(n, {start}, n.alphabet().encode(w));
}

Thfe cdthfa_eval(const Cdthfa& d, const SymbolString& w) {
  StateId q = d.initial();
  for (SymbolId a : w) {
    check_symbol(d.alphabet(), a);
    q = d.delta(q, a);
  }
  return d.final_value(q);
}

Thfe cdthfa_eval(const Cdthfa& d, const Word& w) { return cdthfa_eval(d, d.alphabet().encode(w)); }

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

Thfe evaluate(const HesitantAutomaton& a, const SymbolString& w) {
  return std::visit(overloaded{[&](const Nthfa& m) { return nthfa_eval(m, w); },
                               [&](const Cnthfa& n) { return cnthfa_eval(n, w); },
                               [&](const Cdthfa& d) { return cdthfa_eval(d, w); }},
                    a);
}

Thfe evaluate(const HesitantAutomaton& a, const Word& w) { return evaluate(a, alphabet_of(a).encode(w)); }

const Alphabet& alphabet_of(const HesitantAutomaton& a) {
  return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, a);
}

const StateTable& states_of(const HesitantAutomaton& a) {
  return std::visit([](const auto& x) -> const StateTable& { return x.states(); }, a);
}

Cnthfa as_cnthfa(const Cdthfa& d) {
  const std::size_t sigma = d.alphabet().size();
  std::vector<StateSet> delta(d.states().size() * sigma);
  for (StateId q = 0; q < d.states().size(); ++q)
    for (SymbolId a = 0; a < sigma; ++a) delta[q * sigma + a] = {d.delta(q, a)};
  return Cnthfa(d.states(), d.alphabet(), std::move(delta), d.initial(), d.final_map());
}

}  // namespace thf
