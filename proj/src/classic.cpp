#include "thf/classic.hpp"

#include <cctype>
#include <deque>

#include "thf/errors.hpp"

namespace thf {

namespace {

bool valid_token(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token)
    if (std::isspace(static_cast<unsigned char>(c)) || c == kSymbolSeparator) return false;
  return true;
}

void check_state(const StateTable& states, StateId q, std::string_view what) {
  if (q >= states.size())
    throw Error(ErrorCode::UnknownState, std::string(what) + " refers to state #" + std::to_string(q));
}

std::vector<bool> checked_finals(const StateTable& states, std::vector<bool> finals) {
  if (finals.size() != states.size())
    throw Error(ErrorCode::InvalidStates, "final flags do not cover every state");
  return finals;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorCode::InvalidAlphabet, "alphabet is empty");
  for (SymbolId a = 0; a < symbols_.size(); ++a) {
    if (!valid_token(symbols_[a]))
      throw Error(ErrorCode::InvalidAlphabet, "malformed symbol '" + symbols_[a] + "'");
    if (!index_.emplace(symbols_[a], a).second)
      throw Error(ErrorCode::InvalidAlphabet, "duplicate symbol '" + symbols_[a] + "'");
  }
}

SymbolId Alphabet::index_of(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end())
    throw Error(ErrorCode::UnknownSymbol, "symbol '" + std::string(token) + "' is not in the alphabet");
  return it->second;
}

SymbolString Alphabet::encode(const Word& w) const {
  SymbolString out;
  out.reserve(w.size());
  for (const auto& token : w) out.push_back(index_of(token));
  return out;
}

Word Alphabet::decode(const SymbolString& w) const {
  Word out;
  out.reserve(w.size());
  for (SymbolId a : w) out.push_back(symbols_.at(a));
  return out;
}

bool Alphabet::single_characters() const {
  for (const auto& s : symbols_)
    if (s.size() != 1) return false;
  return true;
}

StateTable::StateTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorCode::InvalidStates, "an automaton needs at least one state");
  for (StateId q = 0; q < names_.size(); ++q) {
    if (names_[q].empty()) throw Error(ErrorCode::InvalidStates, "empty state name");
    if (!index_.emplace(names_[q], q).second)
      throw Error(ErrorCode::InvalidStates, "duplicate state '" + names_[q] + "'");
  }
}

StateId StateTable::id_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::UnknownState, "unknown state '" + std::string(name) + "'");
  return it->second;
}

std::string fresh_name(std::string base, const std::vector<const StateTable*>& taken) {
  auto used = [&](const std::string& name) {
    for (const auto* t : taken)
      if (t->contains(name)) return true;
    return false;
  };
  if (!used(base)) return base;
  for (std::size_t i = 1;; ++i)
    if (auto candidate = base + "_" + std::to_string(i); !used(candidate)) return candidate;
}

Dfa::Dfa(StateTable states, Alphabet alphabet, std::vector<StateId> delta, StateId initial,
         std::vector<bool> finals)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(checked_finals(states_, std::move(finals))) {
  if (delta_.size() != states_.size() * alphabet_.size())
    throw Error(ErrorCode::IncompleteTransition, "DFA transition table is not total");
  check_state(states_, initial_, "initial state");
  for (StateId t : delta_) check_state(states_, t, "transition target");
}

Nfa::Nfa(StateTable states, Alphabet alphabet, std::vector<StateSet> delta, StateId initial,
         std::vector<bool> finals)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      finals_(checked_finals(states_, std::move(finals))) {
  if (delta_.size() != states_.size() * alphabet_.size())
    throw Error(ErrorCode::IncompleteTransition, "NFA transition table has the wrong shape");
  check_state(states_, initial_, "initial state");
  for (auto& row : delta_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (StateId t : row) check_state(states_, t, "transition target");
  }
}

StateId dfa_extended(const Dfa& d, StateId q, const Word& w) {
  check_state(d.states(), q, "start state");
  for (SymbolId a : d.alphabet().encode(w)) q = d.delta(q, a);
  return q;
}

bool dfa_accepts(const Dfa& d, const Word& w) { return d.is_final(dfa_extended(d, d.initial(), w)); }

StateSet nfa_extended(const Nfa& n, const StateSet& from, const Word& w) {
  for (StateId q : from) check_state(n.states(), q, "start state");
  StateSet current = from;
  std::sort(current.begin(), current.end());
  current.erase(std::unique(current.begin(), current.end()), current.end());
  for (SymbolId a : n.alphabet().encode(w))
    current = post_image(current, [&](StateId q) -> const StateSet& { return n.delta(q, a); });
  return current;
}

StateSet nfa_extended(const Nfa& n, StateId q, const Word& w) { return nfa_extended(n, StateSet{q}, w); }

bool nfa_accepts(const Nfa& n, const Word& w) {
  for (StateId q : nfa_extended(n, n.initial(), w))
    if (n.is_final(q)) return true;
  return false;
}

std::string subset_name(const StateTable& states, const StateSet& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += states.name(subset[i]);
  }
  return out + "}";
}

Dfa nfa_to_dfa(const Nfa& n) {
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
      StateSet image = post_image(subsets[x], [&](StateId q) -> const StateSet& { return n.delta(q, a); });
      StateId target = intern(std::move(image));
      delta.resize(subsets.size() * sigma);
      delta[x * sigma + a] = target;
    }
  }

  std::vector<std::string> names;
  std::vector<bool> finals;
  for (const auto& s : subsets) {
    names.push_back(subset_name(n.states(), s));
    bool accepting = false;
    for (StateId q : s) accepting = accepting || n.is_final(q);
    finals.push_back(accepting);
  }
  return Dfa(StateTable(std::move(names)), n.alphabet(), std::move(delta), 0, std::move(finals));
}

}  // namespace thf
