#include "thf/format.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace thf {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const std::set<std::string, std::less<>> kKinds = {"dfa", "nfa", "nthfa", "cnthfa", "cdthfa", "decomposition"};

std::string pointer(const std::string& base, std::string_view key) { return base + "/" + std::string(key); }
std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

/// Reads one document object, recording every violation it can find instead
/// of stopping at the first.
class Reader {
public:
  explicit Reader(std::vector<Diagnostic>& diagnostics) : diags_(diagnostics) {}

  std::optional<AutomatonValue> read(const Json& j, const std::string& where);

private:
  std::vector<Diagnostic>& diags_;

  void error(ErrorCode code, const std::string& where, std::string message) {
    diags_.push_back({Diagnostic::Severity::Error, code, where.empty() ? "/" : where, std::move(message)});
  }
  void warn(ErrorCode code, const std::string& where, std::string message) {
    diags_.push_back({Diagnostic::Severity::Warning, code, where.empty() ? "/" : where, std::move(message)});
  }
  std::size_t error_count() const {
    return static_cast<std::size_t>(std::count_if(diags_.begin(), diags_.end(), [](const Diagnostic& d) {
      return d.severity == Diagnostic::Severity::Error;
    }));
  }

  const Json* field(const Json& obj, std::string_view key, const std::string& where, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(ErrorCode::SyntaxError, where, "missing field \"" + std::string(key) + "\"");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string(const Json& j, const std::string& where) {
    if (!j.is_string()) {
      error(ErrorCode::SyntaxError, where, "expected a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::optional<std::vector<std::string>> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) {
      error(ErrorCode::SyntaxError, where, "expected an array of strings");
      return std::nullopt;
    }
    std::vector<std::string> out;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto s = string(j[i], pointer(where, i));
      if (s) out.push_back(*s);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<Thfe> thfe(const Json& j, const std::string& where) {
    auto raw = string_list(j, where);
    if (!raw) return std::nullopt;
    if (raw->empty()) {
      error(ErrorCode::InvalidTHFE, where, "a hesitant element needs at least one degree");
      return std::nullopt;
    }
    std::vector<Rational> degrees;
    bool ok = true;
    for (std::size_t i = 0; i < raw->size(); ++i) {
      try {
        degrees.push_back(Rational::parse((*raw)[i]));
      } catch (const Error& e) {
        error(e.code(), pointer(where, i), e.what());
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    Thfe value = Thfe::canonicalize(degrees);
    if (!std::equal(degrees.begin(), degrees.end(), value.degrees().begin(), value.degrees().end()))
      warn(ErrorCode::InvalidTHFE, where, "degrees reordered or deduplicated to " + to_string(value));
    return value;
  }

  std::optional<StateId> state(const StateTable& states, const Json& j, const std::string& where) {
    auto name = string(j, where);
    if (!name) return std::nullopt;
    if (!states.contains(*name)) {
      error(ErrorCode::UnknownState, where, "unknown state '" + *name + "'");
      return std::nullopt;
    }
    return states.id_of(*name);
  }

  std::optional<SymbolId> symbol(const Alphabet& alphabet, const Json& j, const std::string& where) {
    auto token = string(j, where);
    if (!token) return std::nullopt;
    try {
      return alphabet.index_of(*token);
    } catch (const Error& e) {
      error(e.code(), where, e.what());
      return std::nullopt;
    }
  }

  std::optional<StateSet> state_list(const StateTable& states, const Json& j, const std::string& where) {
    if (!j.is_array()) {
      error(ErrorCode::SyntaxError, where, "expected an array of state names");
      return std::nullopt;
    }
    StateSet out;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto q = state(states, j[i], pointer(where, i));
      if (q) out.push_back(*q);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<LevelDecomposition> read_decomposition(const Json& j, const Alphabet& alphabet,
                                                       const std::string& where);
};

template <class T>
std::optional<AutomatonValue> build(auto&& make, std::vector<Diagnostic>& diags, const std::string& where) {
  try {
    return AutomatonValue(std::in_place_type<T>, make());
  } catch (const Error& e) {
    diags.push_back({Diagnostic::Severity::Error, e.code(), where.empty() ? "/" : where, e.what()});
    return std::nullopt;
  }
}

std::optional<AutomatonValue> Reader::read(const Json& j, const std::string& where) {
  const std::size_t errors_before = error_count();
  if (!j.is_object()) {
    error(ErrorCode::SyntaxError, where, "expected an object");
    return std::nullopt;
  }
  const Json* kind_field = field(j, "kind", where, true);
  if (!kind_field) return std::nullopt;
  auto kind = string(*kind_field, pointer(where, "kind"));
  if (!kind) return std::nullopt;
  if (!kKinds.contains(*kind)) {
    error(ErrorCode::SyntaxError, pointer(where, "kind"), "unknown kind '" + *kind + "'");
    return std::nullopt;
  }

  std::optional<Alphabet> alphabet;
  if (const Json* f = field(j, "alphabet", where, true)) {
    if (auto symbols = string_list(*f, pointer(where, "alphabet"))) {
      try {
        alphabet.emplace(std::move(*symbols));
      } catch (const Error& e) {
        error(e.code(), pointer(where, "alphabet"), e.what());
      }
    }
  }
  if (!alphabet) return std::nullopt;

  if (*kind == "decomposition") {
    auto l = read_decomposition(j, *alphabet, where);
    if (!l || error_count() != errors_before) return std::nullopt;
    return AutomatonValue(std::move(*l));
  }

  std::optional<StateTable> states;
  if (const Json* f = field(j, "states", where, true)) {
    if (auto names = string_list(*f, pointer(where, "states"))) {
      try {
        states.emplace(std::move(*names));
      } catch (const Error& e) {
        error(e.code(), pointer(where, "states"), e.what());
      }
    }
  }
  if (!states) return std::nullopt;

  std::optional<StateId> initial;
  if (const Json* f = field(j, "initial", where, true)) initial = state(*states, *f, pointer(where, "initial"));

  const std::size_t n = states->size();
  const std::size_t sigma = alphabet->size();
  const bool crisp_deterministic = (*kind == "dfa" || *kind == "cdthfa");
  const bool crisp_sets = (*kind == "nfa" || *kind == "cnthfa");

  std::vector<WeightedTransition> weighted;
  std::set<std::tuple<StateId, SymbolId, StateId>> weighted_seen;
  std::vector<std::optional<StateId>> det_table(n * sigma);
  std::vector<std::optional<StateSet>> set_table(n * sigma);

  const Json empty_array = Json::array();
  const Json* transitions = field(j, "transitions", where, false);
  if (!transitions) transitions = &empty_array;
  const std::string tw = pointer(where, "transitions");
  if (!transitions->is_array()) {
    error(ErrorCode::SyntaxError, tw, "expected an array of transitions");
  } else {
    for (std::size_t i = 0; i < transitions->size(); ++i) {
      const Json& t = (*transitions)[i];
      const std::string at = pointer(tw, i);
      if (!t.is_object()) {
        error(ErrorCode::SyntaxError, at, "expected a transition object");
        continue;
      }
      const Json* from_f = field(t, "from", at, true);
      const Json* symbol_f = field(t, "symbol", at, true);
      const Json* to_f = field(t, "to", at, true);
      if (!from_f || !symbol_f || !to_f) continue;
      auto from = state(*states, *from_f, pointer(at, "from"));
      auto a = symbol(*alphabet, *symbol_f, pointer(at, "symbol"));
      if (*kind == "nthfa") {
        auto to = state(*states, *to_f, pointer(at, "to"));
        const Json* value_f = field(t, "value", at, true);
        auto value = value_f ? thfe(*value_f, pointer(at, "value")) : std::nullopt;
        if (!from || !a || !to || !value) continue;
        if (!weighted_seen.emplace(*from, *a, *to).second) {
          error(ErrorCode::DuplicateTransition, at,
                "transition " + states->name(*from) + " -" + (*alphabet)[*a] + "-> " + states->name(*to) +
                    " listed twice");
          continue;
        }
        weighted.push_back({*from, *a, *to, std::move(*value)});
      } else if (crisp_deterministic) {
        auto to = state(*states, *to_f, pointer(at, "to"));
        if (!from || !a || !to) continue;
        auto& slot = det_table[*from * sigma + *a];
        if (slot) {
          error(ErrorCode::DuplicateTransition, at,
                "transition (" + states->name(*from) + ", " + (*alphabet)[*a] + ") listed twice");
          continue;
        }
        slot = *to;
      } else if (crisp_sets) {
        auto to = state_list(*states, *to_f, pointer(at, "to"));
        if (!from || !a || !to) continue;
        auto& slot = set_table[*from * sigma + *a];
        if (slot) {
          error(ErrorCode::DuplicateTransition, at,
                "transition (" + states->name(*from) + ", " + (*alphabet)[*a] + ") listed twice");
          continue;
        }
        slot = std::move(*to);
      }
    }
  }

  if (crisp_deterministic) {
    for (StateId q = 0; q < n; ++q)
      for (SymbolId a = 0; a < sigma; ++a)
        if (!det_table[q * sigma + a])
          error(ErrorCode::IncompleteTransition, tw,
                "missing transition for (" + states->name(q) + ", " + (*alphabet)[a] + ")");
  }

  // Final part: a list of names for classical kinds, a state -> THFE map otherwise.
  std::vector<bool> final_flags(n, false);
  std::vector<Thfe> final_map(n, Thfe::zero());
  const std::string fw = pointer(where, "final");
  const bool classical = (*kind == "dfa" || *kind == "nfa");
  if (const Json* f = field(j, "final", where, false)) {
    if (classical) {
      if (auto finals = state_list(*states, *f, fw))
        for (StateId q : *finals) final_flags[q] = true;
    } else if (!f->is_object()) {
      error(ErrorCode::SyntaxError, fw, "expected an object mapping states to degree lists");
    } else {
      for (const auto& [name, value] : f->items()) {
        const std::string at = pointer(fw, name);
        if (!states->contains(name)) {
          error(ErrorCode::UnknownState, at, "unknown state '" + name + "'");
          continue;
        }
        if (auto x = thfe(value, at)) final_map[states->id_of(name)] = std::move(*x);
      }
    }
  }

  if (!initial || error_count() != errors_before) return std::nullopt;

  auto det_delta = [&] {
    std::vector<StateId> out;
    for (const auto& slot : det_table) out.push_back(*slot);
    return out;
  };
  auto set_delta = [&] {
    std::vector<StateSet> out;
    for (const auto& slot : set_table) out.push_back(slot.value_or(StateSet{}));
    return out;
  };

  if (*kind == "dfa")
    return build<Dfa>([&] { return Dfa(*states, *alphabet, det_delta(), *initial, final_flags); }, diags_, where);
  if (*kind == "nfa")
    return build<Nfa>([&] { return Nfa(*states, *alphabet, set_delta(), *initial, final_flags); }, diags_, where);
  if (*kind == "cdthfa")
    return build<Cdthfa>([&] { return Cdthfa(*states, *alphabet, det_delta(), *initial, final_map); }, diags_,
                         where);
  if (*kind == "cnthfa")
    return build<Cnthfa>([&] { return Cnthfa(*states, *alphabet, set_delta(), *initial, final_map); }, diags_,
                         where);
  return build<Nthfa>([&] { return Nthfa(*states, *alphabet, weighted, *initial, final_map); }, diags_, where);
}

std::optional<LevelDecomposition> Reader::read_decomposition(const Json& j, const Alphabet& alphabet,
                                                             const std::string& where) {
  const Json* levels_f = field(j, "levels", where, true);
  if (!levels_f) return std::nullopt;
  const std::string lw = pointer(where, "levels");
  if (!levels_f->is_array()) {
    error(ErrorCode::SyntaxError, lw, "expected an array of levels");
    return std::nullopt;
  }
  std::vector<Level> levels;
  std::set<Thfe> keys;
  bool ok = true;
  for (std::size_t i = 0; i < levels_f->size(); ++i) {
    const Json& level = (*levels_f)[i];
    const std::string at = pointer(lw, i);
    if (!level.is_object()) {
      error(ErrorCode::SyntaxError, at, "expected a level object");
      ok = false;
      continue;
    }
    const Json* k_f = field(level, "k", at, true);
    const Json* nfa_f = field(level, "nfa", at, true);
    auto k = k_f ? thfe(*k_f, pointer(at, "k")) : std::nullopt;
    auto nfa = nfa_f ? read(*nfa_f, pointer(at, "nfa")) : std::nullopt;
    if (!k || !nfa) {
      ok = false;
      continue;
    }
    if (!std::holds_alternative<Nfa>(*nfa)) {
      error(ErrorCode::SyntaxError, pointer(at, "nfa"), "level automata must have kind \"nfa\"");
      ok = false;
      continue;
    }
    if (!(std::get<Nfa>(*nfa).alphabet() == alphabet)) {
      error(ErrorCode::AlphabetMismatch, pointer(at, "nfa"), "level alphabet differs from the decomposition's");
      ok = false;
      continue;
    }
    if (!keys.insert(*k).second) {
      error(ErrorCode::DuplicateLevel, pointer(at, "k"), "level " + to_string(*k) + " appears twice");
      ok = false;
      continue;
    }
    levels.push_back({std::move(*k), std::get<Nfa>(std::move(*nfa))});
  }
  if (!ok) return std::nullopt;
  return LevelDecomposition(alphabet, std::move(levels));
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

std::optional<Json> parse_json(std::string_view text, std::vector<Diagnostic>& diags) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports the byte just past the offending token, 1-based.
    diags.push_back({Diagnostic::Severity::Error, ErrorCode::SyntaxError,
                     "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)), e.what()});
    return std::nullopt;
  }
}

Json thfe_json(const Thfe& x) {
  Json out = Json::array();
  for (const auto& d : x.degrees()) out.push_back(d.to_string());
  return out;
}

Json header(std::string_view kind, const Alphabet& alphabet, const StateTable& states, StateId initial) {
  Json j;
  j["kind"] = kind;
  j["alphabet"] = alphabet.symbols();
  j["states"] = states.names();
  j["initial"] = states.name(initial);
  return j;
}

Json transition(const StateTable& states, const Alphabet& alphabet, StateId q, SymbolId a) {
  Json t;
  t["from"] = states.name(q);
  t["symbol"] = alphabet[a];
  return t;
}

Json names_of(const StateTable& states, const StateSet& set) {
  Json out = Json::array();
  for (StateId p : set) out.push_back(states.name(p));
  return out;
}

Json final_object(const StateTable& states, const std::vector<Thfe>& final_map) {
  Json out = Json::object();
  for (StateId q = 0; q < states.size(); ++q) out[states.name(q)] = thfe_json(final_map[q]);
  return out;
}

}  // namespace

std::string_view kind_name(const AutomatonValue& value) {
  return std::visit(overloaded{[](const Dfa&) { return std::string_view("dfa"); },
                               [](const Nfa&) { return std::string_view("nfa"); },
                               [](const Nthfa&) { return std::string_view("nthfa"); },
                               [](const Cnthfa&) { return std::string_view("cnthfa"); },
                               [](const Cdthfa&) { return std::string_view("cdthfa"); },
                               [](const LevelDecomposition&) { return std::string_view("decomposition"); }},
                    value);
}

std::string to_string(const Diagnostic& d) {
  return std::string(d.severity == Diagnostic::Severity::Error ? "error" : "warning") + " " +
         std::string(to_string(d.code)) + " at " + d.where + ": " + d.message;
}

std::vector<Diagnostic> validate(std::string_view text) {
  std::vector<Diagnostic> diags;
  if (auto j = parse_json(text, diags)) Reader(diags).read(*j, "");
  return diags;
}

AutomatonDocument parse_document(std::string_view text) {
  std::vector<Diagnostic> diags;
  std::optional<AutomatonValue> value;
  Json metadata;
  if (auto j = parse_json(text, diags)) {
    value = Reader(diags).read(*j, "");
    if (j->is_object() && j->contains("metadata")) metadata = (*j)["metadata"];
  }
  for (const auto& d : diags)
    if (d.severity == Diagnostic::Severity::Error) throw Error(d.code, d.where + ": " + d.message);
  AutomatonDocument doc{std::move(*value), std::move(metadata), {}};
  for (const auto& d : diags) doc.warnings.push_back(to_string(d));
  return doc;
}

Json to_json(const AutomatonValue& value) {
  return std::visit(
      overloaded{
          [](const Dfa& d) {
            Json j = header("dfa", d.alphabet(), d.states(), d.initial());
            Json ts = Json::array();
            for (StateId q = 0; q < d.states().size(); ++q)
              for (SymbolId a = 0; a < d.alphabet().size(); ++a) {
                Json t = transition(d.states(), d.alphabet(), q, a);
                t["to"] = d.states().name(d.delta(q, a));
                ts.push_back(std::move(t));
              }
            j["transitions"] = std::move(ts);
            Json finals = Json::array();
            for (StateId q = 0; q < d.states().size(); ++q)
              if (d.is_final(q)) finals.push_back(d.states().name(q));
            j["final"] = std::move(finals);
            return j;
          },
          [](const Nfa& n) {
            Json j = header("nfa", n.alphabet(), n.states(), n.initial());
            Json ts = Json::array();
            for (StateId q = 0; q < n.states().size(); ++q)
              for (SymbolId a = 0; a < n.alphabet().size(); ++a) {
                if (n.delta(q, a).empty()) continue;
                Json t = transition(n.states(), n.alphabet(), q, a);
                t["to"] = names_of(n.states(), n.delta(q, a));
                ts.push_back(std::move(t));
              }
            j["transitions"] = std::move(ts);
            Json finals = Json::array();
            for (StateId q = 0; q < n.states().size(); ++q)
              if (n.is_final(q)) finals.push_back(n.states().name(q));
            j["final"] = std::move(finals);
            return j;
          },
          [](const Nthfa& m) {
            Json j = header("nthfa", m.alphabet(), m.states(), m.initial());
            Json ts = Json::array();
            for (StateId q = 0; q < m.states().size(); ++q)
              for (SymbolId a = 0; a < m.alphabet().size(); ++a)
                for (const auto& [p, v] : m.row(q, a)) {
                  Json t = transition(m.states(), m.alphabet(), q, a);
                  t["to"] = m.states().name(p);
                  t["value"] = thfe_json(v);
                  ts.push_back(std::move(t));
                }
            j["transitions"] = std::move(ts);
            j["final"] = final_object(m.states(), m.final_map());
            return j;
          },
          [](const Cnthfa& n) {
            Json j = header("cnthfa", n.alphabet(), n.states(), n.initial());
            Json ts = Json::array();
            for (StateId q = 0; q < n.states().size(); ++q)
              for (SymbolId a = 0; a < n.alphabet().size(); ++a) {
                if (n.delta(q, a).empty()) continue;
                Json t = transition(n.states(), n.alphabet(), q, a);
                t["to"] = names_of(n.states(), n.delta(q, a));
                ts.push_back(std::move(t));
              }
            j["transitions"] = std::move(ts);
            j["final"] = final_object(n.states(), n.final_map());
            return j;
          },
          [](const Cdthfa& d) {
            Json j = header("cdthfa", d.alphabet(), d.states(), d.initial());
            Json ts = Json::array();
            for (StateId q = 0; q < d.states().size(); ++q)
              for (SymbolId a = 0; a < d.alphabet().size(); ++a) {
                Json t = transition(d.states(), d.alphabet(), q, a);
                t["to"] = d.states().name(d.delta(q, a));
                ts.push_back(std::move(t));
              }
            j["transitions"] = std::move(ts);
            j["final"] = final_object(d.states(), d.final_map());
            return j;
          },
          [](const LevelDecomposition& l) {
            Json j;
            j["kind"] = "decomposition";
            j["alphabet"] = l.alphabet().symbols();
            Json levels = Json::array();
            for (const auto& level : l.levels()) {
              Json entry;
              entry["k"] = thfe_json(level.key);
              entry["nfa"] = to_json(AutomatonValue(level.nfa));
              levels.push_back(std::move(entry));
            }
            j["levels"] = std::move(levels);
            return j;
          }},
      value);
}

std::string serialize(const AutomatonValue& value, const Json& metadata) {
  Json j = to_json(value);
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j.dump(2) + "\n";
}

std::string serialize(const AutomatonDocument& doc) { return serialize(doc.automaton, doc.metadata); }

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w;
  if (text.empty()) return w;
  if (alphabet.single_characters()) {
    for (char c : text) w.emplace_back(1, c);
  } else {
    std::size_t start = 0;
    while (true) {
      auto dot = text.find(kSymbolSeparator, start);
      w.emplace_back(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  alphabet.encode(w);
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  const bool joined = alphabet.single_characters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !joined) out += kSymbolSeparator;
    out += w[i];
  }
  return out;
}

}  // namespace thf
