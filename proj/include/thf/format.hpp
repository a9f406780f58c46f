#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "thf/classic.hpp"
#include "thf/constructions.hpp"
#include "thf/errors.hpp"
#include "thf/hesitant.hpp"

namespace thf {

using Json = nlohmann::ordered_json;

using AutomatonValue = std::variant<Dfa, Nfa, Nthfa, Cnthfa, Cdthfa, LevelDecomposition>;

/// "dfa", "nfa", "nthfa", "cnthfa", "cdthfa" or "decomposition".
std::string_view kind_name(const AutomatonValue& value);

struct AutomatonDocument {
  AutomatonValue automaton;
  /// Free-form annotations carried through unchanged; null when absent.
  Json metadata;
  /// Non-fatal findings from parsing (e.g. a THFE that had to be canonicalized).
  std::vector<std::string> warnings;
};

struct Diagnostic {
  enum class Severity { Warning, Error };
  Severity severity;
  ErrorCode code;
  /// JSON pointer into the document, or "line N" for syntax errors.
  std::string where;
  std::string message;
};

std::string to_string(const Diagnostic& d);

/// Every invariant violation in the document. Empty iff the document is a
/// well-formed canonical automaton.
std::vector<Diagnostic> validate(std::string_view text);

/// Throws the first error-severity diagnostic as an Error.
AutomatonDocument parse_document(std::string_view text);

/// Canonical text: two-space indented JSON with a trailing newline. Weights of
/// {0} are omitted from nthfa transitions and empty rows from cnthfa/nfa.
std::string serialize(const AutomatonDocument& doc);
std::string serialize(const AutomatonValue& value, const Json& metadata = Json());
Json to_json(const AutomatonValue& value);

/// The empty string is λ. Single-character alphabets split per character,
/// otherwise symbols are separated by '.'. Throws UnknownSymbol.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace thf
