#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "thf/format.hpp"

using namespace thf;
using namespace thf::testing;

namespace {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_code(const std::vector<Diagnostic>& ds, ErrorCode code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

const char* kCycleMissingRow = R"({"kind":"cdthfa","alphabet":["a"],"states":["q0","q1"],"initial":"q0",
 "transitions":[{"from":"q0","symbol":"a","to":"q1"}],
 "final":{"q0":["0"],"q1":["1"]}})";

}  // namespace

TEST_CASE("fixture M1 parses to the expected automaton") {
  CHECK(validate(fixture_text("m1.json")).empty());
  const auto doc = parse_document(fixture_text("m1.json"));
  REQUIRE(std::holds_alternative<Nthfa>(doc.automaton));
  const Nthfa& m = std::get<Nthfa>(doc.automaton);
  const Nthfa expected = fixture_m1();
  CHECK(m.states().names() == expected.states().names());
  CHECK(m.final_map() == expected.final_map());
  for (StateId p = 0; p < 2; ++p)
    for (StateId r = 0; r < 2; ++r) CHECK(m.psi(p, 0, r) == expected.psi(p, 0, r));
  CHECK(serialize(m) == serialize(expected));
}

TEST_CASE("non-canonical degrees parse with a warning") {
  const std::string text = R"({"kind":"nthfa","alphabet":["a"],"states":["q0"],"initial":"q0",
    "transitions":[],"final":{"q0":["0.5","1/2"]}})";
  const auto diags = validate(text);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].severity == Diagnostic::Severity::Warning);
  CHECK(diags[0].code == ErrorCode::InvalidTHFE);
  const auto doc = parse_document(text);
  CHECK(doc.warnings.size() == 1);
  CHECK(std::get<Nthfa>(doc.automaton).final_value(0) == h({"1/2"}));
}

TEST_CASE("missing final entries default to zero") {
  const auto doc = parse_document(R"({"kind":"nthfa","alphabet":["a"],"states":["q0","q1"],"initial":"q0",
    "transitions":[],"final":{"q1":["1"]}})");
  CHECK(std::get<Nthfa>(doc.automaton).final_value(0) == Thfe::zero());
}

TEST_CASE("diagnostics") {
  const auto missing = validate(kCycleMissingRow);
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].code == ErrorCode::IncompleteTransition);
  CHECK(missing[0].severity == Diagnostic::Severity::Error);
  CHECK_THROWS_AS(parse_document(kCycleMissingRow), Error);

  CHECK(has_code(validate(R"({"kind":"nthfa","alphabet":["a"],"states":["q0"],"initial":"q0",
    "transitions":[],"final":{"q0":[]}})"),
                 ErrorCode::InvalidTHFE));
  CHECK(has_code(validate(R"({"kind":"nthfa","alphabet":["a"],"states":["q0"],"initial":"q9",
    "transitions":[],"final":{}})"),
                 ErrorCode::UnknownState));
  CHECK(has_code(validate(R"({"kind":"nthfa","alphabet":["a"],"states":["q0"],"initial":"q0",
    "transitions":[{"from":"q0","symbol":"z","to":"q0","value":["1"]}],"final":{}})"),
                 ErrorCode::UnknownSymbol));
  CHECK(has_code(validate(R"({"kind":"nthfa","alphabet":["a"],"states":["q0"],"initial":"q0",
    "transitions":[{"from":"q0","symbol":"a","to":"q0","value":["3/2"]}],"final":{}})"),
                 ErrorCode::DegreeOutOfRange));
  CHECK(has_code(validate(R"({"kind":"dfa","alphabet":["a"],"states":["q0"],"initial":"q0",
    "transitions":[{"from":"q0","symbol":"a","to":"q0"},{"from":"q0","symbol":"a","to":"q0"}],"final":[]})"),
                 ErrorCode::DuplicateTransition));
  CHECK(has_code(validate(R"({"kind":"weird"})"), ErrorCode::SyntaxError));

  const auto broken = validate("{\n\"kind\": \"nthfa\",\n  oops\n}");
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].code == ErrorCode::SyntaxError);
  CHECK(broken[0].where == "line 3");
}

TEST_CASE("every fixture validates and round-trips") {
  for (const char* name : {"m1.json", "n1.json", "d1.json", "const-half.json", "hes2.json", "nfa1.json",
                           "dfa-cycle.json"}) {
    CAPTURE(name);
    const std::string text = fixture_text(name);
    CHECK(validate(text).empty());
    const std::string once = serialize(parse_document(text));
    CHECK(serialize(parse_document(once)) == once);
  }
}

TEST_CASE("decomposition documents round-trip") {
  const auto l = decompose(fixture_m1());
  const std::string once = serialize(l);
  const auto doc = parse_document(once);
  REQUIRE(std::holds_alternative<LevelDecomposition>(doc.automaton));
  CHECK(serialize(doc) == once);
  for (const auto& w : all_words(unary(), 5))
    CHECK(eval_decomposition(std::get<LevelDecomposition>(doc.automaton), w) == nthfa_eval(fixture_m1(), w));
}

TEST_CASE("serialization round-trips random automata") {
  Generator gen(19);
  for (int i = 0; i < 40; ++i) {
    const Alphabet sigma = gen.alphabet();
    for (const AutomatonValue& v :
         {AutomatonValue(gen.nthfa(sigma)), AutomatonValue(gen.cnthfa(sigma)), AutomatonValue(gen.cdthfa(sigma)),
          AutomatonValue(gen.nfa(sigma)), AutomatonValue(nfa_to_dfa(gen.nfa(sigma)))}) {
      const std::string once = serialize(v);
      CHECK(serialize(parse_document(once)) == once);
    }
  }
}

TEST_CASE("metadata is carried through") {
  Json meta;
  meta["note"] = "kept";
  const std::string text = serialize(fixture_cycle(), meta);
  CHECK(parse_document(text).metadata["note"] == "kept");
}

TEST_CASE("words") {
  CHECK(parse_word("", unary()).empty());
  CHECK(parse_word("aa", unary()) == word("aa"));
  CHECK(parse_word("ab", Alphabet({"a", "b"})) == word("ab"));
  const Alphabet long_symbols({"go", "stop"});
  CHECK(parse_word("go.stop.go", long_symbols) == Word{"go", "stop", "go"});
  CHECK(format_word(Word{"go", "stop"}, long_symbols) == "go.stop");
  CHECK(format_word(word("ab"), Alphabet({"a", "b"})) == "ab");
  CHECK(format_word({}, unary()) == "");
  CHECK_THROWS_AS(parse_word("ax", Alphabet({"a", "b"})), Error);
}
