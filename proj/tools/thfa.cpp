// Command-line front end: evaluates, combines, decomposes and compares
// automata stored in the JSON exchange format.
//
// Exit codes: 0 ok / equivalent, 1 not equivalent, 2 invalid input,
// 3 closure budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "thf/constructions.hpp"
#include "thf/format.hpp"
#include "thf/oracle.hpp"

namespace fs = std::filesystem;
using namespace thf;

namespace {

constexpr int kOk = 0;
constexpr int kNotEquivalent = 1;
constexpr int kInvalidInput = 2;
constexpr int kBudgetExceeded = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AutomatonDocument load(const std::string& path) {
  auto doc = parse_document(read_file(path));
  for (const auto& w : doc.warnings) std::cerr << path << ": " << w << "\n";
  return doc;
}

HesitantAutomaton hesitant(const AutomatonDocument& doc, const std::string& path) {
  return std::visit(
      [&](const auto& x) -> HesitantAutomaton {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nthfa> || std::is_same_v<T, Cnthfa> || std::is_same_v<T, Cdthfa>)
          return x;
        else
          throw UsageError(path + ": expected an nthfa, cnthfa or cdthfa document, got " +
                           std::string(kind_name(doc.automaton)));
      },
      doc.automaton);
}

const Alphabet& alphabet_of_value(const AutomatonValue& v) {
  return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, v);
}

void print_verdict(const EquivalenceVerdict& verdict, const Alphabet& alphabet, std::string_view yes,
                   std::string_view no) {
  if (verdict.equivalent) {
    std::cout << yes << "\n";
    return;
  }
  std::cout << no << "\n";
  std::cout << "counterexample: " << Json(format_word(*verdict.counterexample, alphabet)).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Typical hesitant fuzzy automata toolkit"};
  app.require_subcommand(1);
  std::size_t budget = kDefaultClosureBudget;
  app.add_option("--budget", budget, "Ceiling on generated closures / reachable value vectors")
      ->capture_default_str();

  std::string file_a, file_b, word_text, out_dir;
  bool lambda = false;
  std::size_t max_length = kDefaultOracleBound;

  auto* eval = app.add_subcommand("eval", "Evaluate a word");
  eval->add_option("file", file_a)->required();
  eval->add_option("word", word_text, "Word; empty string is the empty word");
  eval->add_flag("--lambda", lambda, "Evaluate the empty word");

  auto* unite = app.add_subcommand("union", "Automaton for f1 ⊔ f2");
  unite->add_option("a", file_a)->required();
  unite->add_option("b", file_b)->required();

  auto* intersect = app.add_subcommand("intersect", "Deterministic automaton for f1 ⊗ f2");
  intersect->add_option("a", file_a)->required();
  intersect->add_option("b", file_b)->required();

  auto* determinize = app.add_subcommand("determinize", "Subset construction");
  determinize->add_option("file", file_a)->required();

  auto* crispify = app.add_subcommand("crispify", "Crisp transitions plus a sink state");
  crispify->add_option("file", file_a)->required();

  auto* embed = app.add_subcommand("embed", "Crisp automaton as zero-one weighted automaton");
  embed->add_option("file", file_a)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Level automata for every value in the range");
  decompose_cmd->add_option("file", file_a)->required();
  decompose_cmd->add_option("-o,--output", out_dir, "Directory for manifest.json and level-N.json");

  auto* recompose_cmd = app.add_subcommand("recompose", "Weighted automaton from a decomposition");
  recompose_cmd->add_option("file", file_a)->required();

  auto* range = app.add_subcommand("range", "All values the language takes");
  range->add_option("file", file_a)->required();

  auto* equiv = app.add_subcommand("equiv", "Decide language equality");
  equiv->add_option("a", file_a)->required();
  equiv->add_option("b", file_b)->required();

  auto* validate_cmd = app.add_subcommand("validate", "List document diagnostics");
  validate_cmd->add_option("file", file_a)->required();

  auto* oracle = app.add_subcommand("oracle-check", "Brute-force comparison on all short words");
  oracle->add_option("a", file_a)->required();
  oracle->add_option("b", file_b, "Second automaton; without it the fast evaluator is checked against the reference");
  oracle->add_option("--max-length", max_length)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (eval->parsed()) {
      auto doc = load(file_a);
      const Alphabet& alphabet = alphabet_of_value(doc.automaton);
      if (lambda && !word_text.empty()) throw UsageError("give either a word or --lambda");
      const Word w = parse_word(word_text, alphabet);
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Dfa>)
              std::cout << (dfa_accepts(x, w) ? "accept" : "reject") << "\n";
            else if constexpr (std::is_same_v<T, Nfa>)
              std::cout << (nfa_accepts(x, w) ? "accept" : "reject") << "\n";
            else if constexpr (std::is_same_v<T, LevelDecomposition>)
              std::cout << eval_decomposition(x, w) << "\n";
            else
              std::cout << evaluate(HesitantAutomaton(x), w) << "\n";
          },
          doc.automaton);
      return kOk;
    }
    if (unite->parsed()) {
      auto a = load(file_a), b = load(file_b);
      std::cout << serialize(union_nthfa(to_nthfa(hesitant(a, file_a)), to_nthfa(hesitant(b, file_b))));
      return kOk;
    }
    if (intersect->parsed()) {
      auto a = load(file_a), b = load(file_b);
      std::cout << serialize(
          intersect_cdthfa(to_cdthfa(hesitant(a, file_a), budget), to_cdthfa(hesitant(b, file_b), budget)));
      return kOk;
    }
    if (determinize->parsed()) {
      auto doc = load(file_a);
      if (const auto* n = std::get_if<Nfa>(&doc.automaton)) {
        std::cout << serialize(nfa_to_dfa(*n));
      } else if (const auto* d = std::get_if<Dfa>(&doc.automaton)) {
        std::cout << serialize(*d);
      } else {
        std::cout << serialize(to_cdthfa(hesitant(doc, file_a), budget));
      }
      return kOk;
    }
    if (crispify->parsed()) {
      auto doc = load(file_a);
      auto result = crispify_nthfa(to_nthfa(hesitant(doc, file_a)), budget);
      Json metadata;
      metadata["normalized"] = result.normalized;
      std::cout << serialize(result.automaton, metadata);
      return kOk;
    }
    if (embed->parsed()) {
      auto doc = load(file_a);
      std::cout << serialize(to_nthfa(hesitant(doc, file_a)));
      return kOk;
    }
    if (decompose_cmd->parsed()) {
      auto doc = load(file_a);
      auto l = decompose(to_nthfa(hesitant(doc, file_a)), budget);
      const std::string manifest = serialize(l);
      if (out_dir.empty()) {
        std::cout << manifest;
        return kOk;
      }
      fs::create_directories(out_dir);
      auto write = [&](const std::string& name, const std::string& text) {
        const fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + path.string() + "'");
        out << text;
        std::cout << path.string() << "\n";
      };
      write("manifest.json", manifest);
      for (std::size_t i = 0; i < l.levels().size(); ++i) {
        Json metadata;
        metadata["k"] = to_string(l.levels()[i].key);
        write("level-" + std::to_string(i) + ".json", serialize(l.levels()[i].nfa, metadata));
      }
      return kOk;
    }
    if (recompose_cmd->parsed()) {
      auto doc = load(file_a);
      const auto* l = std::get_if<LevelDecomposition>(&doc.automaton);
      if (!l) throw UsageError(file_a + ": expected a decomposition document");
      std::cout << serialize(recompose(*l));
      return kOk;
    }
    if (range->parsed()) {
      auto doc = load(file_a);
      for (const auto& k : compute_range(to_nthfa(hesitant(doc, file_a)), budget)) std::cout << k << "\n";
      return kOk;
    }
    if (equiv->parsed()) {
      auto a = load(file_a), b = load(file_b);
      auto ha = hesitant(a, file_a), hb = hesitant(b, file_b);
      auto verdict = equivalent(ha, hb, budget);
      print_verdict(verdict, alphabet_of(ha), "equivalent", "not equivalent");
      return verdict.equivalent ? kOk : kNotEquivalent;
    }
    if (validate_cmd->parsed()) {
      auto diags = validate(read_file(file_a));
      bool failed = false;
      for (const auto& d : diags) {
        std::cout << to_string(d) << "\n";
        failed = failed || d.severity == Diagnostic::Severity::Error;
      }
      if (diags.empty()) std::cout << "valid\n";
      return failed ? kInvalidInput : kOk;
    }
    if (oracle->parsed()) {
      auto a = load(file_a);
      auto ha = hesitant(a, file_a);
      if (!file_b.empty()) {
        auto b = load(file_b);
        auto verdict = languages_agree_up_to(ha, hesitant(b, file_b), max_length);
        print_verdict(verdict, alphabet_of(ha), "agree up to length " + std::to_string(max_length), "disagree");
        return verdict.equivalent ? kOk : kNotEquivalent;
      }
      const Nthfa m = to_nthfa(ha);
      WordStream words(m.alphabet(), max_length);
      std::size_t checked = 0;
      while (auto s = words.next()) {
        const Word w = m.alphabet().decode(*s);
        const Thfe fast = nthfa_eval(m, w);
        const Thfe reference = reference_eval(m, w, max_length);
        if (fast != reference) {
          std::cout << "disagree\n";
          std::cout << "counterexample: " << Json(format_word(w, m.alphabet())).dump() << "\n";
          std::cout << "fast: " << fast << "\nreference: " << reference << "\n";
          return kNotEquivalent;
        }
        ++checked;
      }
      std::cout << "agree on " << checked << " words up to length " << max_length << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ClosureBudgetExceeded) {
      std::cerr << "budget-exceeded: " << e.what() << "\n";
      return kBudgetExceeded;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
