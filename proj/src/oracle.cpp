#include "thf/oracle.hpp"

#include <vector>

#include "thf/errors.hpp"

namespace thf {

WordStream::WordStream(const Alphabet& alphabet, std::size_t max_length)
    : sigma_(alphabet.size()), max_length_(max_length) {}

std::size_t WordStream::count() const {
  std::size_t total = 0, layer = 1;
  for (std::size_t i = 0; i <= max_length_; ++i) {
    total += layer;
    layer *= sigma_;
  }
  return total;
}

std::optional<SymbolString> WordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current_;
  }
  // Odometer increment; on overflow move to the next length.
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (++current_[i] < sigma_) return current_;
    current_[i] = 0;
  }
  if (current_.size() == max_length_) {
    done_ = true;
    return std::nullopt;
  }
  current_.assign(current_.size() + 1, 0);
  return current_;
}

namespace {

Thfe literal_psi_hat(const Nthfa& m, StateId q, const SymbolString& w, std::size_t len, StateId q2) {
  if (len == 0) return q == q2 ? Thfe::one() : Thfe::zero();
  const SymbolId a = w[len - 1];
  std::vector<Thfe> terms;
  for (StateId mid = 0; mid < m.states().size(); ++mid)
    terms.push_back(inf_combination(literal_psi_hat(m, q, w, len - 1, mid), m.psi(mid, a, q2)));
  return sup_combination_n(terms);
}

void check_bound(const Word& w, std::size_t bound) {
  if (w.size() > bound)
    throw Error(ErrorCode::WordTooLong, "reference evaluation is limited to " + std::to_string(bound) +
                                            " symbols, got " + std::to_string(w.size()));
}

}  // namespace

Thfe reference_psi_hat(const Nthfa& m, StateId q, const Word& w, StateId q2, std::size_t bound) {
  check_bound(w, bound);
  if (q >= m.states().size() || q2 >= m.states().size())
    throw Error(ErrorCode::UnknownState, "state index out of range");
  const SymbolString s = m.alphabet().encode(w);
  return literal_psi_hat(m, q, s, s.size(), q2);
}

Thfe reference_eval(const Nthfa& m, const Word& w, std::size_t bound) {
  check_bound(w, bound);
  const SymbolString s = m.alphabet().encode(w);
  std::vector<Thfe> terms;
  for (StateId q = 0; q < m.states().size(); ++q)
    terms.push_back(inf_combination(literal_psi_hat(m, m.initial(), s, s.size(), q), m.final_value(q)));
  return sup_combination_n(terms);
}

std::set<Thfe> empirical_range(const Nthfa& m, std::size_t max_length) {
  std::set<Thfe> out;
  WordStream words(m.alphabet(), max_length);
  while (auto w = words.next()) out.insert(nthfa_eval(m, *w));
  return out;
}

EquivalenceVerdict languages_agree_up_to(const HesitantAutomaton& a, const HesitantAutomaton& b,
                                         std::size_t max_length) {
  if (!(alphabet_of(a) == alphabet_of(b)))
    throw Error(ErrorCode::AlphabetMismatch, "operands are over different alphabets");
  WordStream words(alphabet_of(a), max_length);
  while (auto w = words.next())
    if (evaluate(a, *w) != evaluate(b, *w)) return {false, alphabet_of(a).decode(*w)};
  return {true, std::nullopt};
}

}  // namespace thf
