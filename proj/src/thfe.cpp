#include "thf/thfe.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "thf/errors.hpp"

namespace thf {

Thfe Thfe::canonicalize(std::span<const Rational> raw) {
  if (raw.empty()) throw Error(ErrorCode::InvalidTHFE, "a hesitant element needs at least one degree");
  std::vector<Rational> values(raw.begin(), raw.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return Thfe(std::move(values));
}

Thfe::Thfe(std::initializer_list<Rational> raw) : Thfe(canonicalize({raw.begin(), raw.size()})) {}

std::strong_ordering operator<=>(const Thfe& a, const Thfe& b) {
  return std::lexicographical_compare_three_way(a.degrees_.begin(), a.degrees_.end(),
                                                b.degrees_.begin(), b.degrees_.end());
}

namespace {

Thfe from_unsorted(std::vector<Rational> values) { return Thfe::canonicalize(values); }

template <class Pick>
Thfe combine(const Thfe& a, const Thfe& b, Pick pick) {
  std::vector<Rational> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.degrees())
    for (const auto& y : b.degrees()) out.push_back(pick(x, y));
  return from_unsorted(std::move(out));
}

}  // namespace

Thfe inf_combination(const Thfe& a, const Thfe& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}

Thfe sup_combination(const Thfe& a, const Thfe& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}

Thfe sup_combination_n(std::span<const Thfe> family) {
  Thfe acc = Thfe::zero();
  for (const auto& x : family) acc = sup_combination(acc, x);
  return acc;
}

bool leq(const Thfe& a, const Thfe& b) { return sup_combination(a, b) == b; }

bool is_degenerate(const Thfe& x) { return x.size() == 1; }

std::set<Thfe> generated_closure(const std::set<Thfe>& seed, std::size_t budget) {
  // `seen` = closed ∪ pending
  std::set<Thfe> seen = seed;
  std::vector<Thfe> closed;
  std::deque<Thfe> pending(seed.begin(), seed.end());
  auto admit = [&](Thfe x) {
    if (!seen.insert(x).second) return;
    if (seen.size() > budget)
      throw Error(ErrorCode::ClosureBudgetExceeded,
                  "generated closure exceeds " + std::to_string(budget) + " elements");
    pending.push_back(std::move(x));
  };
  while (!pending.empty()) {
    Thfe next = std::move(pending.front());
    pending.pop_front();
    closed.push_back(next);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      admit(inf_combination(next, closed[i]));
      admit(sup_combination(next, closed[i]));
    }
  }
  return seen;
}

std::string to_string(const Thfe& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Thfe& x) {
  os << '{';
  bool first = true;
  for (const auto& d : x.degrees()) {
    if (!first) os << ", ";
    os << d;
    first = false;
  }
  return os << '}';
}

}  // namespace thf
