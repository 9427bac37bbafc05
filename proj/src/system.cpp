#include "diamond/system.hpp"

#include <algorithm>
#include <set>

#include "diamond/error.hpp"

namespace diamond {

Poly Rule::relation() const {
  Poly r = Poly::monomial(rhs.field(), lhs);
  r -= rhs;
  return r;
}

System::System(Alphabet alphabet, Field field, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), field_(field), rules_(std::move(rules)) {
  std::set<Word> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    std::string where = "rule " + std::to_string(i) + ": ";
    if (r.lhs.empty()) throw PreconditionError(where + "empty left-hand side");
    if (!alphabet_.contains(r.lhs)) throw PreconditionError(where + "lhs letter outside the alphabet");
    if (r.rhs.field() != field_) throw PreconditionError(where + "rhs is over a different field");
    for (const auto& [m, c] : r.rhs.terms())
      if (!alphabet_.contains(m)) throw PreconditionError(where + "rhs letter outside the alphabet");
    if (r.rhs.contains(r.lhs))
      throw PreconditionError(where + "lhs " + alphabet_.format(r.lhs) +
                              " occurs in its own right-hand side");
    if (!seen.insert(r.lhs).second)
      throw PreconditionError(where + "duplicate left-hand side " + alphabet_.format(r.lhs));
  }
  for (std::size_t i = 0; i < rules_.size() && minimal_; ++i) {
    if (rules_[i].lhs.size() == 1) minimal_ = false;
    for (std::size_t j = 0; j < rules_.size() && minimal_; ++j)
      if (i != j && rules_[j].lhs.contains(rules_[i].lhs)) minimal_ = false;
  }
}

bool System::is_monomial() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.rhs.is_zero(); });
}

bool System::is_length_homogeneous() const {
  for (const Rule& r : rules_)
    for (const auto& [m, c] : r.rhs.terms())
      if (m.size() != r.lhs.size()) return false;
  return true;
}

std::size_t System::max_lhs_length() const {
  std::size_t n = 0;
  for (const Rule& r : rules_) n = std::max(n, r.lhs.size());
  return n;
}

bool System::is_reducible(const Word& w) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const Rule& r) { return w.contains(r.lhs); });
}

std::size_t System::count_lhs_occurrences(const Word& w) const {
  std::size_t n = 0;
  for (const Rule& r : rules_) n += count_occurrences(r.lhs, w);
  return n;
}

System System::monomial_part() const {
  std::vector<Rule> rules;
  for (const Rule& r : rules_) rules.push_back({r.lhs, Poly(field_)});
  return System(alphabet_, field_, std::move(rules));
}

System System::with_rule(Rule rule) const {
  std::vector<Rule> rules = rules_;
  rules.push_back(std::move(rule));
  return System(alphabet_, field_, std::move(rules));
}

}  // namespace diamond
