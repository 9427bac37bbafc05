#pragma once

#include <cstddef>
#include <vector>

#include "diamond/poly.hpp"
#include "diamond/word.hpp"

namespace diamond {

/// A rewriting rule lhs -> rhs with a monic word on the left.
struct Rule {
  Word lhs;
  Poly rhs;

  /// lhs - rhs, the relation the rule orients.
  Poly relation() const;
};

/// A rewriting system (X, W, f): an alphabet, rules with pairwise distinct
/// left-hand sides, and the ground field. Immutable after construction.
class System {
 public:
  /// Validates every rule: nonempty lhs over the alphabet, rhs over `field`
  /// and the alphabet, lhs not in supp(rhs), distinct lhs words. Throws
  /// PreconditionError on the first violation.
  System(Alphabet alphabet, Field field, std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  Field field() const { return field_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t i) const { return rules_.at(i); }
  std::size_t size() const { return rules_.size(); }

  /// No lhs of length one and no lhs is a subword of another.
  bool is_minimal() const { return minimal_; }
  /// Every rhs is zero.
  bool is_monomial() const;
  /// Every rhs term has the length of its lhs.
  bool is_length_homogeneous() const;
  std::size_t max_lhs_length() const;

  /// True iff some lhs occurs in `w`.
  bool is_reducible(const Word& w) const;
  /// Number of occurrences of all lhs words in `w`.
  std::size_t count_lhs_occurrences(const Word& w) const;

  /// The same system with every rhs replaced by zero.
  System monomial_part() const;
  System with_rule(Rule rule) const;

 private:
  Alphabet alphabet_;
  Field field_;
  std::vector<Rule> rules_;
  bool minimal_ = true;
};

}  // namespace diamond
