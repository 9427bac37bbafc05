#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "diamond/system.hpp"

namespace diamond {

/// Weighted degree-lexicographic order: total weight first, then
/// lexicographic with respect to a chosen ranking of the generators.
class DeglexOrder {
 public:
  /// `ascending` lists every generator once, smallest first. Weights must be
  /// positive. Throws PreconditionError otherwise.
  DeglexOrder(std::vector<std::uint64_t> weights, std::vector<Letter> ascending);

  /// Unit weights, generators ranked by index.
  static DeglexOrder by_index(std::size_t alphabet_size);

  std::uint64_t weight(const Word& w) const;
  std::uint64_t weight(Letter x) const { return weights_.at(x); }
  std::size_t rank(Letter x) const { return rank_.at(x); }
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  const std::vector<Letter>& ascending() const { return ascending_; }
  std::size_t alphabet_size() const { return weights_.size(); }

  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

 private:
  std::vector<std::uint64_t> weights_;
  std::vector<Letter> ascending_;
  std::vector<std::size_t> rank_;
};

std::strong_ordering deglex_compare(const DeglexOrder& order, const Word& u, const Word& v);

/// Occurrence-count measure Phi(m) = sum_p coeff(p) * |occurrences(p, m)|.
class MeasureCertificate {
 public:
  /// Throws PreconditionError on an empty pattern or a repeated pattern.
  explicit MeasureCertificate(std::vector<std::pair<Word, std::uint64_t>> coefficients);

  std::uint64_t value(const Word& m) const;
  std::size_t max_pattern_length() const;
  const std::vector<std::pair<Word, std::uint64_t>>& coefficients() const { return coefficients_; }

 private:
  std::vector<std::pair<Word, std::uint64_t>> coefficients_;
};

using Certificate = std::variant<DeglexOrder, MeasureCertificate>;

/// One counterexample to a certificate: rule `rule`, applied in context
/// (prefix, suffix), produces `offending`, which does not decrease.
struct CertWitness {
  std::size_t rule = 0;
  Word prefix;
  Word suffix;
  Word offending;
};

struct CertResult {
  bool certified = true;
  std::vector<CertWitness> witnesses;
};

/// Certified iff every rhs word is deglex-smaller than its lhs.
CertResult certify_deglex(const System& system, const DeglexOrder& order);

/// Certified iff Phi(a m' b) < Phi(a w b) for every rule w -> f(w), every m'
/// in supp f(w) and every context with |a|, |b| < longest pattern. Longer
/// contexts cannot change the difference; see docs/theory.md.
CertResult certify_measure(const System& system, const MeasureCertificate& cert);

CertResult certify(const System& system, const Certificate& cert);

/// Total preorder used to pick the next term to rewrite: the certified
/// quantity first, printing order second.
class TermPriority {
 public:
  explicit TermPriority(const Certificate& cert) : cert_(&cert) {}

  /// True iff `u` should be rewritten before `v`.
  bool before(const Word& u, const Word& v) const;
  /// True iff the certified quantity of `u` is strictly below that of `v`.
  bool strictly_below(const Word& u, const Word& v) const;

 private:
  const Certificate* cert_;
};

}  // namespace diamond
