#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "diamond/ambiguity.hpp"
#include "diamond/linalg.hpp"
#include "diamond/system.hpp"

namespace diamond {

/// One factor of a Shafarevich tensor word: a generator x (degree 0) or a
/// relation symbol e_w (degree 1).
struct ShaPiece {
  bool is_relation = false;
  /// Letter for generators, rule index for relation symbols.
  std::size_t index = 0;
  friend auto operator<=>(const ShaPiece&, const ShaPiece&) = default;
};

using ShaTensor = std::vector<ShaPiece>;

std::string format_sha_tensor(const ShaTensor& t, const System& system);

/// One direct summand of a word-homogeneous (or length-graded) complex:
/// a basis per homological degree and the differentials between them.
struct ComplexComponent {
  /// basis[n]: labels of the degree-n basis vectors, in basis order.
  std::vector<std::vector<std::string>> basis;
  /// differentials[n] maps degree n to degree n - 1 (rows: degree n - 1,
  /// columns: degree n). differentials[0] has zero rows.
  std::vector<SparseMatrix> differentials;

  std::size_t dimension(std::size_t degree) const {
    return degree < basis.size() ? basis[degree].size() : 0;
  }
};

/// Word grade for word-homogeneous complexes, total length otherwise.
using Grade = std::variant<Word, std::size_t>;

/// A chain complex truncated in grade length and homological degree.
struct TruncatedComplex {
  std::size_t max_length = 0;
  std::size_t max_degree = 0;
  bool word_graded = true;
  std::map<Grade, ComplexComponent> components;

  /// Throws PreconditionError for a grade outside the truncation.
  const ComplexComponent& component(const Grade& grade) const;
};

struct ShafarevichOptions {
  /// Maximum number of basis vectors in the whole complex.
  std::size_t basis_budget = 2'000'000;
};

/// Truncated Shafarevich complex of the relation words. With `monomial_only`
/// d(e_w) = w and the complex splits by word grade; otherwise
/// d(e_w) = w - f(w), which needs length-homogeneous rules, and the complex
/// splits by total length. D^2 = 0 is checked on every component.
TruncatedComplex build_shafarevich(const System& system, std::size_t max_grade_length,
                                   std::size_t max_degree, bool monomial_only,
                                   const ShafarevichOptions& options = {});

struct HomologyRanks {
  std::size_t dimension = 0;
  /// dim ker D_n.
  std::size_t kernel = 0;
  /// rank D_{n+1}.
  std::size_t image = 0;
  std::size_t homology = 0;
  /// Degree n + 1 lies outside the truncation: homology is an upper bound.
  bool upper_bound = false;
};

HomologyRanks homology_ranks(const ComplexComponent& component, std::size_t degree,
                             std::size_t max_degree);
HomologyRanks homology_ranks(const TruncatedComplex& complex, const Grade& grade, std::size_t degree);

/// Occurrence of relation word `rule` in a grade.
struct Divisor {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t rule = 0;
};

/// The Grassmann algebra on the relation occurrences of one grade, with the
/// derivation sending every generator to 1.
struct GrassmannComponent {
  Word grade;
  std::vector<Divisor> divisors;
  /// subsets[n]: degree-n wedge monomials as increasing divisor indices.
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  /// indecomposable[n][i] for subsets[n][i].
  std::vector<std::vector<bool>> indecomposable;
  ComplexComponent complex;
};

struct GrassmannOptions {
  std::size_t max_divisors = 16;
};

/// Throws BudgetExceeded when the grade has more than max_divisors relation
/// occurrences.
GrassmannComponent build_ie_component(const System& system, const Word& grade,
                                      const GrassmannOptions& options = {});

struct CensusEntry {
  Word grade;
  AmbiguityKind kind = AmbiguityKind::Overlap;
  DivisorSpan first;
  DivisorSpan second;
  friend auto operator<=>(const CensusEntry&, const CensusEntry&) = default;
};

/// Indecomposable degree-two wedge monomials of every grade up to the given
/// length, classified as inclusion (one divisor is the whole grade) or
/// overlap (a left and a right divisor sharing letters).
std::vector<CensusEntry> ie_degree2_census(const System& system, std::size_t max_grade_length,
                                           const GrassmannOptions& options = {});

/// The same key computed from an ambiguity, for comparing censuses.
CensusEntry census_entry(const System& system, const Ambiguity& amb);

}  // namespace diamond
