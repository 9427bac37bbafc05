#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamond/order.hpp"
#include "diamond/rewrite.hpp"
#include "diamond/system.hpp"

namespace diamond {

enum class AmbiguityKind { Inclusion, Overlap };

std::string to_string(AmbiguityKind kind);

/// Position and length of a relation occurrence inside a grade.
struct DivisorSpan {
  std::size_t start = 0;
  std::size_t length = 0;
  friend auto operator<=>(const DivisorSpan&, const DivisorSpan&) = default;
};

/// A word reducible in two ways.
///
/// Overlap: grade = lhs(first) * a = b * lhs(second), with 0 < |b| < |lhs(first)|
/// and 0 < |a| < |lhs(second)|.
/// Inclusion: grade = lhs(first) = a * lhs(second) * b, (a, b) != (1, 1).
struct Ambiguity {
  AmbiguityKind kind = AmbiguityKind::Overlap;
  Word grade;
  std::size_t first = 0;
  std::size_t second = 0;
  Word a;
  Word b;
  /// Overlaps only: the grade has exactly two occurrences of relation words.
  bool minimal = false;

  /// The two relation occurrences that make up the ambiguity, first one
  /// starting at 0.
  std::pair<DivisorSpan, DivisorSpan> divisors(const System& system) const;
};

/// Sort key: grade in DeglexIndexLess order, then kind, then divisor spans.
bool ambiguity_less(const System& system, const Ambiguity& x, const Ambiguity& y);

std::vector<Ambiguity> find_overlaps(const System& system);
std::vector<Ambiguity> find_inclusions(const System& system);
/// Overlaps and inclusions, sorted by ambiguity_less.
std::vector<Ambiguity> find_ambiguities(const System& system);

/// A term coeff * left * e_rule * right of a homological-degree-one element.
struct DegreeOneTerm {
  Scalar coeff;
  Word left;
  std::size_t rule = 0;
  Word right;
};

/// d(c) for the degree-two generator c attached to an ambiguity:
/// overlap  b e_{second} - e_{first} a;
/// inclusion e_{first} - a e_{second} b.
std::vector<DegreeOneTerm> generator_differential(const System& system, const Ambiguity& amb);

/// S_c = sum coeff * left * f(w) * right over d(c).
Poly obstruction(const System& system, const Ambiguity& amb);

enum class ConvergenceMode { Diamond, Triangle };

std::string to_string(ConvergenceMode mode);

struct AmbiguityResolution {
  Ambiguity ambiguity;
  Poly obstruction;
  Poly residue;
  ReductionTrace trace;
};

struct ConvergenceReport {
  ConvergenceMode mode = ConvergenceMode::Diamond;
  bool convergent = true;
  std::vector<AmbiguityResolution> ambiguities;

  /// The resolutions with a nonzero residue, in report order.
  std::vector<const AmbiguityResolution*> failures() const;
};

/// Diamond mode reduces the obstruction of every overlap and inclusion;
/// triangle mode only those of minimal overlaps and refuses non-minimal
/// systems with PreconditionError. Convergent iff every residue is zero.
ConvergenceReport check_convergence(const System& system, const Certificate& cert,
                                    ConvergenceMode mode, const NormalFormOptions& options = {});

/// The degree-two Maurer-Cartan computation for one ambiguity.
///
/// With F(e_w) = -f(w) and F(c) read off the reduction trace of S_c as
/// sum coeff * a' e_{w'} b', the square-zero condition of d + F on c is
///   d(d(c)) + F(d(c)) + (d + F)(F(c)) = 0,
/// where d(d(c)) = 0, F(d(c)) = -S_c and (d + F)(F(c)) = combination.
struct McResidual {
  Poly obstruction;
  /// F(d(c)), evaluated term by term on d(c).
  Poly f_of_dc;
  /// (d + F)(F(c)) = sum coeff * a' (w' - f(w')) b'.
  Poly combination;
  Poly residue;
  ReductionTrace trace;
  /// obstruction - combination - residue; identically zero.
  Poly residual;
  /// F(d(c)) + (d + F)(F(c)); equals -residue.
  Poly mc_value;

  bool maurer_cartan_holds() const { return mc_value.is_zero(); }
};

McResidual mc_residual(const System& system, const Certificate& cert, const Ambiguity& amb,
                       const NormalFormOptions& options = {});

struct CompletionResult {
  System system;
  ConvergenceReport report;
  std::size_t rounds = 0;
  std::size_t added_rules = 0;
  /// Residues that reduced to a nonzero constant and cannot be oriented.
  std::vector<Poly> degenerate_residues;
};

/// Knuth-Bendix style completion under a deglex order: each nonzero residue
/// r becomes the rule lead(r) -> lead(r) - r / lc(r), until the diamond check
/// succeeds or `max_rounds` rounds have added rules.
CompletionResult complete(const System& system, const DeglexOrder& order, std::size_t max_rounds,
                          const NormalFormOptions& options = {});

}  // namespace diamond
