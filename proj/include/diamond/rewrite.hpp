#pragma once

#include <cstdint>
#include <vector>

#include "diamond/order.hpp"
#include "diamond/poly.hpp"
#include "diamond/system.hpp"

namespace diamond {

/// One basic reduction: the host word of `occurrence` carried `coefficient`
/// and was replaced using rule `rule`.
struct ReductionStep {
  std::size_t rule = 0;
  Occurrence occurrence;
  Scalar coefficient;
};

/// Full record of a reduction sequence. Replaying `steps` on `input` yields
/// `output`, and input - output equals witness_combination() exactly.
struct ReductionTrace {
  Poly input;
  Poly output;
  std::vector<ReductionStep> steps;

  /// sum over steps of coefficient * a * (w - f(w)) * b.
  Poly witness_combination(const System& system) const;
  /// Applies the recorded steps to `input` again.
  Poly replay(const System& system) const;
};

/// Replaces every occurrence-host term of g by a * f(w) * b. Throws
/// PreconditionError if the occurrence does not belong to the rule.
Poly basic_reduction(const Poly& g, const Rule& rule, const Occurrence& occ);

struct NormalFormOptions {
  std::uint64_t fuse = 1'000'000;
};

struct NormalForm {
  Poly value;
  ReductionTrace trace;
};

/// Deterministic reduction to an irreducible element. At each step the
/// reducible term that comes first under TermPriority is rewritten, using
/// the lowest-index rule that occurs in it at its leftmost occurrence.
/// Throws FuseExceeded after `options.fuse` steps.
NormalForm normal_form(const System& system, const Certificate& cert, const Poly& g,
                       const NormalFormOptions& options = {});

bool is_irreducible(const System& system, const Poly& g);

/// Words of length <= max_length avoiding every lhs, in DeglexIndexLess order.
std::vector<Word> irreducible_words(const System& system, std::size_t max_length);

struct OracleOptions {
  /// Maximum number of distinct polynomials visited.
  std::size_t state_fuse = 200'000;
  /// Stop as soon as this many distinct irreducible results are known;
  /// zero means explore everything.
  std::size_t stop_after = 0;
};

/// Breadth-first exploration of every sequence of basic reductions starting
/// from the monomial `u`. Returns the distinct irreducible end points in
/// discovery order. Throws FuseExceeded when the state budget runs out.
std::vector<Poly> reduction_graph_oracle(const System& system, const Word& u,
                                         const OracleOptions& options = {});

}  // namespace diamond
