#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "diamond/scalar.hpp"
#include "diamond/system.hpp"
#include "diamond/word.hpp"

namespace diamond {

struct ChainStructure {
  std::size_t degree = 0;
  Word tail;
  friend bool operator==(const ChainStructure&, const ChainStructure&) = default;
};

/// An Anick n-chain. For n > 0 the word is parent.word * tail.
struct Chain {
  Word word;
  std::size_t degree = 0;
  Word tail;
  /// Index of the (n-1)-chain prefix in the enumeration; empty for n = 0.
  std::optional<std::size_t> parent;
};

/// Formal combination of tensor words c1 (x) ... (x) ck of chains.
class ChainPoly {
 public:
  using Tensor = std::vector<Word>;

  explicit ChainPoly(Field field = Field::rationals()) : field_(field) {}

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Tensor, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Tensor& t) const;

  void add_term(const Tensor& t, const Scalar& c);
  ChainPoly& operator+=(const ChainPoly& other);

  friend bool operator==(const ChainPoly&, const ChainPoly&) = default;

  /// "[x|x^3] - [x^3|x]"; zero prints "0".
  std::string to_string(const Alphabet& alphabet) const;

 private:
  Field field_;
  std::map<Tensor, Scalar> terms_;
};

/// Chains of a minimal system up to the given degree and word length,
/// ordered by degree and then DeglexIndexLess. Extensions are generated per
/// parent and then filtered so that no proper prefix is itself a candidate
/// of the same degree. Throws PreconditionError on a non-minimal system.
std::vector<Chain> anick_chains(const System& system, std::size_t max_degree, std::size_t max_length);

/// The chain structure of `u` computed straight from the definition over the
/// prefixes of `u`, independently of anick_chains.
std::optional<ChainStructure> chain_structure(const System& system, const Word& u);

struct DSquaredViolation {
  Chain chain;
  ChainPoly d;
  ChainPoly dd;
};

struct DSquaredReport {
  std::size_t chains_checked = 0;
  std::vector<DSquaredViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// The minimal model of the monomial algebra of a minimal system, truncated
/// to chains of bounded degree and length.
class AnickModel {
 public:
  AnickModel(const System& system, std::size_t max_degree, std::size_t max_length);

  const std::vector<Chain>& chains() const { return chains_; }
  const Chain* find(const Word& w) const;
  const Alphabet& alphabet() const { return alphabet_; }

  /// Sum over factorizations c = c1...ck into chains with total degree
  /// n - 1 of (-1)^n1 c1 (x) ... (x) ck, n1 the degree of the first factor.
  /// The sign depends on n1 alone; a factor depending on n as well breaks
  /// d^2 = 0 from degree 4 on.
  ChainPoly differential(const Chain& c) const;
  /// Extension of the differential to tensors as a graded derivation.
  ChainPoly differential(const ChainPoly& p) const;

  DSquaredReport verify_d_squared() const;

 private:
  Alphabet alphabet_;
  Field field_;
  std::vector<Chain> chains_;
  std::unordered_map<Word, std::size_t> index_;
};

ChainPoly chain_differential(const System& system, const Chain& c);
DSquaredReport verify_d_squared(const System& system, std::size_t max_degree, std::size_t max_length);

}  // namespace diamond
