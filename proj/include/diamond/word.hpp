#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diamond {

/// Index of a generator in the alphabet.
using Letter = std::uint32_t;

/// An element of the free monoid on the alphabet: a finite sequence of
/// generator indices. The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word power(Letter x, std::size_t n) { return Word(std::vector<Letter>(n, x)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  /// True iff `pattern` occurs in this word starting at `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const;
  bool starts_with(const Word& w) const { return matches_at(w, 0); }
  bool ends_with(const Word& w) const {
    return w.size() <= size() && matches_at(w, size() - w.size());
  }
  bool contains(const Word& pattern) const;

  Word& operator*=(const Word& other);
  friend Word operator*(Word u, const Word& v) { return u *= v; }

  /// Plain lexicographic order on index sequences.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free monoid product.
inline Word concat(const Word& u, const Word& v) { return u * v; }

/// Length first, then lexicographic by index: the order in which words are
/// enumerated and ambiguities are reported.
struct DeglexIndexLess {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  }
};

/// Printing order of polynomial terms: longer words first, equal lengths in
/// ascending lexicographic order.
struct PrintOrder {
  bool operator()(const Word& u, const Word& v) const {
    if (u.size() != v.size()) return u.size() > v.size();
    return u < v;
  }
};

/// The triple (a, w, b) with a * w * b = host.
struct Occurrence {
  Word prefix;
  Word suffix;
  Word pattern;
  Word host;

  std::size_t position() const { return prefix.size(); }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences of `pattern` in `host`, ordered by prefix length,
/// overlapping ones included. Throws PreconditionError on an empty pattern.
std::vector<Occurrence> occurrences(const Word& pattern, const Word& host);

/// Start positions of `pattern` in `host`, ascending.
std::vector<std::size_t> occurrence_positions(const Word& pattern, const Word& host);

std::size_t count_occurrences(const Word& pattern, const Word& host);

/// Generator names and their indices. Names match [A-Za-z][A-Za-z0-9_]*.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws ParseError for an unknown name.
  Letter index(std::string_view name) const;
  bool has(std::string_view name) const;

  bool contains(const Word& w) const;

  /// "x^2*y*z"; the empty word prints as "1".
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Letter, std::less<>> index_;
};

bool is_valid_generator_name(std::string_view name);

}  // namespace diamond

template <>
struct std::hash<diamond::Word> {
  std::size_t operator()(const diamond::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) h = (h ^ x) * 1099511628211ull;
    return h ^ w.size();
  }
};
