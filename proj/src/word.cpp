#include "diamond/word.hpp"

#include <algorithm>
#include <cctype>

#include "diamond/error.hpp"

namespace diamond {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
  if (pos + pattern.size() > size()) return false;
  return std::equal(pattern.begin(), pattern.end(), letters_.begin() + pos);
}

bool Word::contains(const Word& pattern) const {
  if (pattern.size() > size()) return false;
  return std::search(begin(), end(), pattern.begin(), pattern.end()) != end() ||
         pattern.empty();
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.begin(), other.end());
  return *this;
}

std::vector<std::size_t> occurrence_positions(const Word& pattern, const Word& host) {
  if (pattern.empty()) throw PreconditionError("empty pattern");
  std::vector<std::size_t> out;
  if (pattern.size() > host.size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= host.size(); ++i)
    if (host.matches_at(pattern, i)) out.push_back(i);
  return out;
}

std::size_t count_occurrences(const Word& pattern, const Word& host) {
  return occurrence_positions(pattern, host).size();
}

std::vector<Occurrence> occurrences(const Word& pattern, const Word& host) {
  std::vector<Occurrence> out;
  for (std::size_t i : occurrence_positions(pattern, host)) {
    out.push_back({host.prefix(i), host.suffix(host.size() - i - pattern.size()),
                   pattern, host});
  }
  return out;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (Letter i = 0; i < names_.size(); ++i) {
    if (!is_valid_generator_name(names_[i]))
      throw ParseError("invalid generator name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw ParseError("duplicate generator name '" + names_[i] + "'");
  }
}

Letter Alphabet::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ParseError("unknown generator '" + std::string(name) + "'");
  return it->second;
}

bool Alphabet::has(std::string_view name) const { return index_.find(name) != index_.end(); }

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter x) { return x < size(); });
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace diamond
