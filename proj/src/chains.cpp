#include "diamond/chains.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "diamond/error.hpp"

namespace diamond {

namespace {

void require_minimal(const System& system) {
  if (!system.is_minimal())
    throw PreconditionError("Anick chains need a minimal system (no lhs of length one, no lhs dividing another)");
}

// True iff tail * t ends with a relation word that starts inside `tail`.
bool closes_on_relation(const System& system, const Word& tail, const Word& t) {
  Word joined = tail * t;
  for (const Rule& r : system.rules())
    if (r.lhs.size() > t.size() && joined.ends_with(r.lhs)) return true;
  return false;
}

int sign_of(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

Scalar ChainPoly::coefficient(const Tensor& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void ChainPoly::add_term(const Tensor& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ChainPoly& ChainPoly::operator+=(const ChainPoly& other) {
  if (other.field_ != field_) throw FieldMismatch();
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

std::string ChainPoly::to_string(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    bool negative = field_.is_rational() && sgn(c.to_rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += "|";
      out += alphabet.format(t[i]);
    }
    out += "]";
  }
  return out;
}

std::vector<Chain> anick_chains(const System& system, std::size_t max_degree, std::size_t max_length) {
  require_minimal(system);
  std::vector<Chain> chains;
  if (max_length == 0) return chains;
  for (Letter x = 0; x < system.alphabet().size(); ++x) chains.push_back({Word{x}, 0, Word{x}, std::nullopt});

  std::size_t level_begin = 0;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::size_t level_end = chains.size();
    // Every word satisfying conditions (1) and (2) at degree n, with its
    // tail and parent.
    std::map<Word, std::vector<std::pair<Word, std::size_t>>> candidates;
    for (std::size_t p = level_begin; p < level_end; ++p) {
      const Chain& parent = chains[p];
      for (const Rule& r : system.rules()) {
        const Word& w = r.lhs;
        std::size_t max_shared = std::min(parent.tail.size(), w.size() - 1);
        for (std::size_t k = 1; k <= max_shared; ++k) {
          if (!parent.tail.ends_with(w.prefix(k))) continue;
          Word t = w.suffix(w.size() - k);
          Word c = parent.word * t;
          if (c.size() > max_length) continue;
          candidates[std::move(c)].emplace_back(std::move(t), p);
        }
      }
    }
    std::vector<Chain> level;
    for (auto& [word, structures] : candidates) {
      bool has_candidate_prefix = false;
      for (std::size_t len = 1; len < word.size() && !has_candidate_prefix; ++len)
        has_candidate_prefix = candidates.count(word.prefix(len)) != 0;
      if (has_candidate_prefix) continue;
      for (const auto& s : structures)
        if (s.first != structures.front().first)
          throw std::logic_error("word carries two chain structures");
      level.push_back({word, n, structures.front().first, structures.front().second});
    }
    std::sort(level.begin(), level.end(),
              [](const Chain& x, const Chain& y) { return DeglexIndexLess{}(x.word, y.word); });
    chains.insert(chains.end(), level.begin(), level.end());
    level_begin = level_end;
    if (level.empty()) break;
  }
  return chains;
}

std::optional<ChainStructure> chain_structure(const System& system, const Word& u) {
  require_minimal(system);
  if (u.empty()) return std::nullopt;
  // structure[len]: chain structure of the prefix of length len.
  std::vector<std::optional<ChainStructure>> structure(u.size() + 1);
  // satisfied[len]: degrees n (with tail) for which the prefix of length len
  // satisfies conditions (1) and (2).
  std::vector<std::map<std::size_t, std::set<Word>>> satisfied(u.size() + 1);
  for (std::size_t len = 1; len <= u.size(); ++len) {
    Word q = u.prefix(len);
    if (len == 1) {
      structure[1] = ChainStructure{0, q};
      continue;
    }
    for (std::size_t split = 1; split < len; ++split) {
      const auto& parent = structure[split];
      if (!parent) continue;
      Word t = q.suffix(len - split);
      if (closes_on_relation(system, parent->tail, t)) satisfied[len][parent->degree + 1].insert(t);
    }
    std::vector<ChainStructure> found;
    for (const auto& [n, tails] : satisfied[len]) {
      bool earlier = false;
      for (std::size_t shorter = 2; shorter < len && !earlier; ++shorter)
        earlier = satisfied[shorter].count(n) != 0;
      if (earlier) continue;
      if (tails.size() != 1) throw std::logic_error("word carries two chain tails");
      found.push_back({n, *tails.begin()});
    }
    if (found.size() > 1) throw std::logic_error("word carries two chain degrees");
    if (!found.empty()) structure[len] = found.front();
  }
  return structure[u.size()];
}

AnickModel::AnickModel(const System& system, std::size_t max_degree, std::size_t max_length)
    : alphabet_(system.alphabet()), field_(system.field()),
      chains_(anick_chains(system, max_degree, max_length)) {
  for (std::size_t i = 0; i < chains_.size(); ++i) index_.emplace(chains_[i].word, i);
}

const Chain* AnickModel::find(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? nullptr : &chains_[it->second];
}

ChainPoly AnickModel::differential(const Chain& c) const {
  ChainPoly out(field_);
  std::size_t n = c.degree;
  if (n == 0) return out;
  const std::size_t target = n - 1;
  ChainPoly::Tensor factors;
  std::vector<std::size_t> degrees;

  auto recurse = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == c.word.size()) {
      if (used != target) return;
      if (factors.size() == 1) throw std::logic_error("chain factors as a single chain of lower degree");
      Scalar coeff(field_, sign_of(degrees.front()));
      out.add_term(factors, coeff);
      return;
    }
    for (std::size_t end = pos + 1; end <= c.word.size(); ++end) {
      const Chain* piece = find(c.word.subword(pos, end - pos));
      if (!piece || used + piece->degree > target) continue;
      factors.push_back(piece->word);
      degrees.push_back(piece->degree);
      self(self, end, used + piece->degree);
      factors.pop_back();
      degrees.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

ChainPoly AnickModel::differential(const ChainPoly& p) const {
  ChainPoly out(field_);
  for (const auto& [tensor, coeff] : p.terms()) {
    std::size_t degree_before = 0;
    for (std::size_t i = 0; i < tensor.size(); ++i) {
      const Chain* c = find(tensor[i]);
      if (!c) throw PreconditionError("tensor factor is not an enumerated chain");
      if (c->degree > 0) {
        Scalar sign(field_, sign_of(degree_before));
        ChainPoly dc = differential(*c);
        for (const auto& [inner, inner_coeff] : dc.terms()) {
          ChainPoly::Tensor t(tensor.begin(), tensor.begin() + i);
          t.insert(t.end(), inner.begin(), inner.end());
          t.insert(t.end(), tensor.begin() + i + 1, tensor.end());
          out.add_term(t, coeff * sign * inner_coeff);
        }
      }
      degree_before += c->degree;
    }
  }
  return out;
}

DSquaredReport AnickModel::verify_d_squared() const {
  DSquaredReport report;
  for (const Chain& c : chains_) {
    ++report.chains_checked;
    ChainPoly d = differential(c);
    ChainPoly dd = differential(d);
    if (!dd.is_zero()) report.violations.push_back({c, std::move(d), std::move(dd)});
  }
  return report;
}

ChainPoly chain_differential(const System& system, const Chain& c) {
  return AnickModel(system, c.degree, c.word.size()).differential(c);
}

DSquaredReport verify_d_squared(const System& system, std::size_t max_degree, std::size_t max_length) {
  return AnickModel(system, max_degree, max_length).verify_d_squared();
}

}  // namespace diamond
