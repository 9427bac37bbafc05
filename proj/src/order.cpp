#include "diamond/order.hpp"

#include <algorithm>
#include <set>

#include "diamond/error.hpp"

namespace diamond {

namespace {

// All words over an alphabet of `n` letters with length <= max_len.
std::vector<Word> all_words(std::size_t n, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Letter x = 0; x < n; ++x) out.push_back(out[i] * Word{x});
    level_begin = level_end;
  }
  return out;
}

}  // namespace

DeglexOrder::DeglexOrder(std::vector<std::uint64_t> weights, std::vector<Letter> ascending)
    : weights_(std::move(weights)), ascending_(std::move(ascending)) {
  if (ascending_.size() != weights_.size())
    throw PreconditionError("deglex order must rank every generator exactly once");
  rank_.assign(weights_.size(), weights_.size());
  for (std::size_t i = 0; i < ascending_.size(); ++i) {
    Letter x = ascending_[i];
    if (x >= weights_.size() || rank_[x] != weights_.size())
      throw PreconditionError("deglex order must rank every generator exactly once");
    rank_[x] = i;
  }
  for (auto w : weights_)
    if (w == 0) throw PreconditionError("deglex weights must be positive");
}

DeglexOrder DeglexOrder::by_index(std::size_t alphabet_size) {
  std::vector<Letter> asc(alphabet_size);
  for (Letter i = 0; i < alphabet_size; ++i) asc[i] = i;
  return DeglexOrder(std::vector<std::uint64_t>(alphabet_size, 1), std::move(asc));
}

std::uint64_t DeglexOrder::weight(const Word& w) const {
  std::uint64_t total = 0;
  for (Letter x : w) total += weights_.at(x);
  return total;
}

std::strong_ordering DeglexOrder::compare(const Word& u, const Word& v) const {
  if (auto c = weight(u) <=> weight(v); c != 0) return c;
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != v[i]) return rank_[u[i]] <=> rank_[v[i]];
  return u.size() <=> v.size();
}

std::strong_ordering deglex_compare(const DeglexOrder& order, const Word& u, const Word& v) {
  return order.compare(u, v);
}

MeasureCertificate::MeasureCertificate(std::vector<std::pair<Word, std::uint64_t>> coefficients)
    : coefficients_(std::move(coefficients)) {
  std::set<Word> seen;
  for (const auto& [p, c] : coefficients_) {
    if (p.empty()) throw PreconditionError("measure certificate has an empty pattern");
    if (!seen.insert(p).second) throw PreconditionError("measure certificate repeats a pattern");
  }
}

std::uint64_t MeasureCertificate::value(const Word& m) const {
  std::uint64_t total = 0;
  for (const auto& [p, c] : coefficients_) total += c * count_occurrences(p, m);
  return total;
}

std::size_t MeasureCertificate::max_pattern_length() const {
  std::size_t n = 0;
  for (const auto& [p, c] : coefficients_) n = std::max(n, p.size());
  return n;
}

CertResult certify_deglex(const System& system, const DeglexOrder& order) {
  if (order.alphabet_size() != system.alphabet().size())
    throw PreconditionError("deglex order does not match the alphabet");
  CertResult result;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Rule& rule = system.rule(i);
    for (const auto& [m, c] : rule.rhs.terms()) {
      if (order.compare(m, rule.lhs) >= 0) {
        result.certified = false;
        result.witnesses.push_back({i, Word{}, Word{}, m});
      }
    }
  }
  return result;
}

CertResult certify_measure(const System& system, const MeasureCertificate& cert) {
  CertResult result;
  std::size_t context_len = cert.max_pattern_length() > 0 ? cert.max_pattern_length() - 1 : 0;
  std::vector<Word> contexts = all_words(system.alphabet().size(), context_len);
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Rule& rule = system.rule(i);
    for (const auto& [m, c] : rule.rhs.terms()) {
      for (const Word& a : contexts) {
        for (const Word& b : contexts) {
          if (cert.value(a * m * b) >= cert.value(a * rule.lhs * b)) {
            result.certified = false;
            result.witnesses.push_back({i, a, b, m});
          }
        }
      }
    }
  }
  return result;
}

CertResult certify(const System& system, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, DeglexOrder>)
          return certify_deglex(system, c);
        else
          return certify_measure(system, c);
      },
      cert);
}

bool TermPriority::before(const Word& u, const Word& v) const {
  if (auto order = std::get_if<DeglexOrder>(cert_)) return order->less(v, u);
  const auto& measure = std::get<MeasureCertificate>(*cert_);
  auto pu = measure.value(u), pv = measure.value(v);
  if (pu != pv) return pu > pv;
  return PrintOrder{}(u, v);
}

bool TermPriority::strictly_below(const Word& u, const Word& v) const {
  if (auto order = std::get_if<DeglexOrder>(cert_)) return order->less(u, v);
  const auto& measure = std::get<MeasureCertificate>(*cert_);
  return measure.value(u) < measure.value(v);
}

}  // namespace diamond
