#include "diamond/linalg.hpp"

#include <cstdint>

#include "diamond/error.hpp"

namespace diamond {

namespace {

using IntRow = std::map<std::size_t, mpz_class>;
using ModRow = std::map<std::size_t, std::uint64_t>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

std::size_t rank_rational(std::vector<IntRow> vectors) {
  std::map<std::size_t, IntRow> pivots;
  for (auto& v : vectors) {
    make_primitive(v);
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) break;
      // v <- p_lead * v - v_lead * p, fraction-free.
      mpz_class a = pivot->second.begin()->second;
      mpz_class b = lead->second;
      IntRow next;
      for (const auto& [c, x] : v) next[c] = a * x;
      for (const auto& [c, y] : pivot->second) {
        mpz_class& slot = next[c];
        slot -= b * y;
      }
      for (auto it = next.begin(); it != next.end();)
        it = it->second == 0 ? next.erase(it) : std::next(it);
      v = std::move(next);
      make_primitive(v);
    }
    if (!v.empty()) pivots.emplace(v.begin()->first, std::move(v));
  }
  return pivots.size();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, exp = p - 2;
  a %= p;
  while (exp) {
    if (exp & 1) result = result * a % p;
    a = a * a % p;
    exp >>= 1;
  }
  return result;
}

std::size_t rank_modular(std::vector<ModRow> vectors, std::uint64_t p) {
  std::map<std::size_t, ModRow> pivots;
  for (auto& v : vectors) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) break;
      std::uint64_t factor = lead->second;  // pivot rows are monic
      for (const auto& [c, y] : pivot->second) {
        std::uint64_t& slot = v[c];
        slot = (slot + p - factor * y % p) % p;
        if (slot == 0) v.erase(c);
      }
    }
    if (v.empty()) continue;
    std::uint64_t inv = inverse_mod(v.begin()->second, p);
    for (auto& [c, x] : v) x = x * inv % p;
    pivots.emplace(v.begin()->first, std::move(v));
  }
  return pivots.size();
}

}  // namespace

void SparseMatrix::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (value.field() != field_) throw FieldMismatch();
  if (row >= rows_.size() || col >= cols_) throw PreconditionError("matrix index out of range");
  if (value.is_zero()) return;
  auto& r = rows_[row];
  auto [it, inserted] = r.try_emplace(col, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) r.erase(it);
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = rows_.at(row);
  auto it = r.find(col);
  return it == r.end() ? Scalar::zero(field_) : it->second;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows()) throw PreconditionError("matrix shapes do not compose");
  SparseMatrix out(field_, rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [k, a] : rows_[i])
      for (const auto& [j, b] : other.rows_[k]) out.add(i, j, a * b);
  return out;
}

std::size_t exact_rank(const SparseMatrix& m) {
  // Eliminate along whichever side has fewer vectors.
  bool by_columns = m.cols() < m.rows();
  std::size_t count = by_columns ? m.cols() : m.rows();

  if (m.field().is_rational()) {
    std::vector<IntRow> vectors(count);
    std::vector<mpz_class> row_lcm(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& [j, v] : m.row(i)) row_lcm[i] = lcm(row_lcm[i], v.to_rational().get_den());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (const auto& [j, v] : m.row(i)) {
        // Scaling rows by nonzero constants preserves rank.
        mpq_class scaled = v.to_rational() * row_lcm[i];
        mpz_class entry = scaled.get_num();
        if (by_columns)
          vectors[j][i] = entry;
        else
          vectors[i][j] = entry;
      }
    }
    return rank_rational(std::move(vectors));
  }

  std::vector<ModRow> vectors(count);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) {
      if (by_columns)
        vectors[j][i] = v.residue();
      else
        vectors[i][j] = v.residue();
    }
  }
  return rank_modular(std::move(vectors), m.field().characteristic());
}

}  // namespace diamond
