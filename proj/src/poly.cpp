#include "diamond/poly.hpp"

#include "diamond/error.hpp"

namespace diamond {

Poly Poly::monomial(Field field, Word w, const Scalar& coeff) {
  Poly p(field);
  p.add_term(w, coeff);
  return p;
}

Scalar Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<Word> Poly::support() const {
  std::vector<Word> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  return out;
}

std::size_t Poly::max_length() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

void Poly::add_term(const Word& w, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.field_ != field_) throw FieldMismatch();
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.field_ != field_) throw FieldMismatch();
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.field_ != q.field_) throw FieldMismatch();
  Poly r(p.field_);
  for (const auto& [u, a] : p.terms_)
    for (const auto& [v, b] : q.terms_) r.add_term(u * v, a * b);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.field() != field_) throw FieldMismatch();
  Poly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [w, a] : terms_) r.terms_.emplace(w, a * c);
  return r;
}

Poly Poly::sandwiched(const Word& a, const Word& b) const {
  Poly r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(a * w * b, c);
  return r;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  std::hash<Word> hw;
  for (const auto& [w, c] : terms_) h = (h * 31 + hw(w)) * 31 + c.hash();
  return h;
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_scale(const Scalar& c, const Poly& p) { return p.scaled(c); }
Poly poly_mul_sandwich(const Word& a, const Poly& p, const Word& b) { return p.sandwiched(a, b); }

}  // namespace diamond
