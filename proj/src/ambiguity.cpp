#include "diamond/ambiguity.hpp"

#include <algorithm>
#include <tuple>

#include "diamond/error.hpp"

namespace diamond {

std::string to_string(AmbiguityKind kind) {
  return kind == AmbiguityKind::Overlap ? "overlap" : "inclusion";
}

std::string to_string(ConvergenceMode mode) {
  return mode == ConvergenceMode::Diamond ? "diamond" : "triangle";
}

std::pair<DivisorSpan, DivisorSpan> Ambiguity::divisors(const System& system) const {
  std::size_t first_len = system.rule(first).lhs.size();
  std::size_t second_len = system.rule(second).lhs.size();
  if (kind == AmbiguityKind::Overlap) return {{0, first_len}, {b.size(), second_len}};
  return {{0, first_len}, {a.size(), second_len}};
}

bool ambiguity_less(const System& system, const Ambiguity& x, const Ambiguity& y) {
  DeglexIndexLess less;
  if (less(x.grade, y.grade)) return true;
  if (less(y.grade, x.grade)) return false;
  if (x.kind != y.kind) return x.kind < y.kind;
  return x.divisors(system) < y.divisors(system);
}

std::vector<Ambiguity> find_overlaps(const System& system) {
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word& left = system.rule(i).lhs;
    for (std::size_t j = 0; j < system.size(); ++j) {
      const Word& right = system.rule(j).lhs;
      std::size_t max_shared = std::min(left.size(), right.size());
      // Shared part s: a proper nonempty suffix of `left` and proper prefix of `right`.
      for (std::size_t s = 1; s < max_shared; ++s) {
        if (!left.matches_at(right.prefix(s), left.size() - s)) continue;
        Ambiguity amb;
        amb.kind = AmbiguityKind::Overlap;
        amb.first = i;
        amb.second = j;
        amb.a = right.suffix(right.size() - s);
        amb.b = left.prefix(left.size() - s);
        amb.grade = left * amb.a;
        amb.minimal = system.count_lhs_occurrences(amb.grade) == 2;
        out.push_back(std::move(amb));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Ambiguity& x, const Ambiguity& y) { return ambiguity_less(system, x, y); });
  return out;
}

std::vector<Ambiguity> find_inclusions(const System& system) {
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word& outer = system.rule(i).lhs;
    for (std::size_t j = 0; j < system.size(); ++j) {
      if (i == j) continue;
      const Word& inner = system.rule(j).lhs;
      for (std::size_t pos : occurrence_positions(inner, outer)) {
        Ambiguity amb;
        amb.kind = AmbiguityKind::Inclusion;
        amb.grade = outer;
        amb.first = i;
        amb.second = j;
        amb.a = outer.prefix(pos);
        amb.b = outer.suffix(outer.size() - pos - inner.size());
        out.push_back(std::move(amb));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Ambiguity& x, const Ambiguity& y) { return ambiguity_less(system, x, y); });
  return out;
}

std::vector<Ambiguity> find_ambiguities(const System& system) {
  auto out = find_overlaps(system);
  auto inclusions = find_inclusions(system);
  out.insert(out.end(), inclusions.begin(), inclusions.end());
  std::sort(out.begin(), out.end(),
            [&](const Ambiguity& x, const Ambiguity& y) { return ambiguity_less(system, x, y); });
  return out;
}

std::vector<DegreeOneTerm> generator_differential(const System& system, const Ambiguity& amb) {
  Scalar one = Scalar::one(system.field());
  if (amb.kind == AmbiguityKind::Overlap)
    return {{one, amb.b, amb.second, Word{}}, {-one, Word{}, amb.first, amb.a}};
  return {{one, Word{}, amb.first, Word{}}, {-one, amb.a, amb.second, amb.b}};
}

Poly obstruction(const System& system, const Ambiguity& amb) {
  Poly s(system.field());
  for (const auto& t : generator_differential(system, amb))
    s += system.rule(t.rule).rhs.sandwiched(t.left, t.right).scaled(t.coeff);
  return s;
}

std::vector<const AmbiguityResolution*> ConvergenceReport::failures() const {
  std::vector<const AmbiguityResolution*> out;
  for (const auto& r : ambiguities)
    if (!r.residue.is_zero()) out.push_back(&r);
  return out;
}

ConvergenceReport check_convergence(const System& system, const Certificate& cert,
                                    ConvergenceMode mode, const NormalFormOptions& options) {
  if (mode == ConvergenceMode::Triangle && !system.is_minimal())
    throw PreconditionError("triangle mode requires a minimal system");
  ConvergenceReport report;
  report.mode = mode;
  std::vector<Ambiguity> ambiguities;
  if (mode == ConvergenceMode::Diamond) {
    ambiguities = find_ambiguities(system);
  } else {
    for (auto& amb : find_overlaps(system))
      if (amb.minimal) ambiguities.push_back(std::move(amb));
  }
  for (auto& amb : ambiguities) {
    Poly s = obstruction(system, amb);
    NormalForm nf = normal_form(system, cert, s, options);
    if (!nf.value.is_zero()) report.convergent = false;
    report.ambiguities.push_back({std::move(amb), std::move(s), std::move(nf.value), std::move(nf.trace)});
  }
  return report;
}

McResidual mc_residual(const System& system, const Certificate& cert, const Ambiguity& amb,
                       const NormalFormOptions& options) {
  McResidual out;
  out.obstruction = obstruction(system, amb);
  out.f_of_dc = Poly(system.field());
  for (const auto& t : generator_differential(system, amb))
    out.f_of_dc -= system.rule(t.rule).rhs.sandwiched(t.left, t.right).scaled(t.coeff);
  NormalForm nf = normal_form(system, cert, out.obstruction, options);
  out.residue = std::move(nf.value);
  out.trace = std::move(nf.trace);
  out.combination = out.trace.witness_combination(system);
  out.residual = out.obstruction - out.combination - out.residue;
  out.mc_value = out.f_of_dc + out.combination;
  return out;
}

CompletionResult complete(const System& system, const DeglexOrder& order, std::size_t max_rounds,
                          const NormalFormOptions& options) {
  if (!certify_deglex(system, order).certified)
    throw PreconditionError("completion needs a system certified by the given deglex order");
  Certificate cert = order;
  CompletionResult result{system, {}, 0, 0, {}};
  for (;;) {
    result.report = check_convergence(result.system, cert, ConvergenceMode::Diamond, options);
    if (result.report.convergent || result.rounds >= max_rounds) break;
    ++result.rounds;
    std::size_t added_this_round = 0;
    for (const auto* failure : result.report.failures()) {
      Poly r = normal_form(result.system, cert, failure->residue, options).value;
      if (r.is_zero()) continue;
      const Word* lead = nullptr;
      for (const auto& [w, c] : r.terms())
        if (!lead || order.less(*lead, w)) lead = &w;
      if (lead->empty()) {
        result.degenerate_residues.push_back(r);
        continue;
      }
      Scalar lc = r.coefficient(*lead);
      Poly rhs = Poly::monomial(r.field(), *lead) - r.scaled(lc.inverse());
      result.system = result.system.with_rule({*lead, std::move(rhs)});
      ++added_this_round;
    }
    result.added_rules += added_this_round;
    if (added_this_round == 0) break;
  }
  return result;
}

}  // namespace diamond
