#include "diamond/rewrite.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "diamond/error.hpp"

namespace diamond {

namespace {

void apply_step(Poly& g, const Rule& rule, const Occurrence& occ, const Scalar& c) {
  g.add_term(occ.host, -c);
  g += rule.rhs.sandwiched(occ.prefix, occ.suffix).scaled(c);
}

}  // namespace

Poly ReductionTrace::witness_combination(const System& system) const {
  Poly sum(input.field());
  for (const auto& step : steps) {
    const auto& occ = step.occurrence;
    sum += system.rule(step.rule).relation().sandwiched(occ.prefix, occ.suffix).scaled(step.coefficient);
  }
  return sum;
}

Poly ReductionTrace::replay(const System& system) const {
  Poly g = input;
  for (const auto& step : steps) {
    if (g.coefficient(step.occurrence.host) != step.coefficient)
      throw PreconditionError("trace step does not match the current coefficient");
    apply_step(g, system.rule(step.rule), step.occurrence, step.coefficient);
  }
  return g;
}

Poly basic_reduction(const Poly& g, const Rule& rule, const Occurrence& occ) {
  if (occ.pattern != rule.lhs || occ.prefix * occ.pattern * occ.suffix != occ.host)
    throw PreconditionError("occurrence does not match the rule");
  Scalar c = g.coefficient(occ.host);
  if (c.is_zero()) return g;
  Poly out = g;
  apply_step(out, rule, occ, c);
  return out;
}

NormalForm normal_form(const System& system, const Certificate& cert, const Poly& g,
                       const NormalFormOptions& options) {
  if (g.field() != system.field()) throw FieldMismatch();
  TermPriority priority(cert);
  NormalForm result{g, ReductionTrace{g, g, {}}};
  Poly& current = result.value;
  std::unordered_map<Word, bool> reducible;
  auto is_reducible = [&](const Word& w) {
    auto [it, inserted] = reducible.try_emplace(w, false);
    if (inserted) it->second = system.is_reducible(w);
    return it->second;
  };

  for (std::uint64_t steps = 0;; ++steps) {
    const Word* best = nullptr;
    for (const auto& [w, c] : current.terms())
      if (is_reducible(w) && (!best || priority.before(w, *best))) best = &w;
    if (!best) break;
    if (steps >= options.fuse)
      throw FuseExceeded("normal form exceeded " + std::to_string(options.fuse) + " reduction steps");

    Word host = *best;
    for (std::size_t i = 0; i < system.size(); ++i) {
      const Rule& rule = system.rule(i);
      auto positions = occurrence_positions(rule.lhs, host);
      if (positions.empty()) continue;
      std::size_t pos = positions.front();
      Occurrence occ{host.prefix(pos), host.suffix(host.size() - pos - rule.lhs.size()), rule.lhs, host};
      Scalar c = current.coefficient(host);
      apply_step(current, rule, occ, c);
      result.trace.steps.push_back({i, std::move(occ), c});
      break;
    }
  }
  result.trace.output = current;
  return result;
}

bool is_irreducible(const System& system, const Poly& g) {
  for (const auto& [w, c] : g.terms())
    if (system.is_reducible(w)) return false;
  return true;
}

std::vector<Word> irreducible_words(const System& system, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Letter x = 0; x < system.alphabet().size(); ++x) {
        Word w = out[i] * Word{x};
        bool ok = true;
        for (const Rule& r : system.rules())
          if (w.ends_with(r.lhs)) { ok = false; break; }
        if (ok) out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Poly> reduction_graph_oracle(const System& system, const Word& u,
                                         const OracleOptions& options) {
  Poly start = Poly::monomial(system.field(), u);
  std::unordered_set<Poly> visited{start};
  std::deque<Poly> queue{start};
  std::vector<Poly> results;
  while (!queue.empty()) {
    Poly g = std::move(queue.front());
    queue.pop_front();
    bool irreducible = true;
    for (const auto& [w, c] : g.terms()) {
      for (const Rule& rule : system.rules()) {
        for (std::size_t pos : occurrence_positions(rule.lhs, w)) {
          irreducible = false;
          Occurrence occ{w.prefix(pos), w.suffix(w.size() - pos - rule.lhs.size()), rule.lhs, w};
          Poly next = g;
          apply_step(next, rule, occ, c);
          if (visited.insert(next).second) {
            if (visited.size() > options.state_fuse)
              throw FuseExceeded("reduction graph oracle exceeded " +
                                 std::to_string(options.state_fuse) + " states");
            queue.push_back(std::move(next));
          }
        }
      }
    }
    if (irreducible) {
      results.push_back(std::move(g));
      if (options.stop_after != 0 && results.size() >= options.stop_after) break;
    }
  }
  return results;
}

}  // namespace diamond
