#include "diamond/dgmodel.hpp"

#include <algorithm>
#include <stdexcept>

#include "diamond/error.hpp"

namespace diamond {

namespace {

int sign_of(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_len, std::size_t budget) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Letter x = 0; x < alphabet_size; ++x) {
        out.push_back(out[i] * Word{x});
        if (out.size() > budget) throw BudgetExceeded("too many grades in the truncation");
      }
    level_begin = level_end;
  }
  return out;
}

ShaTensor letters_of(const Word& w) {
  ShaTensor t;
  for (Letter x : w) t.push_back({false, x});
  return t;
}

// Tensor words of a fixed grade: each position is covered by a generator or
// by a relation symbol whose word matches there.
void tensors_of_grade(const System& system, const Word& grade, std::size_t max_degree,
                      std::vector<std::vector<ShaTensor>>& by_degree) {
  ShaTensor current;
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t degree) -> void {
    if (pos == grade.size()) {
      by_degree[degree].push_back(current);
      return;
    }
    current.push_back({false, grade[pos]});
    self(self, pos + 1, degree);
    current.pop_back();
    if (degree == max_degree) return;
    for (std::size_t r = 0; r < system.size(); ++r) {
      if (!grade.matches_at(system.rule(r).lhs, pos)) continue;
      current.push_back({true, r});
      self(self, pos + system.rule(r).lhs.size(), degree + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

// Tensor words of a fixed total length, over all grades.
void tensors_of_length(const System& system, std::size_t length, std::size_t max_degree,
                       std::size_t budget, std::size_t& total,
                       std::vector<std::vector<ShaTensor>>& by_degree) {
  ShaTensor current;
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t degree) -> void {
    if (remaining == 0) {
      by_degree[degree].push_back(current);
      if (++total > budget) throw BudgetExceeded("Shafarevich basis exceeds the configured budget");
      return;
    }
    for (Letter x = 0; x < system.alphabet().size(); ++x) {
      current.push_back({false, x});
      self(self, remaining - 1, degree);
      current.pop_back();
    }
    if (degree == max_degree) return;
    for (std::size_t r = 0; r < system.size(); ++r) {
      std::size_t len = system.rule(r).lhs.size();
      if (len > remaining) continue;
      current.push_back({true, r});
      self(self, remaining - len, degree + 1);
      current.pop_back();
    }
  };
  recurse(recurse, length, 0);
}

ComplexComponent assemble(const System& system, std::vector<std::vector<ShaTensor>> by_degree,
                          bool monomial_only) {
  Field field = system.field();
  ComplexComponent comp;
  std::vector<std::map<ShaTensor, std::size_t>> index(by_degree.size());
  for (std::size_t n = 0; n < by_degree.size(); ++n) {
    std::sort(by_degree[n].begin(), by_degree[n].end());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < by_degree[n].size(); ++i) {
      index[n].emplace(by_degree[n][i], i);
      labels.push_back(format_sha_tensor(by_degree[n][i], system));
    }
    comp.basis.push_back(std::move(labels));
  }
  comp.differentials.emplace_back(field, 0, by_degree[0].size());
  for (std::size_t n = 1; n < by_degree.size(); ++n) {
    SparseMatrix d(field, by_degree[n - 1].size(), by_degree[n].size());
    for (std::size_t col = 0; col < by_degree[n].size(); ++col) {
      const ShaTensor& t = by_degree[n][col];
      std::size_t relations_before = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_relation) continue;
        const Rule& rule = system.rule(t[i].index);
        Poly image = Poly::monomial(field, rule.lhs);
        if (!monomial_only) image -= rule.rhs;
        Scalar sign(field, sign_of(relations_before));
        for (const auto& [m, c] : image.terms()) {
          ShaTensor out(t.begin(), t.begin() + i);
          ShaTensor mid = letters_of(m);
          out.insert(out.end(), mid.begin(), mid.end());
          out.insert(out.end(), t.begin() + i + 1, t.end());
          auto it = index[n - 1].find(out);
          if (it == index[n - 1].end()) throw std::logic_error("differential leaves its component");
          d.add(it->second, col, sign * c);
        }
        ++relations_before;
      }
    }
    comp.differentials.push_back(std::move(d));
  }
  for (std::size_t n = 2; n < comp.differentials.size(); ++n)
    if (!comp.differentials[n - 1].multiply(comp.differentials[n]).is_zero())
      throw std::logic_error("D^2 != 0 in a Shafarevich component");
  return comp;
}

bool covers_split(const std::vector<Divisor>& divisors, const std::vector<std::size_t>& chosen,
                  std::size_t split) {
  for (std::size_t i : chosen) {
    const auto& d = divisors[i];
    if (d.start < split && d.start + d.length > split) return false;
  }
  return true;
}

bool is_indecomposable(const Word& grade, const std::vector<Divisor>& divisors,
                       const std::vector<std::size_t>& chosen) {
  for (std::size_t split = 1; split < grade.size(); ++split)
    if (covers_split(divisors, chosen, split)) return false;
  return true;
}

std::vector<Divisor> divisors_of(const System& system, const Word& grade) {
  std::vector<Divisor> out;
  for (std::size_t pos = 0; pos < grade.size(); ++pos)
    for (std::size_t r = 0; r < system.size(); ++r)
      if (grade.matches_at(system.rule(r).lhs, pos)) out.push_back({pos, system.rule(r).lhs.size(), r});
  return out;
}

}  // namespace

std::string format_sha_tensor(const ShaTensor& t, const System& system) {
  if (t.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += "*";
    if (t[i].is_relation)
      out += "e(" + system.alphabet().format(system.rule(t[i].index).lhs) + ")";
    else
      out += system.alphabet().name(static_cast<Letter>(t[i].index));
  }
  return out;
}

const ComplexComponent& TruncatedComplex::component(const Grade& grade) const {
  auto it = components.find(grade);
  if (it == components.end()) throw PreconditionError("grade outside the truncation");
  return it->second;
}

TruncatedComplex build_shafarevich(const System& system, std::size_t max_grade_length,
                                   std::size_t max_degree, bool monomial_only,
                                   const ShafarevichOptions& options) {
  TruncatedComplex complex;
  complex.max_length = max_grade_length;
  complex.max_degree = max_degree;
  complex.word_graded = monomial_only;
  if (monomial_only) {
    std::size_t total = 0;
    for (const Word& grade : words_up_to(system.alphabet().size(), max_grade_length, options.basis_budget)) {
      std::vector<std::vector<ShaTensor>> by_degree(max_degree + 1);
      tensors_of_grade(system, grade, max_degree, by_degree);
      for (const auto& level : by_degree) total += level.size();
      if (total > options.basis_budget)
        throw BudgetExceeded("Shafarevich basis exceeds the configured budget");
      complex.components.emplace(grade, assemble(system, std::move(by_degree), true));
    }
    return complex;
  }
  if (!system.is_length_homogeneous())
    throw PreconditionError("the full Shafarevich complex is graded by length and needs length-homogeneous rules");
  std::size_t total = 0;
  for (std::size_t len = 0; len <= max_grade_length; ++len) {
    std::vector<std::vector<ShaTensor>> by_degree(max_degree + 1);
    tensors_of_length(system, len, max_degree, options.basis_budget, total, by_degree);
    complex.components.emplace(len, assemble(system, std::move(by_degree), false));
  }
  return complex;
}

HomologyRanks homology_ranks(const ComplexComponent& component, std::size_t degree,
                             std::size_t max_degree) {
  HomologyRanks h;
  h.dimension = component.dimension(degree);
  std::size_t rank_out = (degree >= 1 && degree < component.differentials.size())
                             ? exact_rank(component.differentials[degree])
                             : 0;
  h.kernel = h.dimension - rank_out;
  if (degree + 1 > max_degree) {
    h.upper_bound = true;
  } else if (degree + 1 < component.differentials.size()) {
    h.image = exact_rank(component.differentials[degree + 1]);
  }
  h.homology = h.kernel - h.image;
  return h;
}

HomologyRanks homology_ranks(const TruncatedComplex& complex, const Grade& grade, std::size_t degree) {
  return homology_ranks(complex.component(grade), degree, complex.max_degree);
}

GrassmannComponent build_ie_component(const System& system, const Word& grade,
                                      const GrassmannOptions& options) {
  GrassmannComponent g;
  g.grade = grade;
  g.divisors = divisors_of(system, grade);
  std::size_t m = g.divisors.size();
  if (m > options.max_divisors)
    throw BudgetExceeded("grade has " + std::to_string(m) + " relation occurrences");

  g.subsets.resize(m + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.push_back(i);
    g.subsets[chosen.size()].push_back(std::move(chosen));
  }
  Field field = system.field();
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(m + 1);
  g.indecomposable.resize(m + 1);
  for (std::size_t n = 0; n <= m; ++n) {
    std::sort(g.subsets[n].begin(), g.subsets[n].end());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.subsets[n].size(); ++i) {
      const auto& s = g.subsets[n][i];
      index[n].emplace(s, i);
      g.indecomposable[n].push_back(is_indecomposable(grade, g.divisors, s));
      std::string label = s.empty() ? "1" : "";
      for (std::size_t k = 0; k < s.size(); ++k) label += (k ? "^D" : "D") + std::to_string(s[k] + 1);
      labels.push_back(std::move(label));
    }
    g.complex.basis.push_back(std::move(labels));
  }
  g.complex.differentials.emplace_back(field, 0, g.subsets[0].size());
  for (std::size_t n = 1; n <= m; ++n) {
    SparseMatrix d(field, g.subsets[n - 1].size(), g.subsets[n].size());
    for (std::size_t col = 0; col < g.subsets[n].size(); ++col) {
      const auto& s = g.subsets[n][col];
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + j);
        d.add(index[n - 1].at(rest), col, Scalar(field, sign_of(j)));
      }
    }
    g.complex.differentials.push_back(std::move(d));
  }
  for (std::size_t n = 2; n <= m; ++n)
    if (!g.complex.differentials[n - 1].multiply(g.complex.differentials[n]).is_zero())
      throw std::logic_error("D^2 != 0 in a Grassmann component");
  return g;
}

std::vector<CensusEntry> ie_degree2_census(const System& system, std::size_t max_grade_length,
                                           const GrassmannOptions& options) {
  std::vector<CensusEntry> out;
  for (const Word& grade : words_up_to(system.alphabet().size(), max_grade_length, SIZE_MAX)) {
    auto divisors = divisors_of(system, grade);
    if (divisors.size() < 2) continue;
    if (divisors.size() > options.max_divisors)
      throw BudgetExceeded("grade has too many relation occurrences");
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      for (std::size_t j = i + 1; j < divisors.size(); ++j) {
        if (!is_indecomposable(grade, divisors, {i, j})) continue;
        DivisorSpan di{divisors[i].start, divisors[i].length};
        DivisorSpan dj{divisors[j].start, divisors[j].length};
        auto is_full = [&](const DivisorSpan& d) { return d.start == 0 && d.length == grade.size(); };
        CensusEntry e;
        e.grade = grade;
        if (is_full(di) || is_full(dj)) {
          e.kind = AmbiguityKind::Inclusion;
          e.first = is_full(di) ? di : dj;
          e.second = is_full(di) ? dj : di;
        } else {
          e.kind = AmbiguityKind::Overlap;
          e.first = di.start == 0 ? di : dj;
          e.second = di.start == 0 ? dj : di;
          if (e.first.start != 0 || e.second.start + e.second.length != grade.size() ||
              e.second.start >= e.first.length)
            throw std::logic_error("indecomposable 2-wedge is neither an inclusion nor an overlap");
        }
        out.push_back(std::move(e));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CensusEntry& x, const CensusEntry& y) {
    if (DeglexIndexLess{}(x.grade, y.grade)) return true;
    if (DeglexIndexLess{}(y.grade, x.grade)) return false;
    return std::tie(x.kind, x.first, x.second) < std::tie(y.kind, y.first, y.second);
  });
  return out;
}

CensusEntry census_entry(const System& system, const Ambiguity& amb) {
  auto [first, second] = amb.divisors(system);
  return {amb.grade, amb.kind, first, second};
}

}  // namespace diamond
