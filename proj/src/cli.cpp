#include "diamond/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "diamond/ambiguity.hpp"
#include "diamond/chains.hpp"
#include "diamond/dgmodel.hpp"
#include "diamond/document.hpp"
#include "diamond/error.hpp"
#include "diamond/rewrite.hpp"

namespace diamond::cli {

namespace {

struct CommandFailure {
  int code;
  std::string message;
};

struct Common {
  std::string path;
  bool json = false;
  std::uint64_t fuse = NormalFormOptions{}.fuse;
};

struct Context {
  Common common;
  std::istream& in;
  std::ostream& out;

  SystemDocument load() const {
    std::stringstream buffer;
    if (common.path.empty() || common.path == "-") {
      buffer << in.rdbuf();
    } else {
      std::ifstream file(common.path);
      if (!file) throw CommandFailure{Invalid, "cannot open " + common.path};
      buffer << file.rdbuf();
    }
    return parse_document(buffer.str());
  }

  NormalFormOptions nf_options() const { return {common.fuse}; }

  void emit(const Json& json) const { out << json.dump(2) << "\n"; }
};

const Certificate& require_certificate(const SystemDocument& doc) {
  if (!doc.certificate) throw CommandFailure{Invalid, "document has no termination certificate"};
  return *doc.certificate;
}

// Reductions are only run under a certificate that verifies.
const Certificate& require_certified(const SystemDocument& doc) {
  const Certificate& cert = require_certificate(doc);
  if (!certify(doc.system, cert).certified)
    throw CommandFailure{CertificateFailed, "termination certificate does not verify (see 'certify')"};
  return cert;
}

std::string word_str(const System& s, const Word& w) { return s.alphabet().format(w); }
std::string poly_str(const System& s, const Poly& p) { return format_poly(p, s.alphabet()); }

std::string certificate_kind(const Certificate& cert) {
  return std::holds_alternative<DeglexOrder>(cert) ? "deglex" : "measure";
}

Json trace_json(const System& s, const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& step : trace.steps)
    steps.push_back({{"rule", word_str(s, s.rule(step.rule).lhs)},
                     {"prefix", word_str(s, step.occurrence.prefix)},
                     {"suffix", word_str(s, step.occurrence.suffix)},
                     {"coefficient", step.coefficient.to_string()}});
  return steps;
}

Json report_json(const SystemDocument& doc, const ConvergenceReport& report) {
  const System& s = doc.system;
  Json ambs = Json::array();
  for (const auto& r : report.ambiguities)
    ambs.push_back({{"grade", word_str(s, r.ambiguity.grade)},
                    {"kind", to_string(r.ambiguity.kind)},
                    {"minimal", r.ambiguity.minimal},
                    {"obstruction", poly_str(s, r.obstruction)},
                    {"residue", poly_str(s, r.residue)},
                    {"trace_length", r.trace.steps.size()}});
  Json out = Json::object();
  out["verdict"] = report.convergent ? "Convergent" : "NotConvergent";
  out["mode"] = to_string(report.mode);
  out["ambiguities"] = ambs;
  out["certificate"] = doc.certificate ? certificate_to_json(*doc.certificate, s.alphabet()) : Json(nullptr);
  return out;
}

void print_report(std::ostream& out, const System& s, const ConvergenceReport& report) {
  out << "mode: " << to_string(report.mode) << "\n";
  out << "verdict: " << (report.convergent ? "Convergent" : "NotConvergent") << "\n";
  out << "ambiguities: " << report.ambiguities.size() << "\n";
  out << "failures: " << report.failures().size() << "\n";
  for (const auto& r : report.ambiguities) {
    out << "  " << std::left << std::setw(12) << word_str(s, r.ambiguity.grade) << std::setw(10)
        << to_string(r.ambiguity.kind) << std::setw(12) << (r.ambiguity.minimal ? "minimal" : "non-minimal")
        << "residue: " << poly_str(s, r.residue) << "\n";
  }
}

int cmd_certify(const Context& ctx) {
  SystemDocument doc = ctx.load();
  const System& s = doc.system;
  const Certificate& cert = require_certificate(doc);
  CertResult result = certify(s, cert);
  const char* verdict = result.certified ? "Certified" : "Failed";
  if (ctx.common.json) {
    Json witnesses = Json::array();
    for (const auto& w : result.witnesses)
      witnesses.push_back({{"rule", word_str(s, s.rule(w.rule).lhs)},
                           {"prefix", word_str(s, w.prefix)},
                           {"suffix", word_str(s, w.suffix)},
                           {"offending", word_str(s, w.offending)}});
    Json out = Json::object();
    out["verdict"] = verdict;
    out["certificate"] = certificate_to_json(cert, s.alphabet());
    out["witnesses"] = witnesses;
    ctx.emit(out);
  } else {
    ctx.out << "certificate: " << certificate_kind(cert) << "\n";
    ctx.out << "verdict: " << verdict << "\n";
    for (const auto& w : result.witnesses)
      ctx.out << "  witness: rule " << word_str(s, s.rule(w.rule).lhs) << ", context (" << word_str(s, w.prefix)
              << ", " << word_str(s, w.suffix) << "), term " << word_str(s, w.offending) << "\n";
  }
  return result.certified ? Ok : CertificateFailed;
}

int cmd_check(const Context& ctx, const std::string& mode_name) {
  SystemDocument doc = ctx.load();
  const Certificate& cert = require_certified(doc);
  ConvergenceMode mode = mode_name == "triangle" ? ConvergenceMode::Triangle : ConvergenceMode::Diamond;
  ConvergenceReport report = check_convergence(doc.system, cert, mode, ctx.nf_options());
  if (ctx.common.json)
    ctx.emit(report_json(doc, report));
  else
    print_report(ctx.out, doc.system, report);
  return report.convergent ? Ok : NotConvergent;
}

int cmd_nf(const Context& ctx, const std::string& expr) {
  SystemDocument doc = ctx.load();
  const System& s = doc.system;
  const Certificate& cert = require_certified(doc);
  Poly g = parse_poly(expr, s.alphabet(), s.field());
  NormalForm nf = normal_form(s, cert, g, ctx.nf_options());
  if (ctx.common.json) {
    Json out = Json::object();
    out["input"] = poly_str(s, g);
    out["normal_form"] = poly_str(s, nf.value);
    out["trace"] = trace_json(s, nf.trace);
    ctx.emit(out);
  } else {
    ctx.out << poly_str(s, nf.value) << "\n";
    ctx.out << "steps: " << nf.trace.steps.size() << "\n";
  }
  return Ok;
}

int cmd_obstructions(const Context& ctx) {
  SystemDocument doc = ctx.load();
  const System& s = doc.system;
  const Certificate& cert = require_certified(doc);
  Json list = Json::array();
  bool all_hold = true;
  auto ambiguities = find_ambiguities(s);
  if (!ctx.common.json) ctx.out << "ambiguities: " << ambiguities.size() << "\n";
  for (const Ambiguity& amb : ambiguities) {
    McResidual mc = mc_residual(s, cert, amb, ctx.nf_options());
    all_hold = all_hold && mc.maurer_cartan_holds();
    if (ctx.common.json) {
      list.push_back({{"grade", word_str(s, amb.grade)},
                      {"kind", to_string(amb.kind)},
                      {"minimal", amb.minimal},
                      {"left", word_str(s, s.rule(amb.first).lhs)},
                      {"right", word_str(s, s.rule(amb.second).lhs)},
                      {"a", word_str(s, amb.a)},
                      {"b", word_str(s, amb.b)},
                      {"obstruction", poly_str(s, mc.obstruction)},
                      {"residue", poly_str(s, mc.residue)},
                      {"trace_length", mc.trace.steps.size()},
                      {"witness_residual", poly_str(s, mc.residual)},
                      {"mc_value", poly_str(s, mc.mc_value)},
                      {"mc_holds", mc.maurer_cartan_holds()}});
    } else {
      ctx.out << word_str(s, amb.grade) << "  " << to_string(amb.kind)
              << (amb.minimal ? "  minimal" : "  non-minimal") << "  (" << word_str(s, s.rule(amb.first).lhs)
              << ", " << word_str(s, s.rule(amb.second).lhs) << ")\n";
      ctx.out << "  obstruction: " << poly_str(s, mc.obstruction) << "\n";
      ctx.out << "  residue: " << poly_str(s, mc.residue) << "\n";
      ctx.out << "  trace length: " << mc.trace.steps.size() << "\n";
      ctx.out << "  witness residual: " << poly_str(s, mc.residual) << "\n";
      ctx.out << "  maurer-cartan: " << (mc.maurer_cartan_holds() ? "holds" : "fails") << "\n";
    }
  }
  if (ctx.common.json) {
    Json out = Json::object();
    out["verdict"] = all_hold ? "Convergent" : "NotConvergent";
    out["ambiguities"] = list;
    ctx.emit(out);
  }
  return Ok;
}

int cmd_chains(const Context& ctx, std::size_t max_degree, std::size_t max_length) {
  SystemDocument doc = ctx.load();
  System monomial = doc.system.monomial_part();
  AnickModel model(monomial, max_degree, max_length);
  DSquaredReport d2 = model.verify_d_squared();
  const Alphabet& alphabet = monomial.alphabet();
  if (ctx.common.json) {
    Json chains = Json::array();
    for (const Chain& c : model.chains())
      chains.push_back({{"word", alphabet.format(c.word)},
                        {"degree", c.degree},
                        {"tail", alphabet.format(c.tail)},
                        {"differential", model.differential(c).to_string(alphabet)}});
    Json violations = Json::array();
    for (const auto& v : d2.violations)
      violations.push_back({{"word", alphabet.format(v.chain.word)}, {"d", v.d.to_string(alphabet)},
                            {"dd", v.dd.to_string(alphabet)}});
    Json out = Json::object();
    out["max_degree"] = max_degree;
    out["max_length"] = max_length;
    out["chains"] = chains;
    out["d_squared"] = {{"checked", d2.chains_checked}, {"ok", d2.ok()}, {"violations", violations}};
    ctx.emit(out);
  } else {
    ctx.out << "chains: " << model.chains().size() << "\n";
    for (const Chain& c : model.chains()) {
      ctx.out << "  degree " << c.degree << "  " << std::left << std::setw(12) << alphabet.format(c.word)
              << " tail " << std::setw(10) << alphabet.format(c.tail);
      if (c.degree > 0) ctx.out << "d = " << model.differential(c).to_string(alphabet);
      ctx.out << "\n";
    }
    ctx.out << "d^2: " << (d2.ok() ? "ok" : "VIOLATED") << " (" << d2.chains_checked << " chains checked)\n";
    for (const auto& v : d2.violations)
      ctx.out << "  " << alphabet.format(v.chain.word) << ": d^2 = " << v.dd.to_string(alphabet) << "\n";
  }
  return d2.ok() ? Ok : Internal;
}

int cmd_homology(const Context& ctx, std::size_t max_length, std::size_t max_degree, bool full) {
  SystemDocument doc = ctx.load();
  const System& s = doc.system;
  TruncatedComplex complex = build_shafarevich(s, max_length, max_degree, !full);
  auto grade_label = [&](const Grade& g) {
    if (const auto* w = std::get_if<Word>(&g)) return word_str(s, *w);
    return "length " + std::to_string(std::get<std::size_t>(g));
  };
  auto grade_length = [](const Grade& g) {
    if (const auto* w = std::get_if<Word>(&g)) return w->size();
    return std::get<std::size_t>(g);
  };
  // totals[length][degree] = summed homology
  std::vector<std::vector<std::size_t>> totals(max_length + 1, std::vector<std::size_t>(max_degree + 1, 0));
  Json rows = Json::array();
  std::vector<std::string> nonzero;
  for (const auto& [grade, comp] : complex.components) {
    for (std::size_t n = 0; n <= max_degree; ++n) {
      if (comp.dimension(n) == 0) continue;
      HomologyRanks h = homology_ranks(comp, n, max_degree);
      totals[grade_length(grade)][n] += h.homology;
      if (ctx.common.json)
        rows.push_back({{"grade", grade_label(grade)},
                        {"degree", n},
                        {"dimension", h.dimension},
                        {"kernel", h.kernel},
                        {"image", h.image},
                        {"homology", h.homology},
                        {"upper_bound", h.upper_bound}});
      else if (n > 0 && h.homology > 0)
        nonzero.push_back(grade_label(grade) + "  H_" + std::to_string(n) + " = " + std::to_string(h.homology) +
                          (h.upper_bound ? " (upper bound)" : ""));
    }
  }
  if (ctx.common.json) {
    Json out = Json::object();
    out["complex"] = full ? "full" : "monomial";
    out["max_length"] = max_length;
    out["max_degree"] = max_degree;
    out["components"] = rows;
    ctx.emit(out);
    return Ok;
  }
  ctx.out << "complex: " << (full ? "full" : "monomial") << ", max length " << max_length << ", max degree "
          << max_degree << "\n";
  ctx.out << "length";
  for (std::size_t n = 0; n <= max_degree; ++n) ctx.out << "  H_" << n;
  ctx.out << "\n";
  for (std::size_t len = 0; len <= max_length; ++len) {
    ctx.out << std::left << std::setw(6) << len;
    for (std::size_t n = 0; n <= max_degree; ++n) ctx.out << "  " << std::setw(3) << totals[len][n];
    ctx.out << "\n";
  }
  ctx.out << "nonzero positive-degree homology: " << nonzero.size() << "\n";
  for (const auto& line : nonzero) ctx.out << "  " << line << "\n";
  if (max_degree >= 1) ctx.out << "(degree " << max_degree << " is an upper bound)\n";
  return Ok;
}

int cmd_oracle(const Context& ctx, std::optional<std::size_t> max_length_opt) {
  SystemDocument doc = ctx.load();
  const System& s = doc.system;
  require_certified(doc);
  std::size_t max_length = max_length_opt.value_or(2 * s.max_lhs_length());
  std::vector<Word> words{Word{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == max_length) continue;
    for (Letter x = 0; x < s.alphabet().size(); ++x) words.push_back(words[i] * Word{x});
  }
  std::size_t checked = 0;
  Json witnesses = Json::array();
  std::vector<std::string> lines;
  for (const Word& w : words) {
    if (!s.is_reducible(w)) continue;
    ++checked;
    auto forms = reduction_graph_oracle(s, w, {.state_fuse = OracleOptions{}.state_fuse, .stop_after = 2});
    if (forms.size() < 2) continue;
    Json nfs = Json::array();
    for (const Poly& p : forms) nfs.push_back(poly_str(s, p));
    witnesses.push_back({{"word", word_str(s, w)}, {"normal_forms", nfs}});
    lines.push_back(word_str(s, w) + ": " + poly_str(s, forms[0]) + "  |  " + poly_str(s, forms[1]));
  }
  bool unique = witnesses.empty();
  if (ctx.common.json) {
    Json out = Json::object();
    out["verdict"] = unique ? "Convergent" : "NotConvergent";
    out["max_length"] = max_length;
    out["words_checked"] = checked;
    out["witnesses"] = witnesses;
    ctx.emit(out);
  } else {
    ctx.out << "max length: " << max_length << "\n";
    ctx.out << "reducible words checked: " << checked << "\n";
    ctx.out << "verdict: " << (unique ? "Convergent" : "NotConvergent") << "\n";
    for (const auto& line : lines) ctx.out << "  " << line << "\n";
  }
  return unique ? Ok : NotConvergent;
}

int cmd_complete(const Context& ctx, std::size_t max_rounds) {
  SystemDocument doc = ctx.load();
  const Certificate& cert = require_certificate(doc);
  const auto* order = std::get_if<DeglexOrder>(&cert);
  if (!order) throw CommandFailure{Invalid, "completion needs a deglex certificate"};
  require_certified(doc);
  CompletionResult result = complete(doc.system, *order, max_rounds, ctx.nf_options());
  SystemDocument completed{result.system, doc.certificate};
  const System& s = result.system;
  Json degenerate = Json::array();
  for (const Poly& p : result.degenerate_residues) degenerate.push_back(poly_str(s, p));
  if (ctx.common.json) {
    Json out = Json::object();
    out["document"] = document_to_json(completed);
    out["rounds"] = result.rounds;
    out["added_rules"] = result.added_rules;
    out["degenerate_residues"] = degenerate;
    out["report"] = report_json(completed, result.report);
    ctx.emit(out);
  } else {
    ctx.out << "rounds: " << result.rounds << "\n";
    ctx.out << "added rules: " << result.added_rules << "\n";
    for (const Poly& p : result.degenerate_residues)
      ctx.out << "degenerate residue (constant lead): " << poly_str(s, p) << "\n";
    print_report(ctx.out, s, result.report);
    ctx.out << "document:\n" << document_to_json(completed).dump(2) << "\n";
  }
  return result.report.convergent ? Ok : NotConvergent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rewriting systems: termination certificates, convergence, Anick chains, homology"};
  app.name("diamond");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("document", common.path, "System document (JSON); stdin when absent or '-'");
    sub->add_flag("--json", common.json, "Emit the machine-readable report");
    sub->add_option("--fuse", common.fuse, "Reduction step fuse per normal form")->check(CLI::PositiveNumber);
  };

  auto* certify_cmd = app.add_subcommand("certify", "Verify the termination certificate");
  add_common(certify_cmd);

  std::string mode = "diamond";
  auto* check_cmd = app.add_subcommand("check", "Decide convergence by reducing obstructions");
  add_common(check_cmd);
  check_cmd->add_option("--mode", mode, "diamond or triangle")
      ->check(CLI::IsMember({"diamond", "triangle"}));

  std::string expr;
  auto* nf_cmd = app.add_subcommand("nf", "Normal form of a polynomial with its reduction trace");
  add_common(nf_cmd);
  nf_cmd->add_option("--expr", expr, "Polynomial expression")->required();

  auto* obstructions_cmd = app.add_subcommand("obstructions", "Ambiguities, obstructions, residues, MC residuals");
  add_common(obstructions_cmd);

  std::size_t max_degree = 4;
  std::size_t max_length = 10;
  auto* chains_cmd = app.add_subcommand("chains", "Anick chains of the monomial part and their differentials");
  add_common(chains_cmd);
  chains_cmd->add_option("--max-degree", max_degree, "Largest chain degree");
  chains_cmd->add_option("--max-length", max_length, "Longest chain word");

  std::size_t h_length = 6;
  std::size_t h_degree = 2;
  bool monomial = false;
  bool full = false;
  auto* homology_cmd = app.add_subcommand("homology", "Homology of the truncated Shafarevich complex");
  add_common(homology_cmd);
  homology_cmd->add_option("--max-length", h_length, "Largest grade length");
  homology_cmd->add_option("--max-degree", h_degree, "Largest homological degree");
  auto* monomial_flag = homology_cmd->add_flag("--monomial", monomial, "d(e_w) = w, split by word grade (default)");
  auto* full_flag = homology_cmd->add_flag("--full", full, "d(e_w) = w - f(w), split by length");
  monomial_flag->excludes(full_flag);

  std::optional<std::size_t> oracle_length;
  auto* oracle_cmd = app.add_subcommand("oracle", "Explore every reduction path of every short word");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--max-length", oracle_length, "Longest word (default 2 * longest lhs)");

  std::size_t max_rounds = 3;
  auto* complete_cmd = app.add_subcommand("complete", "Add oriented residues as rules until convergent");
  add_common(complete_cmd);
  complete_cmd->add_option("--max-rounds", max_rounds, "Completion rounds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : Invalid;
  }

  Context ctx{common, in, out};
  try {
    if (certify_cmd->parsed()) return cmd_certify(ctx);
    if (check_cmd->parsed()) return cmd_check(ctx, mode);
    if (nf_cmd->parsed()) return cmd_nf(ctx, expr);
    if (obstructions_cmd->parsed()) return cmd_obstructions(ctx);
    if (chains_cmd->parsed()) return cmd_chains(ctx, max_degree, max_length);
    if (homology_cmd->parsed()) return cmd_homology(ctx, h_length, h_degree, full);
    if (oracle_cmd->parsed()) return cmd_oracle(ctx, oracle_length);
    if (complete_cmd->parsed()) return cmd_complete(ctx, max_rounds);
  } catch (const CommandFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const FuseExceeded& e) {
    err << "error: " << e.what() << "\n";
    return ResourceExceeded;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return ResourceExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Invalid;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return Internal;
  }
  return Invalid;
}

}  // namespace diamond::cli
