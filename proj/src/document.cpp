#include "diamond/document.hpp"

#include <set>

#include "diamond/error.hpp"

namespace diamond {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const Json& member(const Json& object, const std::string& key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

std::string string_at(const Json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

std::uint64_t unsigned_at(const Json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return value.get<std::uint64_t>();
}

// Re-throws library errors with the field path prepended.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    fail(path, e.what());
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
}

Field parse_field(const Json& root) {
  std::string tag = string_at(member(root, "field", "document"), "field");
  if (tag == "Q") return Field::rationals();
  if (tag != "Fp") fail("field", "expected \"Q\" or \"Fp\"");
  std::uint64_t p = unsigned_at(member(root, "p", "document"), "p");
  if (p > UINT32_MAX) fail("p", "prime too large");
  return at_path("p", [&] { return Field::prime(static_cast<std::uint32_t>(p)); });
}

Certificate parse_certificate(const Json& cert, const Alphabet& alphabet) {
  const std::string path = "certificate";
  if (!cert.is_object() || cert.size() != 1) fail(path, "expected exactly one of \"deglex\" or \"measure\"");
  if (auto it = cert.find("deglex"); it != cert.end()) {
    const std::string dpath = path + ".deglex";
    if (!it->is_object()) fail(dpath, "expected an object");
    std::vector<std::uint64_t> weights(alphabet.size(), 1);
    if (auto w = it->find("weights"); w != it->end()) {
      if (!w->is_object()) fail(dpath + ".weights", "expected an object");
      for (const auto& [name, value] : w->items()) {
        std::string wpath = dpath + ".weights." + name;
        Letter x = at_path(wpath, [&] { return alphabet.index(name); });
        weights[x] = unsigned_at(value, wpath);
        if (weights[x] == 0) fail(wpath, "weights must be positive");
      }
    }
    std::vector<Letter> order;
    if (auto o = it->find("order"); o != it->end()) {
      if (!o->is_array()) fail(dpath + ".order", "expected an array of generator names");
      for (std::size_t i = 0; i < o->size(); ++i) {
        std::string opath = dpath + ".order[" + std::to_string(i) + "]";
        std::string name = string_at((*o)[i], opath);
        order.push_back(at_path(opath, [&] { return alphabet.index(name); }));
      }
    } else {
      for (Letter x = 0; x < alphabet.size(); ++x) order.push_back(x);
    }
    return at_path(dpath, [&] { return DeglexOrder(std::move(weights), std::move(order)); });
  }
  if (auto it = cert.find("measure"); it != cert.end()) {
    const std::string mpath = path + ".measure";
    if (!it->is_object() || it->empty()) fail(mpath, "expected a nonempty object of pattern -> coefficient");
    std::vector<std::pair<Word, std::uint64_t>> coeffs;
    for (const auto& [pattern, value] : it->items()) {
      std::string ppath = mpath + "." + pattern;
      Word w = at_path(ppath, [&] { return parse_word(pattern, alphabet); });
      coeffs.emplace_back(std::move(w), unsigned_at(value, ppath));
    }
    return at_path(mpath, [&] { return MeasureCertificate(std::move(coeffs)); });
  }
  fail(path, "expected exactly one of \"deglex\" or \"measure\"");
}

}  // namespace

SystemDocument parse_document(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document_json(json);
}

SystemDocument parse_document_json(const Json& root) {
  if (!root.is_object()) fail("document", "expected a JSON object");
  static const std::set<std::string> known{"field", "p", "generators", "rules", "certificate"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) fail(key, "unknown key");

  Field field = parse_field(root);

  const Json& gens = member(root, "generators", "document");
  if (!gens.is_array()) fail("generators", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i)
    names.push_back(string_at(gens[i], "generators[" + std::to_string(i) + "]"));
  Alphabet alphabet = at_path("generators", [&] { return Alphabet(std::move(names)); });

  const Json& rules_json = member(root, "rules", "document");
  if (!rules_json.is_array()) fail("rules", "expected an array");
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < rules_json.size(); ++i) {
    std::string rpath = "rules[" + std::to_string(i) + "]";
    const Json& r = rules_json[i];
    if (!r.is_object()) fail(rpath, "expected an object with \"lhs\" and \"rhs\"");
    std::string lhs = string_at(member(r, "lhs", rpath), rpath + ".lhs");
    std::string rhs = string_at(member(r, "rhs", rpath), rpath + ".rhs");
    Rule rule{at_path(rpath + ".lhs", [&] { return parse_word(lhs, alphabet); }),
              at_path(rpath + ".rhs", [&] { return parse_poly(rhs, alphabet, field); })};
    rules.push_back(std::move(rule));
  }
  System system = at_path("rules", [&] { return System(alphabet, field, std::move(rules)); });

  SystemDocument doc{std::move(system), std::nullopt};
  if (auto it = root.find("certificate"); it != root.end() && !it->is_null())
    doc.certificate = parse_certificate(*it, doc.system.alphabet());
  return doc;
}

Json certificate_to_json(const Certificate& cert, const Alphabet& alphabet) {
  Json out = Json::object();
  if (const auto* order = std::get_if<DeglexOrder>(&cert)) {
    Json weights = Json::object();
    for (Letter x = 0; x < alphabet.size(); ++x) weights[alphabet.name(x)] = order->weight(x);
    Json ascending = Json::array();
    for (Letter x : order->ascending()) ascending.push_back(alphabet.name(x));
    out["deglex"] = {{"weights", weights}, {"order", ascending}};
  } else {
    Json measure = Json::object();
    for (const auto& [pattern, c] : std::get<MeasureCertificate>(cert).coefficients())
      measure[alphabet.format(pattern)] = c;
    out["measure"] = measure;
  }
  return out;
}

Json document_to_json(const SystemDocument& doc) {
  const System& s = doc.system;
  Json out = Json::object();
  if (s.field().is_rational()) {
    out["field"] = "Q";
  } else {
    out["field"] = "Fp";
    out["p"] = s.field().characteristic();
  }
  out["generators"] = s.alphabet().names();
  Json rules = Json::array();
  for (const Rule& r : s.rules())
    rules.push_back({{"lhs", s.alphabet().format(r.lhs)}, {"rhs", format_poly(r.rhs, s.alphabet())}});
  out["rules"] = rules;
  if (doc.certificate) out["certificate"] = certificate_to_json(*doc.certificate, s.alphabet());
  return out;
}

}  // namespace diamond
