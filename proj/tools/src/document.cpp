#include "torfan_cli/document.hpp"

#include <charconv>

#include "torfan/error.hpp"

namespace torfan::cli {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  fail(ErrorKind::ValidationError, where + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
  }
}

BigInt integer_at(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    BigInt z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  invalid(where, "expected an integer");
}

BigRational rational_at(const json& v, const std::string& where) {
  if (v.is_number_integer()) return BigRational(integer_at(v, where));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  invalid(where, "expected a rational such as \"-1\" or \"1/2\"");
}

const json& array_at(const json& doc, const std::string& key) {
  if (!doc.contains(key)) invalid(key, "missing");
  if (!doc[key].is_array()) invalid(key, "expected an array");
  return doc[key];
}

std::size_t index_at(const json& v, std::size_t count, const std::string& where) {
  if (!v.is_number_integer()) invalid(where, "expected an index");
  long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > count)
    invalid(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(count));
  return static_cast<std::size_t>(i - 1);
}

std::size_t shorthand_size(std::string_view name, std::string_view prefix) {
  std::string_view digits = name.substr(prefix.size());
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0)
    invalid("base", "unknown base '" + std::string(name) + "'");
  return n;
}

Complex complex_at(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  invalid(where, "expected a number or [re, im]");
}

}  // namespace

std::pair<Fan, MomentPolytope> named_base(std::string_view name) {
  Fan fan;
  MomentPolytope polytope;
  if (name.starts_with("P^")) {
    std::size_t m = shorthand_size(name, "P^");
    fan.rank = m;
    for (std::size_t i = 0; i < m; ++i) {
      LatticeVector e(m, 0);
      e[i] = 1;
      fan.edges.push_back(e);
    }
    fan.edges.push_back(LatticeVector(m, -1));
    for (std::size_t skip = 0; skip <= m; ++skip) {
      IndexSet cone;
      for (std::size_t i = 0; i <= m; ++i)
        if (i != skip) cone.push_back(i);
      fan.max_cones.push_back(cone);
    }
    polytope.lambdas.assign(m + 1, 0);
    polytope.lambdas[m] = -1;
  } else if (name == "P1xP1") {
    fan.rank = 2;
    fan.edges = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    fan.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    polytope.lambdas = {0, -1, 0, -1};
  } else if (name.starts_with("C^")) {
    std::size_t n = shorthand_size(name, "C^");
    fan.rank = n;
    IndexSet cone;
    for (std::size_t i = 0; i < n; ++i) {
      LatticeVector e(n, 0);
      e[i] = 1;
      fan.edges.push_back(e);
      cone.push_back(i);
    }
    fan.max_cones.push_back(cone);
    polytope.lambdas.assign(n, 0);
  } else {
    invalid("base", "unknown base '" + std::string(name) + "'");
  }
  polytope.rank = fan.rank;
  polytope.edges = fan.edges;
  return {fan, polytope};
}

FanDocument parse_fan_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) invalid("document", "expected an object");
  FanDocument out;

  if (doc.contains("base")) {
    if (!doc["base"].is_string()) invalid("base", "expected a name");
    std::tie(out.fan, out.polytope) = named_base(doc["base"].get<std::string>());
  } else {
    if (!doc.contains("rank") || !doc["rank"].is_number_unsigned()) invalid("rank", "expected a positive integer");
    out.fan.rank = doc["rank"].get<std::size_t>();
    if (out.fan.rank == 0) invalid("rank", "expected a positive integer");
    const json& edges = array_at(doc, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != out.fan.rank)
        invalid(where, "expected " + std::to_string(out.fan.rank) + " integers");
      LatticeVector e;
      BigInt g = 0;
      for (std::size_t c = 0; c < edges[i].size(); ++c) {
        e.push_back(integer_at(edges[i][c], where));
        g = gcd(g, e.back());
      }
      if (g != 1) invalid(where, "edge is not primitive");
      out.fan.edges.push_back(e);
    }
    const json& cones = array_at(doc, "max_cones");
    for (std::size_t c = 0; c < cones.size(); ++c) {
      const std::string where = "max_cones[" + std::to_string(c) + "]";
      if (!cones[c].is_array() || cones[c].empty()) invalid(where, "expected a nonempty index array");
      IndexSet cone;
      for (const auto& i : cones[c]) cone.push_back(index_at(i, out.fan.edges.size(), where));
      std::sort(cone.begin(), cone.end());
      if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) invalid(where, "repeated index");
      out.fan.max_cones.push_back(cone);
    }
    out.polytope.rank = out.fan.rank;
    out.polytope.edges = out.fan.edges;
    out.polytope.lambdas.assign(out.fan.edges.size(), 0);
  }

  if (doc.contains("lambdas")) {
    const json& lambdas = array_at(doc, "lambdas");
    if (lambdas.size() != out.fan.edges.size())
      invalid("lambdas", "expected " + std::to_string(out.fan.edges.size()) + " values");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      out.polytope.lambdas[i] = rational_at(lambdas[i], "lambdas[" + std::to_string(i) + "]");
  } else if (!doc.contains("base")) {
    invalid("lambdas", "missing");
  }

  if (doc.contains("twist")) {
    const json& twist = array_at(doc, "twist");
    if (twist.size() != out.fan.edges.size())
      invalid("twist", "expected " + std::to_string(out.fan.edges.size()) + " values");
    std::vector<double> values;
    for (const auto& v : twist) {
      if (!v.is_number()) invalid("twist", "expected decimal numbers");
      values.push_back(v.get<double>());
    }
    out.twist = values;
  }

  if (doc.contains("bundle")) {
    const json& b = doc["bundle"];
    if (!b.is_object()) invalid("bundle", "expected an object");
    BundleOption bundle;
    if (b.contains("k")) {
      bundle.k = integer_at(b["k"], "bundle.k");
    } else if (b.contains("n")) {
      const json& n = b["n"];
      if (!n.is_array() || n.size() != out.fan.edges.size())
        invalid("bundle.n", "expected " + std::to_string(out.fan.edges.size()) + " integers");
      for (const auto& v : n) bundle.degrees.push_back(integer_at(v, "bundle.n"));
    } else {
      invalid("bundle", "expected k or n");
    }
    out.bundle = bundle;
  }

  if (doc.contains("blowup")) {
    const json& b = doc["blowup"];
    if (!b.is_object()) invalid("blowup", "expected an object");
    BlowupOption blowup;
    // The face is checked against the fan the blow-up acts on, which may
    // include the bundle's fibre edge.
    std::size_t count = out.fan.edges.size() + (out.bundle ? 1 : 0);
    if (!b.contains("I") || !b["I"].is_array() || b["I"].empty()) invalid("blowup.I", "expected a nonempty index array");
    for (const auto& i : b["I"]) blowup.face.push_back(index_at(i, count, "blowup.I"));
    std::sort(blowup.face.begin(), blowup.face.end());
    if (!b.contains("epsilon")) invalid("blowup.epsilon", "missing");
    blowup.epsilon = rational_at(b["epsilon"], "blowup.epsilon");
    out.blowup = blowup;
  }

  try {
    validate_fan(out.fan);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidFan) invalid("fan", e.what());
    throw;
  }
  return out;
}

json fan_document_json(const FanDocument& doc) {
  json out;
  out["schema"] = "torfan.fan.v1";
  out["rank"] = doc.fan.rank;
  json edges = json::array();
  for (const auto& e : doc.fan.edges) {
    json row = json::array();
    for (const auto& c : e) row.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
    edges.push_back(row);
  }
  out["edges"] = edges;
  json cones = json::array();
  for (const auto& cone : doc.fan.max_cones) {
    json row = json::array();
    for (auto i : cone) row.push_back(i + 1);
    cones.push_back(row);
  }
  out["max_cones"] = cones;
  json lambdas = json::array();
  for (const auto& l : doc.polytope.lambdas) lambdas.push_back(to_string(l));
  out["lambdas"] = lambdas;
  if (doc.twist) out["twist"] = *doc.twist;
  if (doc.bundle) {
    if (doc.bundle->k) {
      out["bundle"] = {{"k", doc.bundle->k->get_si()}};
    } else {
      json n = json::array();
      for (const auto& d : doc.bundle->degrees) n.push_back(d.get_si());
      out["bundle"] = {{"n", n}};
    }
  }
  if (doc.blowup) {
    json face = json::array();
    for (auto i : doc.blowup->face) face.push_back(i + 1);
    out["blowup"] = {{"I", face}, {"epsilon", to_string(doc.blowup->epsilon)}};
  }
  return out;
}

std::string serialize_fan_document(const FanDocument& doc) { return fan_document_json(doc).dump(2) + "\n"; }

bool is_family_document(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && doc.contains("entries");
}

FamilyDocument parse_family_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) invalid("document", "expected an object");
  const json& entries = array_at(doc, "entries");
  FamilyDocument out;
  const std::size_t n = entries.size();
  if (n == 0) invalid("entries", "expected a nonempty square array");
  if (doc.contains("size") && (!doc["size"].is_number_unsigned() || doc["size"].get<std::size_t>() != n))
    invalid("size", "does not match entries");
  out.family.size = n;
  out.family.coefficients.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!entries[i].is_array() || entries[i].size() != n) invalid("entries[" + std::to_string(i) + "]", "row length");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      const json& cell = entries[i][j];
      if (!cell.is_array()) invalid(where, "expected a coefficient array");
      std::vector<Complex> coeffs;
      for (const auto& c : cell) coeffs.push_back(complex_at(c, where));
      out.family.coefficients[i].push_back(coeffs);
    }
  }
  if (doc.contains("ray")) {
    const json& ray = array_at(doc, "ray");
    std::vector<double> xs;
    for (const auto& x : ray) {
      if (!x.is_number()) invalid("ray", "expected positive reals");
      xs.push_back(x.get<double>());
    }
    out.ray = xs;
  }
  return out;
}

}  // namespace torfan::cli
