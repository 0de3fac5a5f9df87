#include "realendo/specfile.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace realendo {

using nlohmann::json;

namespace {

Rat rat_of(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  fail_parse(where + ": rationals must be \"p/q\" strings or integers");
}

Vec vec_of(const json& j, const std::string& where, std::size_t n) {
  if (!j.is_array()) fail_parse(where + ": expected an array");
  Vec v;
  for (const auto& e : j) v.push_back(rat_of(e, where));
  if (n != 0 && v.size() != n) fail_validation(where + ": expected " + std::to_string(n) + " entries");
  return v;
}

std::vector<std::size_t> indices_of(const json& j, const std::string& where) {
  if (!j.is_array()) fail_parse(where + ": expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) fail_parse(where + ": indices are nonnegative integers");
    out.push_back(static_cast<std::size_t>(e.get<long long>()));
  }
  return out;
}

std::string string_of(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) fail_parse(where + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

void unique_names(const std::vector<std::string>& names, const std::string& what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) fail_validation("duplicate " + what + " name '" + n + "'");
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_parse("spec must be a JSON object");

  SpecFile f;
  f.name = j.contains("name") ? string_of(j, "name", "spec") : "";
  f.cartan_type = string_of(j, "cartan_type", "spec");
  Isogeny iso;
  if (!j.contains("isogeny")) fail_parse("spec: missing field 'isogeny'");
  const json& ij = j["isogeny"];
  if (ij.is_string()) {
    f.isogeny = ij.get<std::string>();
    if (f.isogeny == "sc") iso.kind = Isogeny::Kind::simply_connected;
    else if (f.isogeny == "ad") iso.kind = Isogeny::Kind::adjoint;
    else fail_parse("isogeny must be \"sc\", \"ad\" or a basis matrix");
  } else if (ij.is_array()) {
    f.isogeny = "explicit";
    iso.kind = Isogeny::Kind::explicit_basis;
    std::vector<Vec> rows;
    for (const auto& r : ij) rows.push_back(vec_of(r, "isogeny", 0));
    if (rows.empty()) fail_validation("isogeny basis is empty");
    iso.basis = from_rows(rows, rows[0].size());
  } else {
    fail_parse("isogeny must be a string or a matrix");
  }
  f.group = build_root_datum(f.cartan_type, iso);
  if (f.group.nsimple != f.group.rank) fail_validation("only semisimple groups are supported");
  f.dual = dual_datum(f.group);

  if (j.contains("inner_class")) {
    f.inner_class = indices_of(j["inner_class"], "inner_class");
  } else {
    for (std::size_t i = 0; i < f.group.nsimple; ++i) f.inner_class.push_back(i);
  }
  if (f.inner_class.size() != f.group.nsimple) fail_validation("inner_class must permute the simple indices");
  std::set<std::size_t> perm(f.inner_class.begin(), f.inner_class.end());
  if (perm.size() != f.group.nsimple || *perm.rbegin() >= f.group.nsimple)
    fail_validation("inner_class must permute the simple indices");
  f.sigma = transpose(fundamental_involution(f.group, f.inner_class).sigma);
  for (const auto& a : f.dual.roots)
    if (transpose(f.sigma) * a != -a) fail_validation("inner class has no elliptic torus (sigma is not -1 on roots)");

  std::size_t n = f.group.rank;
  std::vector<std::string> names;
  if (j.contains("forms")) {
    for (const auto& e : j["forms"]) {
      SpecForm sf;
      sf.name = string_of(e, "name", "form");
      std::string where = "form '" + sf.name + "'";
      Vec u = vec_of(e.value("twist", json::array()), where, n);
      std::string lat = e.value("lattice", "given");
      TwistLattice ctx = lat == "sc" ? TwistLattice::sc : lat == "ad" ? TwistLattice::ad : TwistLattice::given;
      if (lat != "sc" && lat != "ad" && lat != "given") fail_parse(where + ": lattice must be sc, ad or given");
      sf.twist = twist_to_cochar(f.group, u, ctx);
      f.forms.push_back(sf);
      names.push_back(sf.name);
    }
  } else {
    f.forms.push_back({"quasi-split", zeros(n)});
  }
  unique_names(names, "form");

  names.clear();
  if (j.contains("parameters"))
    for (const auto& e : j["parameters"]) {
      SpecParam sp;
      sp.name = string_of(e, "name", "parameter");
      std::string where = "parameter '" + sp.name + "'";
      std::string kind = e.value("kind", "L");
      if (kind == "L") sp.kind = SpecParam::Kind::L;
      else if (kind == "Arthur") sp.kind = SpecParam::Kind::Arthur;
      else fail_parse(where + ": kind must be L or Arthur");
      if (e.contains("levi")) sp.levi = indices_of(e["levi"], where);
      if (sp.kind == SpecParam::Kind::L && !sp.levi.empty()) fail_parse(where + ": an L-parameter has no levi");
      sp.mu = vec_of(e.value("mu", json()), where + " mu", n);
      sp.lambda = e.contains("lambda") ? vec_of(e["lambda"], where + " lambda", n) : zeros(n);
      f.params.push_back(sp);
      names.push_back(sp.name);
    }
  unique_names(names, "parameter");

  names.clear();
  if (j.contains("invariants"))
    for (const auto& e : j["invariants"]) {
      SpecInvariant si;
      si.name = string_of(e, "name", "invariant");
      si.y = vec_of(e.value("s", json()), "invariant '" + si.name + "'", n);
      make_dual_invariant(transpose(f.sigma), si.y);
      f.invariants.push_back(si);
      names.push_back(si.name);
    }
  unique_names(names, "invariant");
  return f;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

const SpecForm& find_form(const SpecFile& f, const std::string& name) {
  for (const auto& x : f.forms)
    if (x.name == name) return x;
  fail_validation("no form named '" + name + "'");
}

const SpecParam& find_param(const SpecFile& f, const std::string& name) {
  for (const auto& x : f.params)
    if (x.name == name) return x;
  fail_validation("no parameter named '" + name + "'");
}

LParamData build_lparam(const SpecFile& f, const SpecParam& p) {
  if (p.kind != SpecParam::Kind::L) fail_validation("parameter '" + p.name + "' is not an L-parameter");
  return make_lparam(f.dual, f.sigma, p.mu, p.lambda);
}

AParamData build_aparam(const SpecFile& f, const SpecParam& p) {
  if (p.kind != SpecParam::Kind::Arthur) fail_validation("parameter '" + p.name + "' is not an Arthur parameter");
  for (auto i : p.levi)
    if (i >= f.dual.nsimple) fail_validation("parameter '" + p.name + "': levi index out of range");
  return make_aparam(f.dual, f.sigma, p.levi, p.mu, p.lambda);
}

InnerFormSpec to_form(const SpecForm& f) { return {f.name, f.twist}; }

// "1/2 0", "[1/2, 0]" or "(1/2, 0)"
Vec parse_vector(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) fail_parse("unbalanced brackets in vector '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  if (s.find_first_of("[]()") != std::string::npos) fail_parse("malformed vector '" + text + "'");
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  Vec v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rat(tok));
  if (v.empty()) fail_parse("empty vector '" + text + "'");
  return v;
}

}  // namespace realendo
