// Command-line front end over the C interface of librealendo.
#include "realendo/realendo.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using J = nlohmann::ordered_json;
namespace fs = std::filesystem;

#ifndef REALENDO_DEFAULT_FIXTURES
#define REALENDO_DEFAULT_FIXTURES "fixtures"
#endif

std::string resolve_spec(const std::string& path) {
  if (fs::exists(path)) return path;
  const char* env = std::getenv("REALENDO_FIXTURES");
  fs::path dir = env ? env : REALENDO_DEFAULT_FIXTURES;
  for (const fs::path& p : {dir / path, dir / (path + ".json")})
    if (fs::exists(p)) return p.string();
  return path;  // let the loader report it
}

std::string cell(const J& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + cell(v[i]);
    return s + ")";
  }
  if (v.is_object() && v.contains("value")) return v["value"].get<std::string>() + " [" + v["exponent"].get<std::string>() + "]";
  return v.dump();
}

void print_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  auto width = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;  // count UTF-8 code points
    return n;
  };
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = width(head[i]);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - width(r[i]) + 2, ' ');
    }
    std::cout << s << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
}

void print_members(const J& members) {
  std::vector<std::string> head{"#", "twist", "inv", "nonzero"};
  bool eps = false, delta = false, rel = false;
  for (const auto& m : members) {
    eps = eps || m.contains("epsilon_m");
    delta = delta || m.contains("delta");
    rel = rel || m.contains("delta_relative_to_first") || m.contains("delta_relative");
  }
  if (eps) head.push_back("eps_M");
  if (delta) head.push_back("delta");
  if (rel) head.push_back("relative");
  std::vector<std::vector<std::string>> rows;
  std::size_t k = 0;
  for (const auto& m : members) {
    std::vector<std::string> r{std::to_string(k++), cell(m["twist"]), m.contains("inv") ? cell(m["inv"]) : "-",
                               cell(m["nonzero"])};
    if (eps) r.push_back(m.contains("epsilon_m") ? (m["epsilon_m"].get<int>() > 0 ? "+1" : "-1") : "-");
    if (delta) r.push_back(m.contains("delta") ? cell(m["delta"]) : "-");
    if (rel)
      r.push_back(m.contains("delta_relative_to_first") ? cell(m["delta_relative_to_first"])
                  : m.contains("delta_relative")        ? cell(m["delta_relative"])
                                                        : "-");
    rows.push_back(r);
  }
  print_table(head, rows);
}

void print_human(const J& doc) {
  const std::string cmd = doc["command"];
  std::cout << cmd << ": " << doc["spec"].get<std::string>() << " (" << cell(doc["datum"]["cartan_type"]) << " "
            << cell(doc["datum"]["isogeny"]) << ")\n";
  if (cmd == "check") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : doc["parameters"]) {
      std::string status = p["valid"].get<bool>() ? "valid" : "INVALID";
      std::string detail;
      if (!p["valid"].get<bool>()) {
        detail = p["error"].get<std::string>();
      } else if (p["kind"] == "L") {
        detail = p["class"].get<std::string>() + ", c-Levi simples " + cell(p["c_levi_simples"]);
      } else {
        detail = std::string(p["regular"].get<bool>() ? "regular" : "singular") +
                 (p["elliptic"].get<bool>() ? ", elliptic" : ", not elliptic") + ", mu " +
                 cell(p["normalized"]["mu"]);
      }
      rows.push_back({p["name"], p["kind"], status, detail});
    }
    print_table({"parameter", "kind", "status", "detail"}, rows);
  } else if (cmd == "cohomology") {
    const J& t = doc["torus"];
    std::cout << "H^1(T): order " << cell(t["h1_order"]) << ", invariants " << cell(t["h1_invariants"]) << "\n";
    std::cout << "E(T): order " << cell(t["e_order"]) << "\n";
    std::cout << "H^1(Z): order " << cell(doc["center"]["h1_order"]) << ", image of H^1(Z_sc): "
              << cell(doc["center"]["sc_image_order"]) << "\n";
    std::cout << "H^1(U): order " << cell(doc["u_torus_h1_order"]) << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : doc["forms"])
      rows.push_back({f["name"], cell(f["twist"]), cell(f["quasi_split_type"]), f.contains("class") ? cell(f["class"]) : "-",
                      std::to_string(f["q"].get<int>())});
    print_table({"form", "twist", "quasi-split type", "class", "q"}, rows);
  } else if (cmd == "packet") {
    std::cout << "form " << cell(doc["form"]) << ", parameter " << cell(doc["parameter"]) << " (" << cell(doc["kind"])
              << ", " << cell(doc["mode"]) << "), " << doc["size"].get<std::size_t>() << " members\n";
    print_members(doc["members"]);
  } else if (cmd == "transfer") {
    const J& e = doc["endoscopic"];
    std::cout << "s = " << cell(doc["s"]) << ": H of type " << cell(e["h_type"]) << ", elliptic " << cell(e["elliptic"])
              << ", Adams-Johnson " << cell(e["adams_johnson"]) << "\n";
    if (doc.contains("related_pair")) {
      const J& r = doc["related_pair"];
      if (r.contains("error")) std::cout << "related pair: " << cell(r["error"]) << "\n";
      else
        std::cout << "related pair: mu* " << cell(r["mu_star"]) << ", lambda* " << cell(r["lambda_star"]) << ", mu1 "
                  << cell(r["endoscopic_parameter"]["mu"]) << ", related " << cell(r["related"]) << "\n";
    }
    print_members(doc["members"]);
  } else if (cmd == "verify") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : doc["checks"])
      rows.push_back({c["passed"].get<bool>() ? "PASS" : "FAIL", c["property"], std::to_string(c["cases"].get<std::size_t>())});
    print_table({"status", "property", "cases"}, rows);
    for (const auto& c : doc["checks"])
      for (const auto& f : c["failures"]) std::cout << "  " << c["property"].get<std::string>() << ": " << cell(f) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real endoscopy data: packets, cohomology and spectral transfer factors"};
  app.require_subcommand(1);
  std::string spec, form, param, s;
  bool json = false;
  auto add = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--spec", spec, "group specification file (JSON)")->required();
    c->add_flag("--json", json, "emit JSON");
    return c;
  };
  auto* check = add("check", "validate the datum and classify parameters");
  check->add_option("--param", param, "parameter name (default: all)");
  add("cohomology", "H^1 of the fundamental torus, E(T), center images");
  auto* packet = add("packet", "enumerate an L- or Arthur packet");
  packet->add_option("--form", form, "form name")->required();
  packet->add_option("--param", param, "parameter name")->required();
  packet->add_option("--s", s, "dual invariant y, e.g. \"[1/2]\"");
  auto* transfer = add("transfer", "endoscopic datum, related pair and transfer factors for s");
  transfer->add_option("--form", form, "form name (default: quasi-split)");
  transfer->add_option("--param", param, "parameter name")->required();
  transfer->add_option("--s", s, "dual invariant y")->required();
  add("verify", "run the property suite on the spec file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : RE_EPARSE;
  }

  re_spec* h = nullptr;
  int rc = re_spec_load_file(resolve_spec(spec).c_str(), &h);
  if (rc != RE_OK) {
    std::cerr << "error: " << re_last_error() << "\n";
    return rc == RE_EARG ? RE_EPARSE : rc;
  }
  char* out = nullptr;
  auto cstr = [](const std::string& x) { return x.empty() ? nullptr : x.c_str(); };
  if (check->parsed()) rc = re_check(h, cstr(param), &out);
  else if (app.got_subcommand("cohomology")) rc = re_cohomology(h, &out);
  else if (packet->parsed()) rc = re_packet(h, form.c_str(), param.c_str(), cstr(s), &out);
  else if (transfer->parsed()) rc = re_transfer(h, cstr(form), param.c_str(), s.c_str(), &out);
  else rc = re_verify(h, &out);

  if (out) {
    if (json) {
      std::cout << out;
    } else {
      try {
        print_human(J::parse(out));
      } catch (const std::exception& e) {
        std::cerr << "error: cannot render output: " << e.what() << "\n";
        rc = RE_EINTERNAL;
      }
    }
    re_string_free(out);
  }
  if (rc != RE_OK) std::cerr << "error: " << re_last_error() << "\n";
  re_spec_free(h);
  return rc == RE_EARG ? RE_EPARSE : rc;
}
