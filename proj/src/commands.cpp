#include "commands.hpp"

#include "realendo/realendo.h"

#include <set>

namespace realendo::commands {

using render::J;

namespace {

void rethrow_unless_validation(const Error& e) {
  if (e.kind != Error::Kind::validation) throw;
}

J lparam_doc(const LParamData& p) {
  J d;
  d["mu"] = render::vec(p.mu);
  d["lambda"] = render::vec(p.lambda);
  return d;
}

AParamData normalized(const SpecFile& f, const SpecParam& sp) { return normalize(build_aparam(f, sp)).param; }

J member_doc(const PacketMember& m) {
  J d;
  d["twist"] = render::vec(m.twist);
  if (m.has_inv) {
    d["class"] = render::vec(m.cls);
    d["inv"] = render::vec(m.inv);
  }
  d["nonzero"] = m.nonzero;
  if (std::holds_alternative<AParamData>(m.param)) d["epsilon_m"] = m.epsilon_m;
  return d;
}

bool central_in_levi(const AParamData& a, const Vec& y) {
  for (auto i : a.levi.roots)
    if (!is_int(dot(a.dual.roots[i], y))) return false;
  return true;
}

// Arthur members with Delta columns against the first discrete-series member.
J arthur_rows(const SpecFile& f, const AParamData& a, const InnerFormSpec& form, const std::optional<Vec>& s) {
  J rows = J::array();
  auto members = enumerate_arthur_packet(a, form);
  std::vector<PacketMember> hats;
  if (s) hats = enumerate_l_packet(attached_selliptic(a), form);
  for (const auto& m : members) {
    J r = member_doc(m);
    if (s) {
      if (!central_in_levi(a, *s)) {
        r["delta"] = nullptr;
      } else {
        if (hats.empty()) fail_internal("attached discrete-series packet is empty");
        auto d = delta_arthur(m, hats.front(), make_dual_invariant(transpose(f.sigma), *s));
        r["delta_relative"] = render::value(d.relative);
        r["delta"] = render::value(d.absolute_wh);
      }
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

J datum_doc(const SpecFile& f) {
  J d;
  d["cartan_type"] = f.cartan_type;
  d["isogeny"] = f.isogeny;
  d["rank"] = f.group.rank;
  d["roots"] = f.group.nroots();
  d["inner_class"] = render::ints(f.inner_class);
  d["sigma_dual"] = render::mat(f.sigma);
  return d;
}

J header(const SpecFile& f, const char* command) {
  J doc;
  doc["command"] = command;
  doc["spec"] = f.name;
  doc["datum"] = datum_doc(f);
  return doc;
}

Result check(const SpecFile& f, const std::optional<std::string>& param) {
  Result res;
  res.doc = header(f, "check");
  J list = J::array();
  for (const auto& sp : f.params) {
    if (param && sp.name != *param) continue;
    J e;
    e["name"] = sp.name;
    e["kind"] = sp.kind == SpecParam::Kind::L ? "L" : "Arthur";
    try {
      if (sp.kind == SpecParam::Kind::L) {
        auto p = build_lparam(f, sp);
        e["valid"] = true;
        e["parameter"] = lparam_doc(p);
        e["class"] = to_string(classify(p));
        e["c_levi_simples"] = render::ints(c_levi(p).levi.simples);
        auto rep = centralizer_report(p);
        J c;
        c["s_bar"] = render::big(rep.s_bar_order);
        c["s_bar_levi"] = render::big(rep.s_bar_m_order);
        c["center_quotient"] = render::big(rep.quotient_order);
        c["companion_e"] = render::big(rep.companion_e_order);
        c["sequence_exact"] = rep.sequence_exact;
        e["centralizer"] = c;
      } else {
        auto raw = build_aparam(f, sp);
        auto n = normalize(raw);
        const AParamData& a = n.param;
        e["valid"] = true;
        J d;
        d["mu"] = render::vec(a.mu);
        d["lambda"] = render::vec(a.lambda);
        d["levi_roots"] = render::ints(a.levi.roots);
        d["omega"] = render::ints(n.omega.word);
        d["mu_dominant"] = n.mu_dominant;
        e["normalized"] = d;
        auto reg = regularity_test(a);
        e["regular"] = reg.regular;
        e["singular_witnesses"] = render::ints(reg.witnesses);
        e["elliptic"] = is_elliptic(a);
        e["congruence_m"] = is_integral(congruence_residue_m(a));
        e["congruence_t"] = is_integral(congruence_residue_t(a));
        e["attached"] = lparam_doc(attached_selliptic(a));
      }
    } catch (const Error& err) {
      rethrow_unless_validation(err);
      e["valid"] = false;
      e["error"] = err.what();
      if (sp.kind == SpecParam::Kind::L && sp.mu.size() == f.dual.rank) {
        try {
          e["residue"] = render::vec(congruence_residue(LParamData{f.dual, f.sigma, sp.mu, sp.lambda}));
        } catch (const Error&) {
        }
      }
      res.status = RE_EVALIDATION;
    }
    list.push_back(e);
  }
  if (param && list.empty()) fail_validation("no parameter named '" + *param + "'");
  res.doc["parameters"] = list;
  return res;
}

Result cohomology(const SpecFile& f) {
  Result res;
  res.doc = header(f, "cohomology");
  GroupSide g = group_side(f.dual, f.sigma);
  std::size_t n = g.torus.rd.rank;
  J t;
  t["sigma"] = render::mat(g.torus.sigma);
  t["h1_order"] = render::big(g.h1.order());
  t["h1_invariants"] = render::int_list(g.h1.q.invariants());
  J gens = J::array();
  for (const auto& v : g.h1.generators()) gens.push_back(render::vec(v));
  t["h1_generators"] = gens;
  FiniteQuotient e(e_lattice(g), identity(n) - g.torus.sigma);
  t["e_order"] = render::big(e.order());
  res.doc["torus"] = t;
  J z;
  z["h1_order"] = render::big(center_h1(g.torus).order());
  z["sc_image_order"] = render::big(sc_center_image_order(g.torus));
  z["sc_map_injective"] = center_map_injective(g.torus);
  res.doc["center"] = z;
  res.doc["u_torus_h1_order"] = render::big(group_u_torus(g).h1.order());
  J forms = J::array();
  for (const auto& sf : f.forms) {
    J d;
    d["name"] = sf.name;
    d["twist"] = render::vec(sf.twist);
    bool qs = is_quasi_split_type(g, to_form(sf));
    d["quasi_split_type"] = qs;
    if (qs) d["class"] = render::vec(g.h1.q.canonical(Rat(2) * sf.twist));
    d["q"] = q_invariant(twist_grading_cochar(g.whittaker, sf.twist));
    forms.push_back(d);
  }
  res.doc["forms"] = forms;
  return res;
}

Result packet(const SpecFile& f, const std::string& form_name, const std::string& param, const std::optional<Vec>& s) {
  Result res;
  res.doc = header(f, "packet");
  const SpecParam& sp = find_param(f, param);
  InnerFormSpec form = to_form(find_form(f, form_name));
  res.doc["form"] = form.name;
  res.doc["parameter"] = sp.name;
  if (s) res.doc["s"] = render::vec(*s);
  GroupSide g = group_side(f.dual, f.sigma);
  J rows = J::array();
  if (sp.kind == SpecParam::Kind::L) {
    auto p = build_lparam(f, sp);
    res.doc["kind"] = "L";
    res.doc["class"] = to_string(classify(p));
    bool qs = is_quasi_split_type(g, form);
    auto members = qs ? enumerate_l_packet(p, form) : enumerate_relative(p, form);
    res.doc["mode"] = qs ? "absolute" : "relative";
    std::optional<DualInvariant> inv;
    if (s) inv = parameter_invariant(p, *s);
    for (const auto& m : members) {
      J r = member_doc(m);
      if (inv) {
        if (qs) r["delta"] = render::value(delta_wh(m, *inv));
        r["delta_relative_to_first"] = render::value(delta_relative(m, members.front(), *inv));
      }
      rows.push_back(r);
    }
  } else {
    auto a = normalized(f, sp);
    res.doc["kind"] = "Arthur";
    res.doc["levi_roots"] = render::ints(a.levi.roots);
    res.doc["mode"] = "absolute";
    rows = arthur_rows(f, a, form, s);
  }
  res.doc["size"] = rows.size();
  res.doc["members"] = rows;
  return res;
}

Result transfer(const SpecFile& f, const std::optional<std::string>& form_name, const std::string& param, const Vec& s) {
  Result res;
  res.doc = header(f, "transfer");
  const SpecParam& sp = find_param(f, param);
  InnerFormSpec form = form_name ? to_form(find_form(f, *form_name)) : InnerFormSpec{"quasi-split", zeros(f.group.rank)};
  res.doc["form"] = form.name;
  res.doc["parameter"] = sp.name;
  res.doc["s"] = render::vec(s);
  DualInvariant inv = make_dual_invariant(transpose(f.sigma), s);

  auto endo_doc = [&](const EndoscopicDatum& e) {
    J d;
    d["h_roots"] = render::ints(e.h_roots);
    d["h_type"] = e.h_datum.nsimple == 0 ? "torus" : e.h_datum.label();
    d["elliptic"] = e.elliptic;
    d["s_in_levi_center"] = e.s_in_levi_center;
    d["adams_johnson"] = e.adams_johnson;
    return d;
  };

  GroupSide g = group_side(f.dual, f.sigma);
  if (sp.kind == SpecParam::Kind::L) {
    auto p = build_lparam(f, sp);
    auto e = endoscopic_from_s(inv, p);
    res.doc["endoscopic"] = endo_doc(e);
    J rel;
    try {
      auto rp = make_related(e, p);
      rel["mu_star"] = render::vec(rp.shift.mu_star);
      rel["lambda_star"] = render::vec(rp.shift.lambda_star);
      rel["endoscopic_parameter"] = lparam_doc(rp.p1);
      rel["related"] = check_related(rp);
      CentralDatum one{zeros(p.dual.rank), zeros(p.dual.rank), zeros(p.dual.rank)};
      rel["central_identity_at_1"] = central_char_identity(rp, one, one);
    } catch (const Error& err) {
      rethrow_unless_validation(err);
      rel["error"] = err.what();
    }
    res.doc["related_pair"] = rel;
    J rows = J::array();
    if (is_quasi_split_type(g, form)) {
      auto members = enumerate_l_packet(p, form);
      for (const auto& m : members) {
        J r = member_doc(m);
        r["delta"] = render::value(delta_wh(m, inv));
        r["delta_relative_to_first"] = render::value(delta_relative(m, members.front(), inv));
        rows.push_back(r);
      }
    } else {
      auto members = enumerate_relative(p, form);
      for (const auto& m : members) {
        J r = member_doc(m);
        r["delta_relative_to_first"] = render::value(delta_relative(m, members.front(), inv));
        rows.push_back(r);
      }
    }
    res.doc["members"] = rows;
  } else {
    auto a = normalized(f, sp);
    auto e = endoscopic_from_s(inv, a);
    res.doc["endoscopic"] = endo_doc(e);
    if (!e.s_in_levi_center) fail_validation("s is not in the center of the Levi of the Arthur parameter");
    res.doc["members"] = arthur_rows(f, a, form, s);
  }
  return res;
}

}  // namespace realendo::commands
