#include "commands.hpp"

#include "realendo/realendo.h"

#include <functional>
#include <map>
#include <set>

namespace realendo::commands {

using render::J;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

class Suite {
 public:
  // Runs one case; validation errors count as failures, internal ones propagate.
  void run(const std::string& property, const std::string& subject, const std::function<bool()>& body) {
    Tally& t = tallies_[property];
    if (order_.insert(property).second) names_.push_back(property);
    ++t.cases;
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const Error& e) {
      if (e.kind == Error::Kind::internal) throw;
      why = std::string(": ") + e.what();
    }
    if (!ok) t.failures.push_back(subject + why);
  }

  J doc(bool& passed) const {
    J out = J::array();
    passed = true;
    for (const auto& name : names_) {
      const Tally& t = tallies_.at(name);
      J d;
      d["property"] = name;
      d["cases"] = t.cases;
      d["passed"] = t.failures.empty();
      d["failures"] = t.failures;
      passed = passed && t.failures.empty();
      out.push_back(d);
    }
    return out;
  }

 private:
  std::map<std::string, Tally> tallies_;
  std::set<std::string> order_;
  std::vector<std::string> names_;
};

std::vector<Vec> central_points(const SpecFile& f) {
  std::size_t n = f.group.rank;
  std::vector<Vec> out;
  std::vector<int> c(n, 0);
  for (;;) {
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Rat(c[i], 4);
    bool central = true;
    for (const auto& a : f.dual.coroots) central = central && is_int(dot(a, y));
    if (central) out.push_back(y);
    std::size_t k = 0;
    while (k < n && c[k] == 3) c[k++] = 0;
    if (k == n) break;
    ++c[k];
  }
  return out;
}

}  // namespace

Result verify(const SpecFile& f) {
  Result res;
  J doc = header(f, "verify");
  Suite suite;
  J info = J::array();

  // Levi lift ratio on sigma-stable standard Levis, braid invariance of canonical lifts
  PinnedAction act = pinned_action(f.dual, f.inner_class);
  suite.run("inner class matches the pinned action", f.name, [&] { return sigma_t_of(f.dual, act) == f.sigma; });
  for (const auto& levi : standard_levis(f.dual)) {
    if (!is_sigma_stable(f.dual, sigma_t_of(f.dual, act), levi)) continue;
    suite.run("Levi lift ratio", "levi " + render::ints(levi.simples).dump(),
              [&] { return verify_levi_lift_ratio(f.dual, act, levi).ok; });
  }
  for (const auto& w : weyl_elements(f.dual)) {
    suite.run("braid invariance of canonical lifts", render::ints(w.word).dump(), [&] {
      TitsElement c = canonical_rep(f.dual, w);
      for (const auto& word : reduced_words(f.dual, w))
        if (!tits_equal(word_product(f.dual, word), c)) return false;
      return true;
    });
  }

  GroupSide g = group_side(f.dual, f.sigma);
  bool sc = f.isogeny == "sc";
  Vec mu0 = Rat(2) * f.dual.rho_coroots();
  auto centers = central_points(f);

  for (const auto& sp : f.params) {
    if (sp.kind == SpecParam::Kind::L) {
      LParamData p;
      try {
        p = build_lparam(f, sp);
      } catch (const Error& e) {
        if (e.kind == Error::Kind::internal) throw;
        info.push_back(J{{"parameter", sp.name}, {"skipped", e.what()}});
        continue;
      }
      suite.run("factor_through_levi validates", sp.name, [&] {
        validate(factor_through_levi(p));
        return true;
      });
      suite.run("translation preserves validity", sp.name, [&] {
        validate(translate(p, mu0));
        return true;
      });
      auto rep = centralizer_report(p);
      info.push_back(J{{"parameter", sp.name},
                       {"s_bar", rep.s_bar_order.str()},
                       {"center_quotient_times_s_bar_levi", Int(rep.quotient_order * rep.s_bar_m_order).str()},
                       {"sequence_exact", rep.sequence_exact}});
      if (sc) {
        suite.run("pure inner forms share out S_phi", sp.name, [&] {
          std::set<Vec> seen;
          std::size_t total = 0;
          std::vector<int> b(g.torus.rd.nsimple, 0);
          for (;;) {
            Vec u = zeros(g.torus.rd.rank);
            for (std::size_t i = 0; i < b.size(); ++i) u = u + Rat(b[i], 2) * g.torus.rd.coroots[i];
            InnerFormSpec pure{"pure", u};
            if (seen.insert(splitting_classes(p, pure).front().twist).second) total += enumerate_l_packet(p, pure).size();
            std::size_t k = 0;
            while (k < b.size() && b[k] == 1) b[k++] = 0;
            if (k == b.size()) break;
            ++b[k];
          }
          return Int(total) == rep.s_bar_order;
        });
      }
      for (const auto& si : f.invariants) {
        std::string subject = sp.name + " / " + si.name;
        auto inv = parameter_invariant(p, si.y);
        auto e = endoscopic_from_s(inv, p);
        Vec mu1 = p.mu - related_shift(e, p).mu_star;
        if (is_dominant(e.h_datum, mu1, Side::cocharacter)) {
          auto rp = make_related(e, p);
          suite.run("related pair", subject, [&] { return check_related(rp); });
          suite.run("central characters of related pairs", subject, [&] {
            for (const auto& y : centers) {
              CentralDatum z{zeros(y.size()), y, zeros(y.size())};
              if (!central_char_identity(rp, z, z)) return false;
            }
            return true;
          });
        }
        for (const auto& sf : f.forms) {
          InnerFormSpec form = to_form(sf);
          if (!is_quasi_split_type(g, form)) continue;
          suite.run("delta_relative factors through delta_wh", subject + " / " + sf.name, [&] {
            auto ms = enumerate_l_packet(p, form);
            for (const auto& m : ms)
              for (const auto& m2 : ms)
                if (delta_relative(m, m2, inv).exponent() !=
                    frac(delta_wh(m, inv).exponent() - delta_wh(m2, inv).exponent()))
                  return false;
            return true;
          });
        }
      }
    } else {
      AParamData a;
      try {
        a = normalize(build_aparam(f, sp)).param;
      } catch (const Error& e) {
        if (e.kind == Error::Kind::internal) throw;
        info.push_back(J{{"parameter", sp.name}, {"skipped", e.what()}});
        continue;
      }
      suite.run("attached s-elliptic parameter validates", sp.name, [&] {
        validate(attached_selliptic(a));
        return true;
      });
      suite.run("congruence with sigma_M iff with sigma_T", sp.name, [&] {
        return is_integral(congruence_residue_m(a)) == is_integral(congruence_residue_t(a));
      });
      suite.run("regular or singular with witness", sp.name, [&] {
        auto r = regularity_test(a);
        if (r.regular) return r.witnesses.empty();
        Vec mm = mu_levi(a);
        for (auto j : r.witnesses)
          if (dot(a.dual.roots[j], mm) != -1) return false;
        return !r.witnesses.empty();
      });
      if (!regularity_test(a).regular || !is_elliptic(a)) continue;
      for (const auto& sf : f.forms) {
        InnerFormSpec form = to_form(sf);
        if (!is_quasi_split_type(g, form)) continue;
        for (const auto& si : f.invariants) {
          bool central = true;
          for (auto i : a.levi.roots) central = central && is_int(dot(a.dual.roots[i], si.y));
          if (!central) continue;
          suite.run("Arthur factor routes agree", sp.name + " / " + si.name + " / " + sf.name, [&] {
            auto members = enumerate_arthur_packet(a, form);
            auto hats = enumerate_l_packet(attached_selliptic(a), form);
            auto inv = make_dual_invariant(transpose(f.sigma), si.y);
            for (const auto& m : members)
              for (const auto& h : hats) {
                auto d = delta_arthur(m, h, inv);
                if (!(d.absolute_wh == d.direct)) return false;
              }
            return true;
          });
        }
      }
    }
  }

  bool passed = true;
  doc["checks"] = suite.doc(passed);
  doc["informational"] = info;
  doc["passed"] = passed;
  res.doc = doc;
  res.status = passed ? RE_OK : RE_EVALIDATION;
  return res;
}

}  // namespace realendo::commands
