#include "doctest.h"
#include "oracles.hpp"
#include "realendo/transfer.hpp"
#include "setups.hpp"

using namespace realendo;
using namespace setups;

namespace {

// Every Gamma-invariant of an elliptic semisimple torus: y in {0, 1/2}^n.
std::vector<Vec> half_invariants(std::size_t n) {
  std::vector<Vec> out;
  oracle::box(n, 0, 1, [&](const oracle::IVec& b) {
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Rat(b[i], 2);
    out.push_back(y);
  });
  return out;
}

LParamData ds_param(const Setup& s) { return make_lparam(s.dual, s.sigma, s.dual.rho_coroots(), zeros(s.dual.rank)); }

Setup sl2() { return elliptic("A1", sc()); }

const PacketMember* same_class(const std::vector<PacketMember>& ms, const Mat& lattice, const Vec& cls) {
  for (const auto& m : ms)
    if (in_lattice(lattice, m.cls - cls)) return &m;
  return nullptr;
}

// Dual of SL2 x GL1 (split center): root e1, coroot 2 e1, sigma = diag(-1, 1).
struct WithCenter {
  RootDatum dual = make_datum(2, {Vec{Rat(1), Rat(0)}}, {Vec{Rat(2), Rat(0)}});
  Mat sigma = [] {
    Mat m = identity(2);
    m(0, 0) = Rat(-1);
    return m;
  }();
};

}  // namespace

TEST_CASE("endoscopic data from s") {
  auto s = sl2();
  auto p = ds_param(s);
  auto whole = endoscopic_from_s(parameter_invariant(p, {Rat(0)}), p);
  CHECK(whole.h_roots.size() == 2);
  CHECK(same_datum(whole.h_datum, s.dual));
  auto torus = endoscopic_from_s(parameter_invariant(p, {Rat(1, 2)}), p);
  CHECK(torus.h_roots.empty());
  CHECK(torus.elliptic);
  // the c-Levi of a discrete series is the torus, so s is central in it
  CHECK(torus.adams_johnson);

  auto ab = elliptic("A1xA1", sc());
  auto q = ds_param(ab);
  auto one = endoscopic_from_s(parameter_invariant(q, {Rat(1, 2), Rat(0)}), q);
  REQUIRE(one.h_roots.size() == 2);
  for (auto i : one.h_roots) CHECK(ab.dual.roots[i][0] == 0);
  CHECK(one.h_datum.nsimple == 1);

  // s must be invariant and on the right torus
  auto a2 = elliptic("A2", sc(), {1, 0});
  CHECK_THROWS_AS(parameter_invariant(ds_param(a2), {Rat(1, 3), Rat(0)}), Error);
  CHECK_THROWS_AS(endoscopic_from_s(make_dual_invariant(identity(1), {Rat(0)}), p), Error);

  // closed, sigma-stable subsystems; elliptic always for an elliptic torus;
  // Adams-Johnson exactly when every Levi root is an H-root
  std::size_t checked = 0;
  for (const auto& st : elliptic_setups())
    for (const auto& a : regular_arthur_sweep(st, 1)) {
      for (const auto& y : half_invariants(st.dual.rank)) {
        auto e = endoscopic_from_s(make_dual_invariant(transpose(a.sigma), y), a);
        std::set<std::size_t> h(e.h_roots.begin(), e.h_roots.end());
        for (auto i : e.h_roots) {
          CHECK(h.count(st.dual.neg(i)));
          CHECK(h.count(static_cast<std::size_t>(st.dual.find_root(transpose(st.sigma) * st.dual.roots[i]))));
          for (auto j : e.h_roots) {
            int k = st.dual.find_root(st.dual.roots[i] + st.dual.roots[j]);
            if (k >= 0) CHECK(h.count(static_cast<std::size_t>(k)));
          }
        }
        CHECK(e.h_datum.nroots() == e.h_roots.size());
        CHECK(e.elliptic);
        bool contains = true;
        for (auto i : a.levi.roots) contains = contains && h.count(i);
        CHECK(e.adams_johnson == contains);
        ++checked;
      }
    }
  CHECK(checked > 60);
}

TEST_CASE("related pairs") {
  auto s = sl2();
  for (int n = 1; n <= 4; ++n) {
    auto p = make_lparam(s.dual, s.sigma, {Rat(n)}, {Rat(0)});
    auto same = endoscopic_from_s(parameter_invariant(p, {Rat(0)}), p);
    RelatedPair trivial{same, p, p, related_shift(same, p, zeros(1))};
    CHECK(is_zero(trivial.shift.mu_star));
    CHECK(check_related(trivial));

    auto e = endoscopic_from_s(parameter_invariant(p, {Rat(1, 2)}), p);
    auto rp = make_related(e, p);
    CHECK(rp.shift.mu_star == s.dual.rho_coroots());
    CHECK(rp.p1.mu == Vec{Rat(n - 1)});
    CHECK(check_related(rp));
    rp.p1 = make_lparam(rp.p1.dual, rp.p1.sigma, rp.p1.mu + Vec{Rat(1)}, rp.p1.lambda);
    CHECK_FALSE(check_related(rp));
  }

  // lambda matters only off K_f; a split central GL1 gives room for it
  WithCenter c;
  auto p = make_lparam(c.dual, c.sigma, {Rat(3), Rat(2, 3)}, {Rat(0), Rat(1, 2)});
  auto e = endoscopic_from_s(parameter_invariant(p, {Rat(1, 2), Rat(1, 3)}), p);
  CHECK(e.h_roots.empty());
  CHECK(e.elliptic);
  auto rp = make_related(e, p);
  CHECK(check_related(rp));
  auto moved = rp;
  moved.p1 = make_lparam(rp.p1.dual, rp.p1.sigma, rp.p1.mu, rp.p1.lambda + Vec{Rat(0), Rat(1, 2)});
  CHECK_FALSE(check_related(moved));
  moved.p1 = make_lparam(rp.p1.dual, rp.p1.sigma, rp.p1.mu, rp.p1.lambda + Vec{Rat(1, 4), Rat(1)});
  CHECK(check_related(moved));
}

TEST_CASE("related pairs: sweep, coboundaries and translation") {
  std::size_t checked = 0, skipped = 0;
  for (const auto& st : elliptic_setups()) {
    std::size_t n = st.dual.rank;
    Vec mu0 = Rat(2) * st.dual.rho_coroots();
    for (const auto& p : dominant_sweep(st, 3)) {
      for (const auto& y : half_invariants(n)) {
        auto e = endoscopic_from_s(parameter_invariant(p, y), p);
        // a limit can leave mu - mu* off the H-dominant chamber
        Vec mu1 = p.mu - related_shift(e, p).mu_star;
        if (!is_dominant(e.h_datum, mu1, Side::cocharacter)) {
          CHECK_THROWS_AS(make_related(e, p), Error);
          ++skipped;
          continue;
        }
        auto rp = make_related(e, p);
        CHECK(t2_cocycle_holds(p.dual, p.sigma, e.h_roots, rp.shift));
        REQUIRE(check_related(rp));
        // t_xi1 moved by a coboundary
        for (const auto& x : half_invariants(n)) {
          Vec t = (identity(n) - p.sigma) * (Rat(1, 3) * x);
          auto moved = rp;
          moved.shift = related_shift(e, p, t);
          CHECK(check_related(moved));
        }
        auto tr = rp;
        tr.p = translate(rp.p, mu0);
        tr.p1 = translate(rp.p1, mu0);
        CHECK(check_related(tr));
        ++checked;
      }
    }
  }
  CHECK(checked > 80);
  CHECK(skipped > 0);
}

TEST_CASE("central characters of related pairs") {
  auto s = sl2();
  for (int n = 1; n <= 3; ++n) {
    auto p = make_lparam(s.dual, s.sigma, {Rat(n)}, {Rat(0)});
    auto rp = make_related(endoscopic_from_s(parameter_invariant(p, {Rat(1, 2)}), p), p);
    CentralDatum one{{Rat(0)}, {Rat(0)}, {Rat(0)}};
    CHECK(central_char_identity(rp, one, one));
    CentralDatum minus{{Rat(0)}, {Rat(1, 2)}, {Rat(0)}};
    CHECK(central_char_identity(rp, minus, minus));
    // the quotient of central characters at -1 is -1: mu1 - mu = -iota
    auto c1 = central_character(rp.p1, minus), c = central_character(rp.p, minus);
    CHECK(frac(c1.phase - c.phase) == Rat(1, 2));
    for (int k = -3; k <= 3; ++k) {
      CentralDatum z{{Rat(0)}, {Rat(k, 2)}, {Rat(0)}};
      CHECK(central_char_identity(rp, z, z));
    }
    CHECK_THROWS_AS(central_char_identity(rp, one, minus), Error);
    CentralDatum not_central{{Rat(0)}, {Rat(1, 4)}, {Rat(0)}};
    CHECK_THROWS_AS(central_char_identity(rp, not_central, not_central), Error);
  }

  // all setups: every central element of order 2 or 4 on the group side
  std::size_t checked = 0;
  for (const auto& st : elliptic_setups()) {
    std::size_t n = st.dual.rank;
    auto p = ds_param(st);
    for (const auto& y : half_invariants(n)) {
      auto rp = make_related(endoscopic_from_s(parameter_invariant(p, y), p), p);
      oracle::box(n, -2, 2, [&](const oracle::IVec& b) {
        CentralDatum z{zeros(n), zeros(n), zeros(n)};
        for (std::size_t i = 0; i < n; ++i) z.y_im[i] = Rat(b[i], 4);
        try {
          validate_central(p, z);
        } catch (const Error&) {
          return;
        }
        CHECK(central_char_identity(rp, z, z));
        ++checked;
      });
    }
  }
  CHECK(checked > 50);

  // a central split GL1 exercises the real part and lambda_vee
  WithCenter c;
  auto p = make_lparam(c.dual, c.sigma, {Rat(3), Rat(2, 3)}, {Rat(0), Rat(1, 2)});
  auto rp = make_related(endoscopic_from_s(parameter_invariant(p, {Rat(1, 2), Rat(0)}), p), p);
  for (int r = -2; r <= 2; ++r)
    for (int j = -1; j <= 1; ++j) {
      CentralDatum z{{Rat(0), Rat(r, 5)}, {Rat(1, 2), Rat(r, 7)}, {Rat(0), Rat(j)}};
      CHECK(central_char_identity(rp, z, z));
    }
  CentralDatum off{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
  CHECK_THROWS_AS(central_char_identity(rp, off, off), Error);
}

TEST_CASE("tempered transfer factors") {
  auto s = sl2();
  auto p = ds_param(s);
  GroupSide g = group_side(s.dual, s.sigma);
  auto packet = enumerate_l_packet(p, quasi_split_form(g));
  REQUIRE(packet.size() == 2);
  auto y = parameter_invariant(p, {Rat(1, 2)});
  auto trivial = parameter_invariant(p, {Rat(0)});
  std::multiset<Rat> values;
  for (const auto& m : packet) {
    values.insert(delta_wh(m, y).exponent());
    CHECK(delta_wh(m, trivial).exponent() == 0);
    if (is_zero(m.inv)) CHECK(delta_wh(m, y).exponent() == 0);
    CHECK(delta_relative(m, m, y).exponent() == 0);
  }
  CHECK(values == std::multiset<Rat>{Rat(0), Rat(1, 2)});
  CHECK(delta_relative(packet[0], packet[1], y).exponent() == Rat(1, 2));
  CHECK(delta_relative(packet[0], packet[1], trivial).exponent() == 0);

  // no absolute invariant on SU(2)
  InnerFormSpec compact{"compact", twist_to_cochar(g.torus.rd, {Rat(1, 2)}, TwistLattice::ad)};
  auto su2 = enumerate_relative(p, compact);
  REQUIRE(su2.size() == 1);
  CHECK_THROWS_AS(delta_wh(su2[0], y), Error);
  CHECK_THROWS_AS(delta_relative(su2[0], packet[0], y), Error);

  std::size_t pairs = 0, products = 0;
  for (const auto& st : elliptic_setups()) {
    GroupSide gs = group_side(st.dual, st.sigma);
    for (const auto& q : dominant_sweep(st, 1)) {
      auto ms = enumerate_l_packet(q, quasi_split_form(gs));
      for (const auto& yv : half_invariants(st.dual.rank)) {
        auto sv = parameter_invariant(q, yv);
        for (const auto& m : ms) {
          // independent of the canonical representative
          CHECK(delta_wh(m, sv).exponent() == tn_pairing(m.cls, yv));
          for (const auto& m2 : ms) {
            CHECK(delta_relative(m, m2, sv).exponent() ==
                  frac(delta_wh(m, sv).exponent() - delta_wh(m2, sv).exponent()));
            ++pairs;
            Vec sum = gs.h1.q.canonical(m.inv + m2.inv);
            for (const auto& m3 : ms)
              if (m3.inv == sum) {
                CHECK(delta_wh(m3, sv).exponent() ==
                      frac(delta_wh(m, sv).exponent() + delta_wh(m2, sv).exponent()));
                ++products;
              }
          }
        }
      }
    }
  }
  CHECK(pairs > 100);
  CHECK(products > 50);
}

TEST_CASE("Arthur transfer factors") {
  auto s = sl2();
  GroupSide g = group_side(s.dual, s.sigma);
  InnerFormSpec compact{"compact", twist_to_cochar(g.torus.rd, {Rat(1, 2)}, TwistLattice::ad)};
  std::vector<std::size_t> all_roots{0, 1};
  CHECK(levi_epsilon(g, all_roots, compact.u_eta) == -1);
  CHECK(levi_epsilon(g, all_roots, zeros(1)) == 1);
  CHECK(levi_epsilon(g, {}, compact.u_eta) == 1);

  // M = G on SL2: the quasi-split singleton has absolute factor epsilon_M = +1
  auto a = normalize(make_aparam(s.dual, s.sigma, {0}, {Rat(0)}, {Rat(0)})).param;
  auto ap = enumerate_arthur_packet(a, quasi_split_form(g));
  REQUIRE(ap.size() == 1);
  auto ds = enumerate_l_packet(attached_selliptic(a), quasi_split_form(g));
  for (const auto& mhat : ds) {
    auto d = delta_arthur(ap[0], mhat, make_dual_invariant(g.torus.sigma, {Rat(0)}));
    CHECK(d.absolute_wh.exponent() == 0);
  }
  // s = 1/2 is not central in M = G
  CHECK_THROWS_AS(delta_arthur(ap[0], ds[0], make_dual_invariant(g.torus.sigma, {Rat(1, 2)})), Error);

  std::size_t checked = 0, aligned = 0, tempered = 0, negative = 0;
  for (const auto& st : elliptic_setups()) {
    GroupSide gs = group_side(st.dual, st.sigma);
    auto form = quasi_split_form(gs);
    for (const auto& ar : regular_arthur_sweep(st, st.dual.nroots() > 8 ? 1 : 2)) {
      auto members = enumerate_arthur_packet(ar, form);
      auto lp = attached_selliptic(ar);
      auto hats = enumerate_l_packet(lp, form);
      Mat em = e_levi_lattice(gs, ar.levi.roots);
      for (const auto& yv : half_invariants(st.dual.rank)) {
        bool central = true;
        for (auto i : ar.levi.roots) central = central && is_int(dot(st.dual.roots[i], yv));
        if (!central) continue;
        auto sv = make_dual_invariant(gs.torus.sigma, yv);
        for (const auto& m : members) {
          for (const auto& mhat : hats) {
            auto d = delta_arthur(m, mhat, sv);
            CHECK(d.absolute_wh == d.direct);
            CHECK(d.relative.sign == m.epsilon_m);
            if (mhat.twist == m.twist) {
              CHECK(d.relative.phase == 0);
              ++aligned;
            }
            if (d.direct.exponent() != 0) ++negative;
            ++checked;
          }
          if (ar.levi.roots.empty()) {
            const PacketMember* same = same_class(hats, em, m.cls);
            REQUIRE(same != nullptr);
            CHECK(m.epsilon_m == 1);
            CHECK(delta_arthur(m, *same, sv).direct.exponent() == delta_wh(*same, sv).exponent());
            ++tempered;
          }
        }
      }
    }
  }
  CHECK(checked > 200);
  CHECK(aligned > 20);
  CHECK(tempered > 20);
  CHECK(negative > 20);
}
