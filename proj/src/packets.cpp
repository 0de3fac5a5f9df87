#include "realendo/packets.hpp"

#include <algorithm>
#include <map>

namespace realendo {

GroupSide group_side(const RootDatum& dual, const Mat& sigma) {
  GroupSide g;
  RootDatum rd = dual_datum(dual);
  if (rd.nsimple != rd.rank) fail_validation("packets need a semisimple group");
  g.torus = make_torus(rd, transpose(sigma));
  g.whittaker = whittaker_grading(g.torus);
  g.sc_lattice = coroot_lattice(rd);
  std::vector<Vec> rows(rd.roots.begin(), rd.roots.begin() + static_cast<long>(rd.nsimple));
  g.center_lattice = lattice_basis(*inverse(from_rows(rows, rd.rank)));
  g.h1 = tate_h1(g.torus.sigma);
  for (const auto& c : dual.coroots) {
    int k = rd.find_root(c);
    if (k < 0) fail_internal("dual coroot is not a root of the group side");
    g.from_dual.push_back(static_cast<std::size_t>(k));
  }
  for (const auto& r : rd.roots)
    if (g.torus.sigma_char() * r != -r) fail_validation("the torus is not elliptic");
  return g;
}

InnerFormSpec quasi_split_form(const GroupSide& g) { return {"quasi-split", zeros(g.torus.rd.rank)}; }

void validate_form(const GroupSide& g, const InnerFormSpec& f) {
  if (f.u_eta.size() != g.torus.rd.rank) fail_validation("form twist has wrong length");
  for (const auto& r : g.torus.rd.roots)
    if (!is_int(dot(r, Rat(2) * f.u_eta)))
      fail_validation("form twist " + to_string(f.u_eta) + " does not give an involution");
}

bool is_quasi_split_type(const GroupSide& g, const InnerFormSpec& f) {
  validate_form(g, f);
  return in_lattice(g.sc_lattice, Rat(2) * f.u_eta);
}

namespace {

// Strong forms x_qs * u with x_qs = exp(pi i rho^vee); W-conjugates of x_qs * u_eta
// give the twists of all fundamental splittings over the same form.
std::vector<Vec> orbit_twists(const GroupSide& g, const Vec& u_eta) {
  const RootDatum& rd = g.torus.rd;
  Vec half_rho = Rat(1, 2) * rd.rho_coroots();
  Vec base = half_rho + u_eta;
  std::vector<Vec> out;
  for (const auto& w : weyl_elements(rd)) {
    Vec x = reduce_mod_lattice(g.sc_lattice, w.on_cochar * base - half_rho);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> group_roots(const GroupSide& g, const std::vector<std::size_t>& dual_roots) {
  std::vector<std::size_t> out;
  for (auto i : dual_roots) out.push_back(g.from_dual[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Every M-simple root stays noncompact after twisting.
bool keeps_levi_noncompact(const GroupSide& g, const std::vector<std::size_t>& levi_simples, const Vec& x) {
  Grading h = twist_grading_cochar(g.whittaker, x);
  for (auto j : levi_simples)
    if (grade(h, j) != 1) return false;
  return true;
}

std::size_t levi_noncompact(const Grading& h, const std::vector<std::size_t>& levi_roots) {
  std::size_t q = 0;
  for (auto i : levi_roots)
    if (h.torus.rd.positive(i) && grade(h, i) == 1) ++q;
  return q;
}

void require_dominant(const LParamData& p) {
  validate(p);
  if (!is_dominant(p.dual, p.mu, Side::cocharacter)) fail_validation("packets need mu dominant");
}

PacketMember make_member(const GroupSide& g, const LParamData& p, const Vec& x, bool qs) {
  PacketMember m;
  m.param = p;
  m.twist = x;
  if (qs) {
    m.cls = Rat(2) * x;
    m.has_inv = true;
    m.inv = g.h1.q.canonical(m.cls);
  }
  return m;
}

}  // namespace

std::vector<PacketMember> splitting_classes(const LParamData& p, const InnerFormSpec& f) {
  require_dominant(p);
  GroupSide g = group_side(p.dual, p.sigma);
  bool qs = is_quasi_split_type(g, f);
  auto levi = c_levi(p).levi;
  auto simples = group_roots(g, levi.simples);
  std::vector<PacketMember> out;
  for (const auto& x : orbit_twists(g, f.u_eta)) {
    PacketMember m = make_member(g, p, x, qs);
    m.nonzero = keeps_levi_noncompact(g, simples, x);
    out.push_back(m);
  }
  return out;
}

std::vector<PacketMember> enumerate_relative(const LParamData& p, const InnerFormSpec& f) {
  std::vector<PacketMember> out;
  for (auto& m : splitting_classes(p, f)) {
    if (!m.nonzero) continue;
    m.has_inv = false;
    m.cls.clear();
    m.inv.clear();
    out.push_back(m);
  }
  return out;
}

std::vector<PacketMember> enumerate_l_packet(const LParamData& p, const InnerFormSpec& f) {
  auto classes = splitting_classes(p, f);
  auto base = std::find_if(classes.begin(), classes.end(), [](const PacketMember& m) { return m.nonzero; });
  if (base == classes.end()) return {};
  GroupSide g = group_side(p.dual, p.sigma);
  if (!is_quasi_split_type(g, f)) fail_validation("form is not of quasi-split type; use relative enumeration");

  // Image[H^1(Z_{M(sc)}) -> H^1(T)], computed in coroot coordinates of T_sc
  const Mat& sc = g.sc_lattice;
  Mat to_sc = *inverse(sc);
  Mat sigma_sc = to_sc * g.torus.sigma * sc;
  std::vector<Vec> chars;
  for (auto j : group_roots(g, c_levi(p).levi.simples)) chars.push_back(transpose(sc) * g.torus.rd.roots[j]);
  Mat image = sc * center_image_lattice(sigma_sc, chars);
  FiniteQuotient classes_m(image, (identity(sc.rows) - g.torus.sigma) * sc);

  auto simples = group_roots(g, c_levi(p).levi.simples);
  std::map<Vec, PacketMember> by_inv;
  for (const auto& c : classes_m.elements()) {
    Vec x = reduce_mod_lattice(sc, base->twist + Rat(1, 2) * classes_m.rep(c));
    if (!keeps_levi_noncompact(g, simples, x)) fail_internal("Levi-center translate of a nonzero member is zero");
    // the translate may lie over another pure inner form (e.g. SU(3) next to SU(2,1))
    bool over_form = std::any_of(classes.begin(), classes.end(), [&](const PacketMember& m) { return m.twist == x; });
    if (!over_form) continue;
    PacketMember m = make_member(g, p, x, true);
    auto it = by_inv.find(m.inv);
    if (it == by_inv.end() || x < it->second.twist) by_inv[m.inv] = m;
  }
  std::vector<PacketMember> out;
  for (auto& [k, m] : by_inv) out.push_back(m);
  return out;
}

UTorus group_u_torus(const GroupSide& g) {
  return u_torus(g.torus.sigma, identity(g.torus.rd.rank), g.center_lattice);
}

Vec inv_relative(const GroupSide& g, const PacketMember& m, const PacketMember& m2) {
  std::size_t n = g.torus.rd.rank;
  if (m.twist.size() != n || m2.twist.size() != n) fail_validation("member twist has wrong length");
  // du_pi = exp(2 pi i (1 - sigma) x); equal coboundaries iff 2x - 2x' in X_*(T_sc)
  if (!in_lattice(g.sc_lattice, Rat(2) * (m.twist - m2.twist)))
    fail_validation("members lie in different extended groups (coboundary mismatch)");
  UTorus u = group_u_torus(g);
  Vec v = u_pair_vector(Rat(-2) * m.twist, Rat(2) * m2.twist);
  if (!u.h1.is_cocycle(v)) fail_internal("relative cochain is not a cocycle in U");
  return u.h1.q.canonical(v);
}

Vec inv_relative_from_absolute(const GroupSide& g, const PacketMember& m, const PacketMember& m2) {
  auto is_l = [](const PacketMember& x) { return std::holds_alternative<LParamData>(x.param); };
  if (!m.has_inv || !m2.has_inv || !is_l(m) || !is_l(m2))
    fail_validation("absolute invariants need L-packet members over forms of quasi-split type");
  UTorus u = group_u_torus(g);
  return u.h1.q.canonical(u_pair_vector(-m.inv, m2.inv));
}

Mat e_lattice(const GroupSide& g) {
  std::size_t n = g.torus.rd.rank;
  return lattice_sum(g.sc_lattice, (identity(n) - g.torus.sigma));
}

Mat e_levi_lattice(const GroupSide& g, const std::vector<std::size_t>& levi_dual_roots) {
  std::size_t n = g.torus.rd.rank;
  // sigma = -1 on coroots, so every coroot combination is a cocycle
  Mat m = coroot_lattice(g.torus.rd, group_roots(g, levi_dual_roots));
  return lattice_sum(m, (identity(n) - g.torus.sigma));
}

int levi_epsilon(const GroupSide& g, const std::vector<std::size_t>& levi_dual_roots, const Vec& twist) {
  if (twist.size() != g.torus.rd.rank) fail_validation("twist has wrong length");
  auto roots = group_roots(g, levi_dual_roots);
  std::size_t q = levi_noncompact(twist_grading_cochar(g.whittaker, twist), roots);
  std::size_t q_star = levi_noncompact(g.whittaker, roots);
  return (q + q_star) % 2 == 0 ? 1 : -1;
}

FiniteQuotient arthur_invariant_group(const GroupSide& g, const std::vector<std::size_t>& levi_dual_roots) {
  return FiniteQuotient(e_lattice(g), e_levi_lattice(g, levi_dual_roots));
}

std::vector<PacketMember> enumerate_arthur_packet(const AParamData& a, const InnerFormSpec& f) {
  validate(a, true);
  if (!regularity_test(a).regular) fail_validation("Arthur parameter is not regular");
  if (!is_elliptic(a)) fail_validation("Arthur parameter is not elliptic");
  GroupSide g = group_side(a.dual, a.sigma);
  if (!is_quasi_split_type(g, f)) fail_validation("form is not of quasi-split type");
  FiniteQuotient quot = arthur_invariant_group(g, a.levi.roots);

  std::map<Vec, PacketMember> by_inv;
  for (const auto& x : orbit_twists(g, f.u_eta)) {
    Vec key = quot.canonical(Rat(2) * x);
    if (by_inv.count(key)) continue;  // twists come sorted, keep the smallest
    PacketMember m;
    m.param = a;
    m.twist = x;
    m.cls = Rat(2) * x;
    m.has_inv = true;
    m.inv = key;
    m.epsilon_m = levi_epsilon(g, a.levi.roots, x);
    by_inv[key] = m;
  }
  std::vector<PacketMember> out;
  for (auto& [k, m] : by_inv) out.push_back(m);
  return out;
}

}  // namespace realendo
