#include "realendo/tits.hpp"

#include "realendo/realform.hpp"

#include <algorithm>

namespace realendo {

namespace {

// (t, w) * n_s
TitsElement times_simple(const RootDatum& rd, const TitsElement& a, std::size_t s) {
  WeylElement ws = weyl_mul(rd, a.w, simple_reflection(rd, s));
  Vec t = a.torus;
  if (ws.length() < a.w.length()) t = t + ws.on_cochar * (Rat(1, 2) * rd.coroots[s]);
  return TitsElement{frac(t), ws};
}

bool weyl_is_identity(const WeylElement& w) { return w.word.empty(); }

std::vector<std::size_t> map_word(const std::vector<std::size_t>& word, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> out;
  for (auto s : word) out.push_back(perm.at(s));
  return out;
}

bool torus_matches(const TitsElement& e, const Vec& expected) {
  return weyl_is_identity(e.w) && is_integral(e.torus - expected);
}

}  // namespace

TitsElement tits_identity(const RootDatum& rd) { return TitsElement{zeros(rd.rank), weyl_identity(rd)}; }

TitsElement torus_element(const RootDatum& rd, const Vec& t) {
  if (t.size() != rd.rank) fail_validation("torus vector has wrong length");
  return TitsElement{frac(t), weyl_identity(rd)};
}

TitsElement word_product(const RootDatum& rd, const std::vector<std::size_t>& word) {
  TitsElement e = tits_identity(rd);
  for (auto s : word) {
    if (s >= rd.nsimple) fail_validation("simple reflection index out of range");
    e = times_simple(rd, e, s);
  }
  return e;
}

TitsElement canonical_rep(const RootDatum& rd, const WeylElement& w) { return word_product(rd, w.word); }

TitsElement tits_mul(const RootDatum& rd, const TitsElement& a, const TitsElement& b) {
  TitsElement e{frac(a.torus + a.w.on_cochar * b.torus), a.w};
  for (auto s : b.w.word) e = times_simple(rd, e, s);
  return e;
}

TitsElement tits_inverse(const RootDatum& rd, const TitsElement& a) {
  // n_s^-1 = alpha_s^vee(-1) n_s
  TitsElement e = tits_identity(rd);
  for (auto it = a.w.word.rbegin(); it != a.w.word.rend(); ++it) {
    TitsElement inv_s = times_simple(rd, torus_element(rd, Rat(1, 2) * rd.coroots[*it]), *it);
    e = tits_mul(rd, e, inv_s);
  }
  return tits_mul(rd, e, torus_element(rd, -a.torus));
}

bool tits_equal(const TitsElement& a, const TitsElement& b) {
  return a.w.on_cochar == b.w.on_cochar && is_integral(a.torus - b.torus);
}

std::vector<std::vector<std::size_t>> reduced_words(const RootDatum& rd, const WeylElement& w) {
  if (weyl_is_identity(w)) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = 0; j < rd.nsimple; ++j) {
    WeylElement shorter = weyl_mul(rd, w, simple_reflection(rd, j));
    if (shorter.length() >= w.length()) continue;
    for (auto word : reduced_words(rd, shorter)) {
      word.push_back(j);
      out.push_back(std::move(word));
    }
  }
  return out;
}

PinnedAction pinned_action(const RootDatum& rd, const std::vector<std::size_t>& perm) {
  return PinnedAction{diagram_matrix(rd, perm), perm};
}

TitsElement sigma_twist(const RootDatum& rd, const TitsElement& n, const PinnedAction& act, const Vec& shift) {
  TitsElement moved = tits_mul(rd, torus_element(rd, act.on_cochar * n.torus), word_product(rd, map_word(n.w.word, act.perm)));
  return tits_mul(rd, torus_element(rd, shift), moved);
}

namespace {

// Weyl element of W(rd) acting as the longest element of the subsystem.
WeylElement subsystem_longest(const RootDatum& rd, const std::vector<std::size_t>& roots) {
  if (roots.empty()) return weyl_identity(rd);
  RootDatum sub = subsystem(rd, roots);
  Mat target = longest_element(sub).on_cochar;
  for (const auto& w : weyl_elements(rd))
    if (w.on_cochar == target) return w;
  fail_internal("subsystem longest element not found in the Weyl group");
}

}  // namespace

WeylElement levi_longest(const RootDatum& rd, const LeviSubset& levi) {
  if (!is_standard(rd, levi)) return subsystem_longest(rd, levi.roots);
  WeylElement w = weyl_identity(rd);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto j : levi.simples) {
      WeylElement longer = weyl_mul(rd, w, simple_reflection(rd, j));
      if (longer.length() > w.length()) {
        w = longer;
        grew = true;
        break;
      }
    }
  }
  return w;
}

bool is_sigma_stable(const RootDatum& rd, const Mat& sigma, const LeviSubset& levi) {
  for (auto i : levi.roots) {
    int k = rd.find_coroot(sigma * rd.coroots[i]);
    if (k < 0) return false;
    if (std::find(levi.roots.begin(), levi.roots.end(), static_cast<std::size_t>(k)) == levi.roots.end()) return false;
  }
  return true;
}

Mat sigma_t_of(const RootDatum& rd, const PinnedAction& act) { return longest_element(rd).on_cochar * act.on_cochar; }

Mat sigma_levi(const RootDatum& rd, const PinnedAction& act, const LeviSubset& levi) {
  return levi_longest(rd, levi).on_cochar * sigma_t_of(rd, act);
}

namespace {

// sigma_M restricted to the Levi as a pinned action: permutation of the Levi simples.
std::vector<std::size_t> levi_permutation(const RootDatum& rd, const Mat& sigma_m, const LeviSubset& levi) {
  std::vector<std::size_t> perm(rd.nsimple);
  for (std::size_t j = 0; j < rd.nsimple; ++j) perm[j] = j;
  for (auto j : levi.simples) {
    int k = rd.find_coroot(sigma_m * rd.coroots[j]);
    if (k < 0 || std::find(levi.simples.begin(), levi.simples.end(), static_cast<std::size_t>(k)) == levi.simples.end())
      fail_validation("Levi is not stable under the involution");
    perm[j] = static_cast<std::size_t>(k);
  }
  return perm;
}

}  // namespace

LeviLiftReport verify_levi_lift_ratio(const RootDatum& rd, const PinnedAction& act, const LeviSubset& levi) {
  Mat sigma_t = sigma_t_of(rd, act);
  if (!is_sigma_stable(rd, sigma_t, levi)) fail_validation("Levi is not stable under the involution");
  LeviLiftReport rep;
  rep.iota = rd.rho_coroots();
  rep.iota_m = half_sum_coroots(rd, levi);

  TitsElement n = canonical_rep(rd, longest_element(rd));
  TitsElement nn = tits_mul(rd, n, sigma_twist(rd, n, act, zeros(rd.rank)));

  Mat sigma_m = sigma_levi(rd, act, levi);
  PinnedAction act_m{sigma_m, levi_permutation(rd, sigma_m, levi)};
  TitsElement nm = canonical_rep(rd, levi_longest(rd, levi));
  TitsElement nmnm = tits_mul(rd, nm, sigma_twist(rd, nm, act_m, zeros(rd.rank)));

  TitsElement ratio = tits_mul(rd, tits_inverse(rd, nmnm), nn);
  rep.n_sigma_n = nn.torus;
  rep.nm_sigma_nm = nmnm.torus;
  rep.ratio = ratio.torus;
  rep.ok = torus_matches(nn, rep.iota) && torus_matches(nmnm, rep.iota_m) &&
           torus_matches(ratio, rep.iota - rep.iota_m);
  return rep;
}

TitsElement xi_m_cochain(const RootDatum& rd, const PinnedAction& act, const LeviSubset& levi) {
  if (!is_sigma_stable(rd, sigma_t_of(rd, act), levi)) fail_validation("Levi is not stable under the involution");
  // Int(n) o sigma maps canonical lifts of the Levi to canonical lifts, so n' = n.
  TitsElement n = canonical_rep(rd, longest_element(rd));
  TitsElement nm = canonical_rep(rd, levi_longest(rd, levi));
  return tits_mul(rd, tits_inverse(rd, nm), n);
}

TitsElement xi_square(const RootDatum& rd, const PinnedAction& act, const TitsElement& xi) {
  return tits_mul(rd, xi, sigma_twist(rd, xi, act, zeros(rd.rank)));
}

namespace {

Vec iota_of(const RootDatum& rd, const std::vector<std::size_t>& roots) {
  Vec s = zeros(rd.rank);
  for (auto i : roots)
    if (rd.positive(i)) s = s + rd.coroots[i];
  return Rat(1, 2) * s;
}

}  // namespace

T2Cochain t2_cochain(const RootDatum& rd, const Mat& sigma2,
                     const std::vector<std::size_t>& h_roots, const Vec& chi_shift, const Vec& t_xi1) {
  if (chi_shift.size() != rd.rank || t_xi1.size() != rd.rank) fail_validation("cochain vectors have wrong length");
  if (!is_integral(Rat(2) * chi_shift) || sigma2 * chi_shift != -chi_shift)
    fail_validation("chi-data shift inconsistent with the Galois orbits of roots outside H");
  for (auto i : h_roots)
    if (i >= rd.nroots()) fail_validation("endoscopic root index out of range");
  TitsElement n_g = canonical_rep(rd, longest_element(rd));
  TitsElement n_h = canonical_rep(rd, subsystem_longest(rd, h_roots));
  TitsElement ratio = tits_mul(rd, tits_mul(rd, torus_element(rd, -t_xi1), n_h), tits_inverse(rd, n_g));
  T2Cochain c;
  c.mu_star = chi_shift;
  c.lift_torus = ratio.torus;
  c.lambda_star = frac(ratio.torus);
  return c;
}

bool t2_cocycle_holds(const RootDatum& rd, const Mat& sigma2, const std::vector<std::size_t>& h_roots,
                      const T2Cochain& c) {
  Vec lhs = Rat(1, 2) * (c.mu_star - sigma2 * c.mu_star) - (rd.rho_coroots() - iota_of(rd, h_roots));
  Vec rhs = c.lambda_star + sigma2 * c.lambda_star;
  return is_integral(lhs - rhs);
}

}  // namespace realendo
