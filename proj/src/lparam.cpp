#include "realendo/lparam.hpp"

#include <algorithm>
#include <map>

namespace realendo {

std::string to_string(ParamClass c) {
  switch (c) {
    case ParamClass::elliptic: return "elliptic";
    case ParamClass::s_elliptic_singular: return "s_elliptic_singular";
    case ParamClass::totally_degenerate: return "totally_degenerate";
  }
  return "?";
}

Vec reduce_lambda(const Mat& sigma, const Vec& lambda) {
  std::size_t n = sigma.rows;
  Mat proj = Rat(1, 2) * (identity(n) + sigma);
  Mat plus_lattice = lattice_basis(proj);
  Vec v = proj * lambda;
  if (plus_lattice.cols == 0) return zeros(n);
  return reduce_mod_lattice(plus_lattice, v);
}

bool same_mod_k(const Mat& sigma, const Vec& a, const Vec& b) { return reduce_lambda(sigma, a) == reduce_lambda(sigma, b); }

namespace {

void check_shapes(const RootDatum& dual, const Mat& sigma, const Vec& mu, const Vec& lambda) {
  std::size_t n = dual.rank;
  if (sigma.rows != n || sigma.cols != n) fail_validation("sigma has wrong shape");
  if (mu.size() != n || lambda.size() != n) fail_validation("mu/lambda have wrong length");
  if (!is_integral(sigma) || sigma * sigma != identity(n)) fail_validation("sigma is not an integral involution");
  Mat on_char = transpose(sigma);
  for (const auto& a : dual.roots)
    if (on_char * a != -a) fail_validation("sigma does not act as -1 on the roots");
}

Rat pairing(const RootDatum& rd, std::size_t i, const Vec& mu) { return dot(rd.roots[i], mu); }

}  // namespace

Vec congruence_residue(const LParamData& p) {
  const Mat& s = p.sigma;
  return Rat(1, 2) * (p.mu - s * p.mu) - p.dual.rho_coroots() - (p.lambda + s * p.lambda);
}

void validate(const LParamData& p) {
  check_shapes(p.dual, p.sigma, p.mu, p.lambda);
  Vec res = congruence_residue(p);
  if (!is_integral(res)) fail_validation("congruence for (mu, lambda) fails; residue " + to_string(frac(res)));
  for (std::size_t j = 0; j < p.dual.nsimple; ++j)
    if (pairing(p.dual, j, p.mu) < 0) fail_validation("mu is not dominant");
}

LParamData make_lparam(const RootDatum& dual, const Mat& sigma, const Vec& mu, const Vec& lambda) {
  check_shapes(dual, sigma, mu, lambda);
  LParamData p{dual, sigma, mu, lambda};
  validate(p);
  p.lambda = reduce_lambda(sigma, lambda);
  return p;
}

ParamClass classify(const LParamData& p) {
  bool all_pos = true, all_zero = true;
  for (std::size_t i = 0; i < p.dual.npos; ++i) {
    Rat v = pairing(p.dual, i, p.mu);
    if (v <= 0) all_pos = false;
    if (v != 0) all_zero = false;
  }
  // a torus parameter counts as totally degenerate
  if (all_zero) return ParamClass::totally_degenerate;
  if (all_pos) return ParamClass::elliptic;
  return ParamClass::s_elliptic_singular;
}

CLevi c_levi(const LParamData& p) {
  std::vector<std::size_t> zero;
  for (std::size_t j = 0; j < p.dual.nsimple; ++j)
    if (pairing(p.dual, j, p.mu) == 0) zero.push_back(j);
  CLevi c{levi_from_simples(p.dual, zero), {}};
  c.sigma_m = levi_longest(p.dual, c.levi).on_cochar * p.sigma;
  return c;
}

bool condition_bullet(const RootDatum& dual, const LeviSubset& levi, const Mat& sigma_m) {
  Vec z = levi_generic_point(dual, levi);
  for (const auto& w : weyl_elements(dual)) {
    if (w.on_cochar * z != z) continue;
    auto inv = inverse(w.on_cochar * sigma_m);
    if (!inv) fail_validation("sigma_M is not invertible");
    Mat on_char = transpose(*inv);
    bool minus_one = true;
    for (std::size_t j = 0; j < dual.nsimple && minus_one; ++j)
      minus_one = on_char * dual.roots[j] == -dual.roots[j];
    if (minus_one) return true;
  }
  return false;
}

LParamData factor_through_levi(const LParamData& p) {
  validate(p);
  CLevi c = c_levi(p);
  Vec shift = p.dual.rho_coroots() - half_sum_coroots(p.dual, c.levi);
  RootDatum m = subsystem(p.dual, c.levi.roots);
  LParamData out{m, p.sigma, p.mu - shift, p.lambda};
  try {
    validate(out);
  } catch (const Error& e) {
    fail_internal(std::string("factored parameter does not validate: ") + e.what());
  }
  return out;
}

LParamData translate(const LParamData& p, const Vec& mu0) {
  if (mu0.size() != p.dual.rank || !is_integral(mu0)) fail_validation("translation must be an integral cocharacter");
  if (!is_dominant(p.dual, mu0, Side::cocharacter)) fail_validation("translation must be dominant");
  return make_lparam(p.dual, p.sigma, p.mu + mu0, p.lambda + Rat(1, 2) * mu0);
}

namespace {

// Integer points of the column space of c.
Mat saturation(const Mat& c) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < c.cols; ++j) cols.push_back(c.col(j));
  Mat ann = annihilator_lattice(cols, c.rows);
  if (ann.cols == 0) return identity(c.rows);
  return integer_kernel(transpose(ann));
}

// Rows: the given simple roots, then sigma - 1.
Mat center_conditions(const RootDatum& rd, const std::vector<std::size_t>& simples, const Mat& sigma) {
  std::vector<Vec> rows;
  for (auto j : simples) rows.push_back(rd.roots[j]);
  Mat d = sigma - identity(rd.rank);
  for (std::size_t i = 0; i < rd.rank; ++i) rows.push_back(d.row(i));
  return from_rows(rows, rd.rank);
}

std::vector<std::size_t> all_simples(const RootDatum& rd) {
  std::vector<std::size_t> s(rd.nsimple);
  for (std::size_t j = 0; j < rd.nsimple; ++j) s[j] = j;
  return s;
}

// |Image[H^1(Z_{M_sc}) -> H^1(T)]| on the group side: X_*(T) is the character
// lattice of the dual torus, coroots of M are the dual roots, sigma acts by transpose.
Int levi_center_image_order(const RootDatum& dual, const LeviSubset& levi, const Mat& sigma) {
  std::size_t n = dual.rank, m = levi.simples.size();
  Mat sigma_g = transpose(sigma);
  CohomologyGroup h = tate_h1(sigma_g);
  if (m == 0) return 1;
  std::vector<Vec> q;
  for (auto j : levi.simples) q.push_back(dual.roots[j]);
  Mat qm = from_cols(q, n);
  Mat pair(m, m);  // <q_j, M root i>
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pair(i, j) = dot(dual.coroots[levi.simples[i]], q[j]);
  Mat coweights = qm * *inverse(pair);
  Mat left_inv = *inverse(transpose(qm) * qm) * transpose(qm);
  Mat one_minus = identity(n) - sigma_g;
  Mat cocycles = sublattice_where_integral(coweights, left_inv * one_minus);
  std::vector<Vec> imgs;
  for (std::size_t j = 0; j < cocycles.cols; ++j) imgs.push_back(one_minus * cocycles.col(j));
  return h.q.subgroup_order(imgs);
}

// |E(T)| = |Image[H^1(T_sc) -> H^1(T)]| on the group side for the involution sigma on X_*(dual torus).
Int e_order(const RootDatum& dual, const Mat& sigma) {
  Mat sigma_g = transpose(sigma);
  std::vector<Vec> q;
  for (std::size_t j = 0; j < dual.nsimple; ++j) q.push_back(dual.roots[j]);
  Mat sc = lattice_basis(q, dual.rank);
  CohomologyGroup h = tate_h1(sigma_g);
  if (sc.cols == 0) return 1;
  return h.q.subgroup_order(tate_h1(sigma_g, sc).generators());
}

}  // namespace

CentralizerReport centralizer_report(const LParamData& p) {
  validate(p);
  const RootDatum& d = p.dual;
  std::size_t n = d.rank;
  CLevi cl = c_levi(p);
  if (!condition_bullet(d, cl.levi, cl.sigma_m)) fail_internal("condition bullet fails for an s-elliptic parameter");

  // (Z_M)^Gamma / (Z_G)^Gamma: y with C_M y integral modulo y with C_G y integral, plus X.
  Mat cg = center_conditions(d, all_simples(d), p.sigma);
  Mat cm = center_conditions(d, cl.levi.simples, p.sigma);
  std::vector<std::size_t> keep;  // rows of cg that survive in cm
  for (std::size_t j = 0; j < d.nsimple; ++j)
    if (std::find(cl.levi.simples.begin(), cl.levi.simples.end(), j) != cl.levi.simples.end()) keep.push_back(j);
  for (std::size_t i = 0; i < n; ++i) keep.push_back(d.nsimple + i);
  Mat sat_g = saturation(cg);
  Mat restricted(keep.size(), sat_g.cols);
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t j = 0; j < sat_g.cols; ++j) restricted(r, j) = sat_g(keep[r], j);
  Mat sub = lattice_sum(restricted, cm);
  FiniteQuotient quo(saturation(cm), sub);

  CentralizerReport rep;
  rep.quotient_order = quo.order();
  for (std::size_t k = 0; k < quo.invariants().size(); ++k) {
    std::vector<Int> c(quo.invariants().size(), 0);
    c[k] = 1;
    auto y = solve(cm, quo.rep(c));
    if (!y) fail_internal("center representative has no preimage");
    rep.s_phi_invariants.push_back(frac(*y));
  }
  // S_phi_M pairs perfectly with Image[H^1(Z_{M_sc}) -> H^1(Z_M)], which embeds in H^1(T).
  rep.s_bar_m_order = levi_center_image_order(d, cl.levi, p.sigma);
  // S_phi -> R = S_phi_M is onto with kernel dual to E of the companion torus.
  rep.companion_e_order = e_order(d, cl.sigma_m);
  rep.s_bar_order = rep.companion_e_order * rep.s_bar_m_order;
  // Fails when -1 of a GL2-type Levi centre lies in S_phi^0 but not in Z_G (e.g. SU(2,1)).
  rep.sequence_exact = rep.s_bar_order == rep.quotient_order * rep.s_bar_m_order;
  return rep;
}

bool twist_stable(const LParamData& p, const Mat& theta, const Vec& mu_a, const Vec& lambda_a) {
  validate(p);
  const RootDatum& d = p.dual;
  std::size_t n = d.rank;
  if (theta.rows != n || theta.cols != n || !is_integral(theta)) fail_validation("theta has wrong shape");
  auto inv = inverse(theta);
  if (!inv || !is_integral(*inv)) fail_validation("theta is not a lattice automorphism");
  Mat on_char = transpose(*inv);
  for (std::size_t j = 0; j < d.nsimple; ++j) {
    int k = d.find_root(on_char * d.roots[j]);
    if (k < 0 || static_cast<std::size_t>(k) >= d.nsimple) fail_validation("theta does not preserve the based dual datum");
  }
  if (theta * p.sigma != p.sigma * theta) fail_validation("theta does not commute with sigma");
  if (mu_a.size() != n || lambda_a.size() != n) fail_validation("a-data has wrong length");
  for (std::size_t j = 0; j < d.nsimple; ++j)
    if (dot(d.roots[j], mu_a) != 0 || !is_int(dot(d.roots[j], lambda_a)))
      fail_validation("a-data is not central");
  Vec res = Rat(1, 2) * (mu_a - p.sigma * mu_a) - (lambda_a + p.sigma * lambda_a);
  if (!is_integral(res)) fail_validation("a-data is not a cocycle");
  if (theta * p.mu != p.mu + mu_a) return false;
  // K_f = X + (1 - sigma)(X (x) C), the same set as K
  return same_mod_k(p.sigma, theta * p.lambda, p.lambda + lambda_a);
}

namespace {

Int root_height(const RootDatum& d, std::size_t i) {
  Int h = 0;
  for (const auto& c : d.simple_coords[i]) h += c;
  return h;
}

// Maximal split involution of M reached by Cayley steps through noncompact
// imaginary roots, starting from the Whittaker grading (simple roots noncompact).
Mat cayley_to_split(const RootDatum& d, const LeviSubset& levi, const Mat& sigma, std::vector<std::size_t>& used) {
  std::map<std::size_t, int> grade;  // positive M roots still imaginary
  for (auto i : levi.roots)
    if (d.positive(i)) grade[i] = static_cast<int>(root_height(d, i) % 2 == 0 ? 0 : 1);
  Mat s = sigma;
  for (;;) {
    std::size_t best = d.nroots();
    Int best_h = -1;
    for (auto [i, g] : grade) {
      if (g != 1) continue;
      Int h = root_height(d, i);
      if (h > best_h) best = i, best_h = h;
    }
    if (best == d.nroots()) break;
    used.push_back(best);
    s = reflection_cochar(d, best) * s;
    std::map<std::size_t, int> next;
    for (auto [i, g] : grade) {
      if (i == best || dot(d.roots[i], d.coroots[best]) != 0) continue;
      bool linked = d.find_root(d.roots[i] + d.roots[best]) >= 0 || d.find_root(d.roots[i] - d.roots[best]) >= 0;
      next[i] = linked ? 1 - g : g;
    }
    grade = std::move(next);
  }
  return s;
}

std::vector<std::size_t> negated_roots(const RootDatum& d, const Mat& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.nroots(); ++i)
    if (s * d.coroots[i] == -d.coroots[i]) out.push_back(i);
  return out;
}

}  // namespace

CompanionLevi companion_standard_levi(const LParamData& p) {
  validate(p);
  const RootDatum& d = p.dual;
  std::size_t n = d.rank;
  CLevi cl = c_levi(p);
  CompanionLevi c;
  Mat split = cayley_to_split(d, cl.levi, p.sigma, c.cascade);
  c.sigma_bar = cl.sigma_m;
  c.roots = negated_roots(d, c.sigma_bar);
  if (negated_roots(d, split).size() != c.roots.size() ||
      rank(split + identity(n)) != rank(c.sigma_bar + identity(n)))
    fail_internal("Cayley steps do not reach the split involution of the c-Levi");
  for (auto i : c.roots)
    if (dot(d.roots[i], p.mu) == 0) fail_internal("mu is singular on the companion Levi");

  // a generic vector of the +1 eigenspace is killed exactly by the negated roots
  std::vector<Vec> plus = nullspace(c.sigma_bar - identity(n));
  Vec y = zeros(n);
  Rat weight = 1;
  for (const auto& v : plus) {
    y = y + weight * v;
    weight *= 97;
  }
  for (std::size_t i = 0; i < d.nroots(); ++i) {
    bool negated = std::find(c.roots.begin(), c.roots.end(), i) != c.roots.end();
    if ((dot(d.roots[i], y) == 0) != negated) fail_internal("companion Levi: generic vector is not generic");
  }
  Dominant dom = make_dominant(d, y, Side::cocharacter);
  std::vector<std::size_t> simples;
  for (std::size_t j = 0; j < d.nsimple; ++j)
    if (dot(d.roots[j], dom.v) == 0) simples.push_back(j);
  c.standard = levi_from_simples(d, simples);
  c.conj = dom.w;
  return c;
}

}  // namespace realendo
