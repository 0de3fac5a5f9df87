#include "realendo/transfer.hpp"

namespace realendo {

namespace {

void require_same_torus(const DualInvariant& s, const Mat& dual_sigma) {
  if (s.sigma != transpose(dual_sigma)) fail_validation("s belongs to another torus or involution");
  make_dual_invariant(s.sigma, s.y);
}

bool integral_on(const RootDatum& dual, const std::vector<std::size_t>& roots, const Vec& y) {
  for (auto i : roots)
    if (!is_int(dot(dual.roots[i], y))) return false;
  return true;
}

EndoscopicDatum endoscopic(const DualInvariant& s, const RootDatum& dual, const Mat& sigma,
                           const std::vector<std::size_t>& levi_roots) {
  require_same_torus(s, sigma);
  EndoscopicDatum e;
  e.s = s;
  for (std::size_t i = 0; i < dual.nroots(); ++i)
    if (is_int(dot(dual.roots[i], s.y))) e.h_roots.push_back(i);
  for (auto i : e.h_roots)
    if (dual.find_root(transpose(sigma) * dual.roots[i]) < 0 ||
        !is_int(dot(dual.roots[dual.find_root(transpose(sigma) * dual.roots[i])], s.y)))
      fail_internal("endoscopic roots are not sigma-stable");
  e.h_datum = subsystem(dual, e.h_roots);

  // Lie algebra of the Gamma-fixed part of Z_{H dual}: fixed by sigma, killed by H's roots
  std::size_t n = dual.rank;
  Mat conditions = sigma - identity(n);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < n; ++r) rows.push_back(conditions.row(r));
  for (auto i : e.h_roots) rows.push_back(dual.roots[i]);
  e.elliptic = true;
  for (const auto& v : nullspace(from_rows(rows, n)))
    for (const auto& a : dual.roots) e.elliptic = e.elliptic && dot(a, v) == 0;

  e.s_in_levi_center = integral_on(dual, levi_roots, s.y);
  e.adams_johnson = e.s_in_levi_center;
  return e;
}

}  // namespace

DualInvariant parameter_invariant(const LParamData& p, const Vec& y) {
  return make_dual_invariant(transpose(p.sigma), y);
}

EndoscopicDatum endoscopic_from_s(const DualInvariant& s, const LParamData& p) {
  validate(p);
  return endoscopic(s, p.dual, p.sigma, c_levi(p).levi.roots);
}

EndoscopicDatum endoscopic_from_s(const DualInvariant& s, const AParamData& a) {
  validate(a, false);
  return endoscopic(s, a.dual, a.sigma, a.levi.roots);
}

T2Cochain related_shift(const EndoscopicDatum& e, const LParamData& p, const Vec& t_xi1) {
  if (e.s.sigma != transpose(p.sigma)) fail_validation("endoscopic datum belongs to another torus");
  Vec delta = p.dual.rho_coroots() - e.h_datum.rho_coroots();
  return t2_cochain(p.dual, p.sigma, e.h_roots, delta, t_xi1);
}

T2Cochain related_shift(const EndoscopicDatum& e, const LParamData& p) {
  std::size_t n = p.dual.rank;
  if (n > 16) fail_validation("rank too large for the t_xi1 search");
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Vec t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = (bits >> i) & 1 ? Rat(1, 2) : Rat(0);
    T2Cochain c = related_shift(e, p, t);
    if (t2_cocycle_holds(p.dual, p.sigma, e.h_roots, c)) return c;
  }
  fail_internal("no half-integral t_xi1 satisfies the cocycle relation");
}

RelatedPair make_related(const EndoscopicDatum& e, const LParamData& p) {
  validate(p);
  RelatedPair rp{e, {}, p, related_shift(e, p)};
  if (!is_dominant(e.h_datum, p.mu - rp.shift.mu_star, Side::cocharacter))
    fail_validation("no well-positioned related parameter: mu - mu* is not H-dominant");
  rp.p1 = make_lparam(e.h_datum, p.sigma, p.mu - rp.shift.mu_star, p.lambda - rp.shift.lambda_star);
  return rp;
}

bool check_related(const RelatedPair& rp) {
  const LParamData& p = rp.p;
  const LParamData& p1 = rp.p1;
  validate(p);
  validate(p1);
  if (!same_datum(p1.dual, rp.endo.h_datum) || p1.sigma != p.sigma || p1.dual.rank != p.dual.rank)
    fail_validation("endoscopic parameter does not live on the endoscopic datum");
  if (rp.shift.mu_star.size() != p.dual.rank || rp.shift.lambda_star.size() != p.dual.rank)
    fail_validation("shift has wrong length");
  // T_2 = (T_1 x T) / antidiagonal T_H collapses to the sum of the two coordinates
  return p1.mu + rp.shift.mu_star == p.mu && same_mod_k(p.sigma, p1.lambda + rp.shift.lambda_star, p.lambda);
}

Rat TransferValue::exponent() const { return frac(sign < 0 ? phase + Rat(1, 2) : phase); }

bool operator==(const TransferValue& a, const TransferValue& b) { return a.exponent() == b.exponent(); }

std::string to_string(const TransferValue& v) {
  return std::string(v.sign < 0 ? "-" : "+") + "exp(2 pi i " + to_string(v.phase) + ")";
}

TransferValue delta_wh(const PacketMember& m, const DualInvariant& s) {
  if (!std::holds_alternative<LParamData>(m.param)) fail_validation("delta_wh needs an L-packet member");
  if (!m.has_inv) fail_validation("member has no absolute invariant (relative enumeration)");
  require_same_torus(s, std::get<LParamData>(m.param).sigma);
  return {1, tn_pairing(m.inv, s.y)};
}

TransferValue delta_relative(const PacketMember& m, const PacketMember& m2, const DualInvariant& s) {
  auto is_l = [](const PacketMember& x) { return std::holds_alternative<LParamData>(x.param); };
  if (!is_l(m) || !is_l(m2)) fail_validation("delta_relative needs L-packet members");
  const LParamData& p = std::get<LParamData>(m.param);
  const LParamData& p2 = std::get<LParamData>(m2.param);
  if (!same_datum(p.dual, p2.dual) || p.sigma != p2.sigma) fail_validation("members sit on different tori");
  require_same_torus(s, p.sigma);
  GroupSide g = group_side(p.dual, p.sigma);
  return {1, tn_pairing(inv_relative(g, m, m2), u_dual_vector(s.y))};
}

ArthurDelta delta_arthur(const PacketMember& m, const PacketMember& mhat, const DualInvariant& s) {
  if (!std::holds_alternative<AParamData>(m.param)) fail_validation("delta_arthur needs an Arthur-packet member");
  if (!std::holds_alternative<LParamData>(mhat.param) || !mhat.has_inv)
    fail_validation("reference member must be a discrete-series member with invariant");
  const AParamData& a = std::get<AParamData>(m.param);
  LParamData ahat = attached_selliptic(a);
  const LParamData& phat = std::get<LParamData>(mhat.param);
  if (!same_datum(phat.dual, ahat.dual) || phat.sigma != ahat.sigma || phat.mu != ahat.mu ||
      !same_mod_k(ahat.sigma, phat.lambda, ahat.lambda))
    fail_validation("reference member is not in the packet of the attached parameter");
  require_same_torus(s, a.sigma);
  if (!integral_on(a.dual, a.levi.roots, s.y)) fail_validation("s is not in the center of the Levi");

  GroupSide g = group_side(a.dual, a.sigma);
  // s kills E_M(T), so <inv(pi), s_T> is read off any representative
  Mat em = e_levi_lattice(g, a.levi.roots);
  for (std::size_t c = 0; c < em.cols; ++c)
    if (!is_int(dot(s.y, em.col(c)))) fail_internal("s does not kill E_M(T)");

  ArthurDelta d;
  TransferValue pair{1, tn_pairing(inv_relative(g, m, mhat), u_dual_vector(s.y))};
  d.relative = {m.epsilon_m, pair.phase};
  d.absolute_wh = {m.epsilon_m, frac(pair.phase + delta_wh(mhat, s).phase)};
  d.direct = {m.epsilon_m, tn_pairing(m.cls, s.y)};
  if (!(d.absolute_wh == d.direct))
    fail_internal("Arthur transfer factor routes disagree: " + to_string(d.absolute_wh) + " vs " +
                  to_string(d.direct));
  return d;
}

bool operator==(const CentralValue& a, const CentralValue& b) {
  return a.log_modulus == b.log_modulus && frac(a.phase) == frac(b.phase);
}

void validate_central(const LParamData& p, const CentralDatum& z) {
  std::size_t n = p.dual.rank;
  if (z.y_re.size() != n || z.y_im.size() != n || z.lambda_vee.size() != n)
    fail_validation("central datum has wrong length");
  // group-side roots are the dual coroots
  for (const auto& a : p.dual.coroots)
    if (dot(a, z.y_re) != 0 || !is_int(dot(a, z.y_im))) fail_validation("element is not central");
  // <lambda, lambda_vee> must be defined for lambda mod K_f = X + (-1 eigenspace)
  if (!is_integral(z.lambda_vee)) fail_validation("lambda_vee is not integral");
  for (const auto& v : nullspace(p.sigma + identity(n)))
    if (dot(v, z.lambda_vee) != 0) fail_validation("lambda_vee does not kill the -1 eigenspace");
}

CentralValue central_character(const LParamData& p, const CentralDatum& z) {
  validate_central(p, z);
  return {dot(p.mu, z.y_re), frac(dot(p.mu, z.y_im) + dot(p.lambda, z.lambda_vee))};
}

bool central_char_identity(const RelatedPair& rp, const CentralDatum& z1, const CentralDatum& z) {
  if (!check_related(rp)) fail_validation("parameters are not related");
  // H_1 = H: the pair lies in C(R) exactly when both entries are the same element
  if (z1.y_re != z.y_re || z1.y_im != z.y_im || z1.lambda_vee != z.lambda_vee)
    fail_validation("pair is not in C(R)");
  validate_central(rp.p, z);
  CentralValue c1 = central_character(rp.p1, z1), c = central_character(rp.p, z);
  CentralValue quotient{c1.log_modulus - c.log_modulus, frac(c1.phase - c.phase)};
  const T2Cochain& sh = rp.shift;
  CentralValue via_shift{-dot(sh.mu_star, z.y_re),
                         frac(-dot(sh.mu_star, z.y_im) - dot(sh.lambda_star, z.lambda_vee))};
  return quotient == via_shift;
}

}  // namespace realendo
