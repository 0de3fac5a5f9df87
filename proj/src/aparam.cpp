#include "realendo/aparam.hpp"

#include <optional>

namespace realendo {

namespace {

// The pinned action of the inner class: sigma_T = w0 * act.
PinnedAction pinned_from_sigma(const RootDatum& rd, const Mat& sigma) {
  Mat act = longest_element(rd).on_cochar * sigma;
  std::vector<std::size_t> perm(rd.nsimple);
  for (std::size_t j = 0; j < rd.nsimple; ++j) {
    int k = rd.find_coroot(act * rd.coroots[j]);
    if (k < 0 || static_cast<std::size_t>(k) >= rd.nsimple) fail_validation("sigma is not w0 times a diagram automorphism");
    perm[j] = static_cast<std::size_t>(k);
  }
  return PinnedAction{act, perm};
}

void check_shapes(const AParamData& a) {
  std::size_t n = a.dual.rank;
  if (a.sigma.rows != n || a.sigma.cols != n) fail_validation("sigma has wrong shape");
  if (a.mu.size() != n || a.lambda.size() != n) fail_validation("mu/lambda have wrong length");
  if (!is_integral(a.sigma) || a.sigma * a.sigma != identity(n)) fail_validation("sigma is not an integral involution");
  for (const auto& r : a.dual.roots)
    if (transpose(a.sigma) * r != -r) fail_validation("sigma does not act as -1 on the roots");
  for (auto i : a.levi.roots)
    if (i >= a.dual.nroots()) fail_validation("Levi root index out of range");
}

void check_levi_conditions(const AParamData& a) {
  for (auto i : a.levi.roots) {
    if (dot(a.dual.roots[i], a.mu) != 0) fail_validation("mu does not vanish on the Levi roots");
    if (!is_int(dot(a.dual.roots[i], a.lambda))) fail_validation("lambda is not integral on the Levi roots");
  }
}

}  // namespace

AParamData make_aparam(const RootDatum& dual, const Mat& sigma, const std::vector<std::size_t>& levi_simples,
                       const Vec& mu, const Vec& lambda) {
  AParamData a;
  a.dual = dual;
  a.sigma = sigma;
  a.mu = mu;
  a.lambda = lambda;
  for (auto j : levi_simples)
    if (j >= dual.nsimple) fail_validation("Levi simple index out of range");
  a.levi = levi_from_simples(dual, levi_simples);
  check_shapes(a);
  a.sigma_m = levi_longest(dual, a.levi).on_cochar * sigma;
  a.iota_m = half_sum_coroots(dual, a.levi);
  validate(a, false);
  a.lambda = reduce_lambda(a.sigma_m, lambda);
  return a;
}

Vec congruence_residue_m(const AParamData& a) {
  const Mat& s = a.sigma_m;
  return Rat(1, 2) * (a.mu - s * a.mu) - (a.dual.rho_coroots() - a.iota_m) - (a.lambda + s * a.lambda);
}

Vec congruence_residue_t(const AParamData& a) {
  const Mat& s = a.sigma;
  Vec shifted = a.mu + a.iota_m;
  return Rat(1, 2) * (shifted - s * shifted) - a.dual.rho_coroots() - (a.lambda + s * a.lambda);
}

bool is_normalized(const AParamData& a) {
  return is_dominant(a.dual, a.mu, Side::cocharacter) && is_dominant(a.dual, a.mu + a.iota_m, Side::cocharacter);
}

void validate(const AParamData& a, bool require_dominant) {
  check_shapes(a);
  check_levi_conditions(a);
  Vec res = congruence_residue_m(a);
  if (!is_integral(res)) fail_validation("Arthur congruence fails; residue " + to_string(frac(res)));
  if (require_dominant && !is_dominant(a.dual, a.mu + a.iota_m, Side::cocharacter))
    fail_validation("mu + iota_M must be dominant");
}

Normalized normalize(const AParamData& raw) {
  validate(raw, false);
  const RootDatum& d = raw.dual;
  Vec shifted = raw.mu + raw.iota_m;
  std::optional<Normalized> fallback;
  for (const auto& w : weyl_elements(d)) {
    if (!is_dominant(d, w.on_cochar * shifted, Side::cocharacter)) continue;
    // positive Levi roots pair positively with mu + iota_M, so they stay positive
    AParamData out = raw;
    try {
      out.levi = levi_image(d, raw.levi, w);
    } catch (const Error&) {
      fail_internal("omega sends a positive Levi root to a negative root");
    }
    out.mu = w.on_cochar * raw.mu;
    bool both = is_dominant(d, out.mu, Side::cocharacter);
    if (!both && fallback) continue;
    out.iota_m = half_sum_coroots(d, out.levi);
    if (out.iota_m != w.on_cochar * raw.iota_m) fail_internal("iota of the conjugated Levi is not the image of iota_M");
    out.sigma_m = levi_longest(d, out.levi).on_cochar * raw.sigma;

    // lambda from x e(lambda) xi_M sigma(x)^-1 = e(lambda') xi_{M_omega}, x the canonical lift of omega
    PinnedAction act = pinned_from_sigma(d, raw.sigma);
    TitsElement x = canonical_rep(d, w);
    TitsElement g = tits_mul(d, torus_element(d, raw.lambda), xi_m_cochain(d, act, raw.levi));
    TitsElement moved = tits_mul(d, tits_mul(d, x, g), tits_inverse(d, sigma_twist(d, x, act, zeros(d.rank))));
    // xi for the conjugated Levi, from the transported lift x n_M x^-1 of its longest element
    TitsElement nm = canonical_rep(d, levi_longest(d, raw.levi));
    TitsElement nm_moved = tits_mul(d, tits_mul(d, x, nm), tits_inverse(d, x));
    TitsElement xi_new = tits_mul(d, tits_inverse(d, nm_moved), canonical_rep(d, longest_element(d)));
    TitsElement rest = tits_mul(d, moved, tits_inverse(d, xi_new));
    if (!rest.w.word.empty()) fail_internal("conjugated parameter has a nontrivial Weyl part");
    out.lambda = reduce_lambda(out.sigma_m, rest.torus);
    try {
      validate(out, true);
    } catch (const Error& e) {
      fail_internal(std::string("normalized Arthur parameter does not validate: ") + e.what());
    }
    if (both) return Normalized{out, w, true};
    fallback = Normalized{out, w, false};
  }
  // no omega makes mu dominant as well
  if (!fallback) fail_internal("no Weyl element makes mu + iota_M dominant");
  return *fallback;
}

LParamData attached_selliptic(const AParamData& a) {
  validate(a, true);
  try {
    return make_lparam(a.dual, a.sigma, a.mu + a.iota_m, a.lambda);
  } catch (const Error& e) {
    fail_internal(std::string("attached s-elliptic parameter does not validate: ") + e.what());
  }
}

Vec mu_levi(const AParamData& a) { return a.mu - (a.dual.rho_coroots() - a.iota_m); }

Regularity regularity_test(const AParamData& a) {
  validate(a, true);
  Vec mm = mu_levi(a);
  Regularity r;
  r.regular = true;
  for (std::size_t j = 0; j < a.dual.nsimple; ++j) {
    Rat v = dot(a.dual.roots[j], mm);
    if (v >= 0) continue;
    r.regular = false;
    if (v != -1) fail_internal("mu_M pairs below -1 with a simple root");
    r.witnesses.push_back(j);
  }
  Vec shifted = a.mu + a.iota_m;
  bool strictly = true;
  for (std::size_t i = 0; i < a.dual.npos; ++i) strictly = strictly && dot(a.dual.roots[i], shifted) != 0;
  if (strictly != r.regular) fail_internal("regularity of mu + iota_M disagrees with dominance of mu_M");
  return r;
}

bool is_elliptic(const AParamData& a) {
  validate(a, false);
  return condition_bullet(a.dual, a.levi, a.sigma_m);
}

}  // namespace realendo
