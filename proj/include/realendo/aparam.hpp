#pragma once
// Elliptic u-regular Arthur parameters psi = (phi[mu, lambda], rho(iota_M)).
// rho is carried only through iota_M.

#include "realendo/lparam.hpp"

namespace realendo {

struct AParamData {
  RootDatum dual;
  LeviSubset levi;  // standard Levi M^vee
  Mat sigma;        // sigma_T, -1 on every root
  Mat sigma_m;      // w0_M * sigma_T
  Vec mu, lambda;   // lambda kept canonical mod K_M
  Vec iota_m;       // half-sum of positive Levi coroots
};

// Checks shapes, the Levi integrality and congruence conditions; dominance is not required.
AParamData make_aparam(const RootDatum& dual, const Mat& sigma, const std::vector<std::size_t>& levi_simples,
                       const Vec& mu, const Vec& lambda);
// Integral iff the congruence holds: with sigma_M, and the rewritten form with sigma_T.
Vec congruence_residue_m(const AParamData& a);
Vec congruence_residue_t(const AParamData& a);
bool is_normalized(const AParamData& a);  // mu and mu + iota_M dominant
void validate(const AParamData& a, bool require_dominant);  // the flag asks for mu + iota_M dominant

// omega(mu + iota_M) is dominant; the conjugated Levi keeps the induced positive
// system and may be non-standard. mu_dominant is false when no such omega also
// makes mu dominant (this happens, e.g. for G2).
struct Normalized {
  AParamData param;
  WeylElement omega;
  bool mu_dominant = false;
};
Normalized normalize(const AParamData& raw);

LParamData attached_selliptic(const AParamData& a);

Vec mu_levi(const AParamData& a);  // mu - (iota - iota_M)
struct Regularity {
  bool regular = false;
  std::vector<std::size_t> witnesses;  // simples with <mu_M, alpha> = -1
};
Regularity regularity_test(const AParamData& a);

bool is_elliptic(const AParamData& a);

}  // namespace realendo
