#pragma once
// s-elliptic Langlands parameters phi(mu, lambda), stored on the dual side:
// mu, lambda are rational cocharacters of the dual torus, sigma the elliptic
// involution on those cocharacters.

#include "realendo/cohomology.hpp"
#include "realendo/tits.hpp"

namespace realendo {

struct LParamData {
  RootDatum dual;  // G^vee (or a Levi of it, same ambient lattice)
  Mat sigma;       // on X_*(dual torus); -1 on every root
  Vec mu, lambda;  // lambda kept in canonical form mod K
};

enum class ParamClass { elliptic, s_elliptic_singular, totally_degenerate };
std::string to_string(ParamClass c);

// K = X + (-1 eigenspace): canonical representative of lambda.
Vec reduce_lambda(const Mat& sigma, const Vec& lambda);
bool same_mod_k(const Mat& sigma, const Vec& a, const Vec& b);

// Builds and validates; throws a validation Error naming the residue on failure.
LParamData make_lparam(const RootDatum& dual, const Mat& sigma, const Vec& mu, const Vec& lambda);
// 1/2(mu - s mu) - iota - (lambda + s lambda); integral iff the congruence holds
Vec congruence_residue(const LParamData& p);
void validate(const LParamData& p);
ParamClass classify(const LParamData& p);

struct CLevi {
  LeviSubset levi;
  Mat sigma_m;  // w0_M * sigma_T
};
CLevi c_levi(const LParamData& p);
// Some w in W(M) with w * sigma_m = -1 on all roots (finite search).
bool condition_bullet(const RootDatum& dual, const LeviSubset& levi, const Mat& sigma_m);

LParamData factor_through_levi(const LParamData& p);
LParamData translate(const LParamData& p, const Vec& mu0);

struct CentralizerReport {
  std::vector<Vec> s_phi_invariants;  // representatives generating (Z_M)^G / (Z_G)^G
  Int s_bar_order = 0;
  Int s_bar_m_order = 0;
  Int quotient_order = 0;
  Int companion_e_order = 0;  // |E(T-bar)| on the companion torus
  bool sequence_exact = false;  // s_bar_order == quotient_order * s_bar_m_order
};
CentralizerReport centralizer_report(const LParamData& p);

// theta mu = mu + mu_a and theta lambda = lambda + lambda_a mod K_f.
bool twist_stable(const LParamData& p, const Mat& theta, const Vec& mu_a, const Vec& lambda_a);

struct CompanionLevi {
  std::vector<std::size_t> cascade;  // strongly orthogonal roots used for the Cayley steps
  Mat sigma_bar;                     // involution on X_* of the dual torus after the steps
  std::vector<std::size_t> roots;    // roots negated by sigma_bar
  LeviSubset standard;               // W-conjugate standard Levi
  WeylElement conj;                  // conj carries `roots` onto `standard.roots`
};
CompanionLevi companion_standard_levi(const LParamData& p);

}  // namespace realendo
