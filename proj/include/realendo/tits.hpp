#pragma once
// Tits extension of the Weyl group: elements t * n_w with t a torus element
// exp(2 pi i t) (t rational mod the cocharacter lattice) and n_w the canonical
// lift along reduced words, n_s^2 = alpha_s^vee(-1).

#include "realendo/rootdata.hpp"

namespace realendo {

struct TitsElement {
  Vec torus;  // reduced to [0,1)^n
  WeylElement w;
};

TitsElement tits_identity(const RootDatum& rd);
TitsElement torus_element(const RootDatum& rd, const Vec& t);
TitsElement canonical_rep(const RootDatum& rd, const WeylElement& w);
TitsElement tits_mul(const RootDatum& rd, const TitsElement& a, const TitsElement& b);
TitsElement tits_inverse(const RootDatum& rd, const TitsElement& a);
// product n_{s_1} ... n_{s_k} of simple lifts along an arbitrary word
TitsElement word_product(const RootDatum& rd, const std::vector<std::size_t>& word);
bool tits_equal(const TitsElement& a, const TitsElement& b);
std::vector<std::vector<std::size_t>> reduced_words(const RootDatum& rd, const WeylElement& w);

// Automorphism of the based datum preserving the pinning: lattice matrix on
// cocharacters plus the induced permutation of simple indices.
struct PinnedAction {
  Mat on_cochar;
  std::vector<std::size_t> perm;
};
PinnedAction pinned_action(const RootDatum& rd, const std::vector<std::size_t>& perm);
// shift * sigma(n): torus part through the matrix, Weyl letters through the permutation
TitsElement sigma_twist(const RootDatum& rd, const TitsElement& n, const PinnedAction& act, const Vec& shift);

// Weyl element w0 of a Levi (reduced word in Levi simples) inside W(rd).
WeylElement levi_longest(const RootDatum& rd, const LeviSubset& levi);

struct LeviLiftReport {
  bool ok = false;
  Vec n_sigma_n, nm_sigma_nm, ratio;  // torus parts
  Vec iota, iota_m;
};
// rd is the dual datum, act the pinned L-action, sigma_t = w0 * act on cocharacters.
LeviLiftReport verify_levi_lift_ratio(const RootDatum& rd, const PinnedAction& act, const LeviSubset& levi);
bool is_sigma_stable(const RootDatum& rd, const Mat& sigma, const LeviSubset& levi);
Mat sigma_t_of(const RootDatum& rd, const PinnedAction& act);  // w0 * act
Mat sigma_levi(const RootDatum& rd, const PinnedAction& act, const LeviSubset& levi);  // w0_M * sigma_T

TitsElement xi_m_cochain(const RootDatum& rd, const PinnedAction& act, const LeviSubset& levi);
TitsElement xi_square(const RootDatum& rd, const PinnedAction& act, const TitsElement& xi);

struct T2Cochain {
  Vec mu_star, lambda_star;
  Vec lift_torus;  // torus part of t_xi1^-1 n_H n_G^-1 before reduction
};
// h_roots: indices of rd.roots in the endoscopic subsystem. chi_shift is the
// half-sum delta supplied by the caller; t_xi1 the torus part of t_xi1(w_sigma).
T2Cochain t2_cochain(const RootDatum& rd, const Mat& sigma2,
                     const std::vector<std::size_t>& h_roots, const Vec& chi_shift, const Vec& t_xi1);
// The cocycle relation 1/2(mu* - s mu*) - (iota - iota_H) = lambda* + s lambda* mod X.
bool t2_cocycle_holds(const RootDatum& rd, const Mat& sigma2, const std::vector<std::size_t>& h_roots,
                      const T2Cochain& c);

}  // namespace realendo
