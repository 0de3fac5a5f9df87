#pragma once
// Tate cohomology H^1(Gamma, T) = ker(1+sigma) / (1-sigma)X_* of real tori, maps
// between such groups, centers, the torus U(T,T) and the Tate-Nakayama pairing.

#include "realendo/realform.hpp"

namespace realendo {

// Involution sigma (ambient coordinates) acting on a lattice given by a basis.
struct CohomologyGroup {
  Mat sigma;
  Mat lattice;  // basis columns of X_*
  FiniteQuotient q;
  Int order() const { return q.order(); }
  bool is_cocycle(const Vec& v) const;
  bool same_class(const Vec& a, const Vec& b) const { return q.equal(a, b); }
  bool is_trivial(const Vec& v) const { return q.is_zero(v); }
  std::vector<Vec> generators() const;
  std::vector<Vec> elements() const;  // canonical representatives
};

CohomologyGroup tate_h1(const Mat& sigma);  // lattice Z^n
CohomologyGroup tate_h1(const Mat& sigma, const Mat& lattice);
inline CohomologyGroup tate_h1(const RealTorus& t) { return tate_h1(t.sigma); }

// Order of the image of H^1(source) under the lattice map f (columns: images of the
// source lattice basis, in target ambient coordinates).
std::vector<Vec> push_classes(const Mat& f, const std::vector<Vec>& classes);
Int image_order(const CohomologyGroup& target, const Mat& f, const CohomologyGroup& source);
void check_equivariant(const Mat& f, const Mat& sigma_src, const Mat& sigma_tgt);

// X_*(T_sc) inside X_*(T): the coroot lattice.
Mat coroot_lattice(const RootDatum& rd);
Mat coroot_lattice(const RootDatum& rd, const std::vector<std::size_t>& roots);
// E(T): image of H^1(T_sc) in H^1(T), as a list of generators in H^1(T).
std::vector<Vec> sc_image_generators(const RealTorus& t);
std::vector<Vec> levi_sc_image_generators(const RealTorus& t, const std::vector<std::size_t>& levi_roots);

// Image of H^1(Z) in H^1(T) where Z is the subgroup of T killed by the given
// characters (e.g. simple roots of a Levi: Z = its center); returns a lattice
// of cocycles in ker(1+sigma) containing (1-sigma)X.
Mat center_image_lattice(const Mat& sigma, const std::vector<Vec>& characters);

// Finite center Z = Lambda / X computed intrinsically:
// H^1(Z) = {y in Lambda : (1-sigma)y in X} / ((1+sigma)Lambda + X).
struct CenterH1 {
  Mat sigma;
  Mat coweights;  // Lambda
  FiniteQuotient q;
  Int order() const { return q.order(); }
};
CenterH1 center_h1(const Mat& sigma, const Mat& lambda);
CenterH1 center_h1(const RealTorus& t);  // Z = center of the ambient group (semisimple)
Vec center_to_torus(const CenterH1& z, const Vec& y);  // y -> (1-sigma)y
// |Image[H^1(Z_sc) -> H^1(Z)]| where Z_sc = Lambda / (coroot lattice)
Int sc_center_image_order(const RealTorus& t);
bool center_map_injective(const RealTorus& t);

// Dual-torus element s = exp(2 pi i y), y in X^* (x) Q, sigma^T y = y mod X^*.
struct DualInvariant {
  Mat sigma;  // of the torus (on cocharacters)
  Vec y;      // normalized to [0,1)^n
};
DualInvariant make_dual_invariant(const Mat& sigma, const Vec& y);
bool same_dual_invariant(const DualInvariant& a, const DualInvariant& b);

Rat tn_pairing(const Vec& cls, const Vec& y);  // <y, cls> mod 1, in [0,1)
Rat tn_pairing(const CohomologyGroup& g, const Vec& cls, const DualInvariant& s);

// U = T x T / {(z^-1, z) : z in Z}: lattice X x X + {(-y, y) : y in Lambda}, sigma (+) sigma.
struct UTorus {
  std::size_t n = 0;
  Mat sigma;    // 2n x 2n
  Mat lattice;  // basis of X_*(U)
  CohomologyGroup h1;
};
UTorus u_torus(const Mat& sigma, const Mat& x_lattice, const Mat& center_lambda);
Vec u_pair_vector(const Vec& a, const Vec& b);  // (a, b) in the 2n coordinates
Vec u_dual_vector(const Vec& y);                // s_U = (y, y)

}  // namespace realendo
