#pragma once
// Real tori (involutions on the cocharacter lattice), fundamental involutions,
// gradings of imaginary roots and the signs built from them.

#include "realendo/rootdata.hpp"

namespace realendo {

struct RealTorus {
  RootDatum rd;
  Mat sigma;  // on cocharacters, sigma^2 = 1
  Mat sigma_char() const { return transpose(sigma); }
};

RealTorus make_torus(const RootDatum& rd, const Mat& sigma);  // validates
bool is_fundamental(const RealTorus& t);
bool same_torus(const RealTorus& a, const RealTorus& b);
// The same torus seen from the dual datum: X^* becomes the cocharacter lattice.
RealTorus dual_torus(const RealTorus& t);

// Lattice map of the simple-index permutation on cocharacters.
Mat diagram_matrix(const RootDatum& rd, const std::vector<std::size_t>& perm);
RealTorus fundamental_involution(const RootDatum& rd, const std::vector<std::size_t>& perm);

std::vector<std::size_t> imaginary_roots(const RealTorus& t);  // indices of all roots with sigma alpha = -alpha
std::vector<std::size_t> imaginary_simples(const RealTorus& t);

// Where a twist vector is written: coordinates in simple coroots (sc), in the
// datum's own cocharacter lattice (given), or in fundamental coweights (ad).
enum class TwistLattice { sc, given, ad };
Vec twist_to_cochar(const RootDatum& rd, const Vec& u, TwistLattice ctx);

struct Grading {
  RealTorus torus;
  std::vector<int> base;  // per simple root: 1 noncompact, 0 compact, -1 not imaginary
  Vec twist;              // accumulated 2-torsion twist, in cocharacter coordinates
};

Grading whittaker_grading(const RealTorus& t);
Grading twist_grading(const Grading& g, const Vec& u, TwistLattice ctx);
Grading twist_grading_cochar(const Grading& g, const Vec& u_cochar);
// Imaginary roots in the span of imaginary simples; 1 noncompact, 0 compact.
bool is_graded_imaginary(const Grading& g, std::size_t root);
int grade(const Grading& g, std::size_t root);
std::size_t q_invariant(const Grading& g);
int epsilon_sign(const Grading& g, const Grading& ref);
bool same_grading(const Grading& a, const Grading& b);  // equal on every graded root

RealTorus cayley_transform(const Grading& g, std::size_t root);

// theta acts on cocharacters; true iff it permutes the simple coroots and commutes with sigma.
bool check_twist_admissible(const RealTorus& t, const Mat& theta);

}  // namespace realendo
