#pragma once
// Based root data on Z^n with the dot-product pairing between characters and
// cocharacters, their Weyl groups, and Levi subsystems.

#include "realendo/arith.hpp"

#include <string>
#include <vector>

namespace realendo {

struct RootDatum {
  std::size_t rank = 0;  // lattice rank
  std::size_t nsimple = 0;
  std::size_t npos = 0;
  // roots[0..nsimple) are simple, roots[0..npos) positive (by height),
  // roots[npos + k] = -roots[k].
  std::vector<Vec> roots, coroots;
  std::vector<std::vector<Int>> simple_coords;  // root i in terms of simple roots
  std::vector<std::string> factors;             // e.g. {"B2", "A1"}
  std::string isogeny;                          // "sc", "ad" or "explicit"

  std::size_t nroots() const { return roots.size(); }
  bool positive(std::size_t i) const { return i < npos; }
  std::size_t neg(std::size_t i) const { return i < npos ? i + npos : i - npos; }
  int find_root(const Vec& v) const;
  int find_coroot(const Vec& v) const;
  Mat cartan() const;  // C(i,j) = <alpha_i, alpha_j^vee> on simples
  std::string label() const;
  Vec rho_coroots() const;  // half the sum of positive coroots
  Vec rho_roots() const;
};

// Generates the datum from simple roots/coroots (closure under simple reflections).
RootDatum make_datum(std::size_t rank, const std::vector<Vec>& simple_roots,
                     const std::vector<Vec>& simple_coroots);

Mat cartan_matrix(const std::string& type);  // "A2", "B2xA1", ...

struct Isogeny {
  enum class Kind { simply_connected, adjoint, explicit_basis } kind = Kind::simply_connected;
  Mat basis;  // rows: basis of X^* in fundamental-weight coordinates
};
RootDatum build_root_datum(const std::string& type, const Isogeny& iso);
RootDatum dual_datum(const RootDatum& rd);
bool same_datum(const RootDatum& a, const RootDatum& b);

// Subsystem spanned by the given roots (indices into rd.roots) with the induced
// positive system; the resulting datum lists its roots in its own order.
RootDatum subsystem(const RootDatum& rd, const std::vector<std::size_t>& root_indices);
// Dynkin types of the irreducible components, in order of their first simple root.
std::vector<std::string> identify_factors(const RootDatum& rd);

// ---- Weyl group

struct WeylElement {
  std::vector<std::size_t> word;  // simple reflections, leftmost applied last
  Mat on_char, on_cochar;
  std::size_t length() const { return word.size(); }
};

WeylElement weyl_identity(const RootDatum& rd);
WeylElement simple_reflection(const RootDatum& rd, std::size_t j);
WeylElement weyl_mul(const RootDatum& rd, const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const RootDatum& rd, const WeylElement& w);
WeylElement weyl_from_word(const RootDatum& rd, const std::vector<std::size_t>& word);
std::size_t weyl_length(const RootDatum& rd, const WeylElement& w);  // positive roots sent negative
std::size_t act_on_root(const RootDatum& rd, const WeylElement& w, std::size_t i);
std::vector<WeylElement> weyl_elements(const RootDatum& rd);  // shortest words, BFS order
WeylElement longest_element(const RootDatum& rd);

Mat reflection_char(const RootDatum& rd, std::size_t i);
Mat reflection_cochar(const RootDatum& rd, std::size_t i);

enum class Side { character, cocharacter };
struct Dominant {
  Vec v;
  WeylElement w;  // w(input) = v
};
// character vectors pair with coroots, cocharacter vectors with roots
Dominant make_dominant(const RootDatum& rd, const Vec& v, Side side);
bool is_dominant(const RootDatum& rd, const Vec& v, Side side);

// ---- Levi subsets

// Standard Levis have simples < nsimple. A conjugate w M w^-1 keeps the positive
// system induced from rd; its simples are then root indices of its own simple roots.
struct LeviSubset {
  std::vector<std::size_t> simples;
  std::vector<std::size_t> roots;  // all roots of the Levi
};
LeviSubset levi_from_simples(const RootDatum& rd, std::vector<std::size_t> simples);
LeviSubset full_levi(const RootDatum& rd);
std::vector<std::size_t> positive_roots_of(const RootDatum& rd, const LeviSubset& l);
Vec half_sum_coroots(const RootDatum& rd, const LeviSubset& l);
Vec half_sum_roots(const RootDatum& rd, const LeviSubset& l);
bool is_closed_levi(const RootDatum& rd, const LeviSubset& l);
bool is_standard(const RootDatum& rd, const LeviSubset& l);
// w M w^-1; requires w to send the positive roots of M to positive roots.
LeviSubset levi_image(const RootDatum& rd, const LeviSubset& l, const WeylElement& w);
// A cocharacter killed by exactly the roots of l; its stabilizer in W is W_M.
Vec levi_generic_point(const RootDatum& rd, const LeviSubset& l);
std::vector<LeviSubset> standard_levis(const RootDatum& rd);

}  // namespace realendo
