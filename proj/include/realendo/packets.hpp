#pragma once
// Packets of an elliptic parameter across inner forms, at the level of Galois
// cohomology of the fundamental torus T of the group side.
//
// A form (and each member) is recorded by a twist x in X_*(T) (x) Q with
// u(sigma) = exp(2 pi i x) in T_sc; 2x pairs integrally with every root. The
// form is of quasi-split type when (1 - sigma)x = 2x lies in X_*(T_sc), and then
// 2x is the Tate representative of the class of u(sigma).

#include "realendo/aparam.hpp"

#include <variant>

namespace realendo {

// Group side of an elliptic setup: X_*(T) = X^*(dual torus), sigma_T = sigma^T.
// Only semisimple groups are handled.
struct GroupSide {
  RealTorus torus;
  Grading whittaker;
  Mat sc_lattice;                       // X_*(T_sc): the coroot lattice
  Mat center_lattice;                   // coweights: Z = center_lattice / X_*(T)
  CohomologyGroup h1;                   // H^1(Gamma, T)
  std::vector<std::size_t> from_dual;   // dual root index -> group root index
};
GroupSide group_side(const RootDatum& dual, const Mat& sigma);

struct InnerFormSpec {
  std::string name;
  Vec u_eta;  // twist in cocharacter coordinates of the group side
};
InnerFormSpec quasi_split_form(const GroupSide& g);
void validate_form(const GroupSide& g, const InnerFormSpec& f);
bool is_quasi_split_type(const GroupSide& g, const InnerFormSpec& f);

struct PacketMember {
  std::variant<LParamData, AParamData> param;
  Vec twist;         // x_pi, canonical mod X_*(T_sc)
  Vec cls;           // 2 x_pi, the class of u_pi(sigma) (quasi-split type only)
  bool nonzero = true;
  bool has_inv = false;
  Vec inv;           // canonical in H^1(T), or in E(T)/E_M(T) for Arthur packets
  int epsilon_m = 1; // Arthur packets only
};

// All G-classes of fundamental splittings over the form (orbit of the strong form
// under W), with the nonzero flag of the limit character data. Diagnostic mode.
std::vector<PacketMember> splitting_classes(const LParamData& p, const InnerFormSpec& f);

// Nonzero members: the coset base * Image[H^1(Z_{M(sc)}) -> H^1(T)] cut down to the
// splitting classes over the form; empty when the parameter is irrelevant for it.
// Needs a form of quasi-split type unless the packet is empty.
std::vector<PacketMember> enumerate_l_packet(const LParamData& p, const InnerFormSpec& f);
// Nonzero members for any form; no absolute invariant.
std::vector<PacketMember> enumerate_relative(const LParamData& p, const InnerFormSpec& f);

// Class in H^1(U) of the image of (u_pi^-1, u_pi') from U_sc; both members must
// share the coboundary of their cochains.
Vec inv_relative(const GroupSide& g, const PacketMember& m, const PacketMember& m2);
// Quasi-split type: the image of (inv(pi)^-1, inv(pi')).
Vec inv_relative_from_absolute(const GroupSide& g, const PacketMember& m, const PacketMember& m2);
UTorus group_u_torus(const GroupSide& g);

// Members are the cosets of E_M(T) in E(T) met by the form's splitting classes.
std::vector<PacketMember> enumerate_arthur_packet(const AParamData& a, const InnerFormSpec& f);
// (-1)^(q_M(twisted grading) - q_M(Whittaker grading)), q_M counting noncompact positive Levi roots.
int levi_epsilon(const GroupSide& g, const std::vector<std::size_t>& levi_dual_roots, const Vec& twist);
FiniteQuotient arthur_invariant_group(const GroupSide& g, const std::vector<std::size_t>& levi_dual_roots);

// E(T) and the Levi's E_M(T) as lattices of cocycles containing (1 - sigma)X_*(T).
Mat e_lattice(const GroupSide& g);
Mat e_levi_lattice(const GroupSide& g, const std::vector<std::size_t>& levi_dual_roots);

}  // namespace realendo
