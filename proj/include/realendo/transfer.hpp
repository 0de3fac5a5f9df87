#pragma once
// Endoscopic data attached to a dual-torus invariant s, related pairs of
// parameters, and the spectral transfer factors on packets.
//
// Endoscopic groups are used without a z-extension: H_1 = H and both parameters
// live on the same dual torus with the same elliptic involution.

#include "realendo/packets.hpp"

namespace realendo {

struct EndoscopicDatum {
  DualInvariant s;                   // sigma of the group-side torus, y in X_*(dual torus) (x) Q
  std::vector<std::size_t> h_roots;  // dual roots a with <a, y> integral
  RootDatum h_datum;
  bool elliptic = false;       // (Z_{H dual})^Gamma identity component inside Z_{G dual}
  bool s_in_levi_center = false;
  bool adams_johnson = false;  // H dual contains the Levi M dual
};

// The invariant s = exp(2 pi i y) for the torus of a parameter.
DualInvariant parameter_invariant(const LParamData& p, const Vec& y);
EndoscopicDatum endoscopic_from_s(const DualInvariant& s, const LParamData& p);    // M = c-Levi
EndoscopicDatum endoscopic_from_s(const DualInvariant& s, const AParamData& a);    // M = Levi of a

struct RelatedPair {
  EndoscopicDatum endo;
  LParamData p1;  // on h_datum
  LParamData p;
  T2Cochain shift;
};
// (mu*, lambda*) for chi-data shift iota - iota_H and the given t_xi1.
T2Cochain related_shift(const EndoscopicDatum& e, const LParamData& p, const Vec& t_xi1);
// Same with the first t_xi1 in {0, 1/2}^n satisfying the cocycle relation.
T2Cochain related_shift(const EndoscopicDatum& e, const LParamData& p);
// p1 = (mu - mu*, lambda - lambda*) on H.
RelatedPair make_related(const EndoscopicDatum& e, const LParamData& p);
bool check_related(const RelatedPair& rp);

// value = sign * exp(2 pi i phase), phase in [0, 1)
struct TransferValue {
  int sign = 1;
  Rat phase;
  Rat exponent() const;  // sign folded in as 1/2
};
bool operator==(const TransferValue& a, const TransferValue& b);
std::string to_string(const TransferValue& v);

TransferValue delta_wh(const PacketMember& m, const DualInvariant& s);
TransferValue delta_relative(const PacketMember& m, const PacketMember& m2, const DualInvariant& s);

struct ArthurDelta {
  TransferValue relative;     // epsilon_M(pi) pair_(s)(pi, pi-hat)
  TransferValue absolute_wh;  // relative * Delta_Wh(pi-hat)
  TransferValue direct;       // epsilon_M(pi) <inv(pi), s_T>
};
// Throws an internal error when the two absolute routes disagree.
ArthurDelta delta_arthur(const PacketMember& m, const PacketMember& mhat, const DualInvariant& s);

// A central element exp(Y) exp(2 pi i lambda_vee) with Y = y_re + 2 pi i y_im;
// all vectors in X_*(T) (x) Q of the group side.
struct CentralDatum {
  Vec y_re, y_im, lambda_vee;
};
struct CentralValue {
  Rat log_modulus;  // <mu, y_re>
  Rat phase;        // mod 1
};
bool operator==(const CentralValue& a, const CentralValue& b);
void validate_central(const LParamData& p, const CentralDatum& z);
CentralValue central_character(const LParamData& p, const CentralDatum& z);
// Compares the quotient of central characters on (z1, z) with its (mu*, lambda*) form.
bool central_char_identity(const RelatedPair& rp, const CentralDatum& z1, const CentralDatum& z);

}  // namespace realendo
