#pragma once
// JSON rendering of exact values for the C interface. Rationals are "p/q"
// strings; pairing values are "k/n mod 1" with the root of unity zeta_n^k.

#include "json.hpp"
#include "realendo/transfer.hpp"

namespace realendo::render {

using J = nlohmann::ordered_json;

inline J rat(const Rat& r) { return to_string(r); }

inline J vec(const Vec& v) {
  J a = J::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline J mat(const Mat& m) {
  J a = J::array();
  for (std::size_t i = 0; i < m.rows; ++i) a.push_back(vec(m.row(i)));
  return a;
}

inline J ints(const std::vector<std::size_t>& v) {
  J a = J::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline J big(const Int& n) { return n.str(); }

inline J int_list(const std::vector<Int>& v) {
  J a = J::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline std::string zeta(const Rat& e) {
  Rat f = frac(e);
  return "ζ_" + den(f).str() + "^" + num(f).str();
}

inline J exponent(const Rat& e) {
  Rat f = frac(e);
  J o;
  o["exponent"] = to_string(f) + " mod 1";
  o["root_of_unity"] = zeta(f);
  if (f == 0) o["value"] = "+1";
  else if (f == Rat(1, 2)) o["value"] = "-1";
  else o["value"] = zeta(f);
  return o;
}

inline J value(const TransferValue& v) {
  J o = exponent(v.exponent());
  o["sign"] = v.sign;
  o["phase"] = to_string(v.phase) + " mod 1";
  return o;
}

}  // namespace realendo::render
