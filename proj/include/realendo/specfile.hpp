#pragma once
// JSON group specification files: a root datum, its elliptic inner class, named
// forms, named parameters and named dual invariants s.
//
// {
//   "name": "SL2",
//   "cartan_type": "A1",
//   "isogeny": "sc" | "ad" | [["1", "0"], ...],   rows of X^* in fundamental weights
//   "inner_class": [0],                           permutation of simple indices
//   "forms": [{"name": "split", "twist": ["0"], "lattice": "given" | "sc" | "ad"}],
//   "parameters": [{"name": "ds", "kind": "L" | "Arthur", "levi": [], "mu": ["1"], "lambda": ["0"]}],
//   "invariants": [{"name": "torus", "s": ["1/2"]}]
// }
//
// Parameters and invariants are written in cocharacters of the dual torus, i.e.
// in the coordinates of X^* of the group.

#include "realendo/transfer.hpp"

namespace realendo {

struct SpecForm {
  std::string name;
  Vec twist;  // cocharacter coordinates of the group side
};

struct SpecParam {
  enum class Kind { L, Arthur };
  std::string name;
  Kind kind = Kind::L;
  std::vector<std::size_t> levi;  // simple indices (Arthur only)
  Vec mu, lambda;
};

struct SpecInvariant {
  std::string name;
  Vec y;
};

struct SpecFile {
  std::string name, cartan_type, isogeny;
  std::vector<std::size_t> inner_class;
  RootDatum group, dual;
  Mat sigma;  // elliptic involution on X_*(dual torus)
  std::vector<SpecForm> forms;
  std::vector<SpecParam> params;
  std::vector<SpecInvariant> invariants;
};

SpecFile parse_spec(const std::string& json_text);
SpecFile load_spec(const std::string& path);

const SpecForm& find_form(const SpecFile& f, const std::string& name);
const SpecParam& find_param(const SpecFile& f, const std::string& name);
LParamData build_lparam(const SpecFile& f, const SpecParam& p);
AParamData build_aparam(const SpecFile& f, const SpecParam& p);  // as written, not normalized
InnerFormSpec to_form(const SpecForm& f);

// "[1/2, 0]", "1/2,0" or "1/2 0"
Vec parse_vector(const std::string& text);

}  // namespace realendo
