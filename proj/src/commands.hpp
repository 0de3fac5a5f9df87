#pragma once
// Command documents behind the C interface. Each returns a status (RE_* code)
// together with the JSON document; thrown Errors are mapped by the caller.

#include "render.hpp"
#include "realendo/specfile.hpp"

#include <optional>

namespace realendo::commands {

struct Result {
  int status = 0;
  render::J doc;
};

render::J header(const SpecFile& f, const char* command);

Result check(const SpecFile& f, const std::optional<std::string>& param);
Result cohomology(const SpecFile& f);
Result packet(const SpecFile& f, const std::string& form, const std::string& param, const std::optional<Vec>& s);
Result transfer(const SpecFile& f, const std::optional<std::string>& form, const std::string& param, const Vec& s);
Result verify(const SpecFile& f);

}  // namespace realendo::commands
