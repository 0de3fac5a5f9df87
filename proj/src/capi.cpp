#include "realendo/realendo.h"

#include "commands.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <optional>

struct re_spec {
  realendo::SpecFile file;
};

namespace {

thread_local std::string last_error;

int fail(int code, const std::string& msg) {
  last_error = msg;
  return code;
}

int code_of(const realendo::Error& e) {
  switch (e.kind) {
    case realendo::Error::Kind::parse: return RE_EPARSE;
    case realendo::Error::Kind::validation: return RE_EVALIDATION;
    default: return RE_EINTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs a command body, storing the rendered document even on a failing status.
template <class F>
int guarded(char** out_json, F&& body) {
  if (!out_json) return fail(RE_EARG, "null output pointer");
  *out_json = nullptr;
  try {
    realendo::commands::Result r = body();
    *out_json = copy_out(r.doc.dump(2) + "\n");
    last_error.clear();
    if (r.status != RE_OK) last_error = "command reported failures";
    return r.status;
  } catch (const realendo::Error& e) {
    return fail(code_of(e), e.what());
  } catch (const std::exception& e) {
    return fail(RE_EINTERNAL, e.what());
  }
}

std::optional<std::string> opt(const char* s) { return s ? std::optional<std::string>(s) : std::nullopt; }

int load(re_spec** out, const std::function<realendo::SpecFile()>& parse) {
  if (!out) return fail(RE_EARG, "null output pointer");
  *out = nullptr;
  try {
    *out = new re_spec{parse()};
    last_error.clear();
    return RE_OK;
  } catch (const realendo::Error& e) {
    return fail(code_of(e), e.what());
  } catch (const std::exception& e) {
    return fail(RE_EINTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* re_last_error(void) { return last_error.c_str(); }

int re_spec_load_file(const char* path, re_spec** out) {
  if (!path) return fail(RE_EARG, "null path");
  return load(out, [&] { return realendo::load_spec(path); });
}

int re_spec_load_string(const char* json_text, re_spec** out) {
  if (!json_text) return fail(RE_EARG, "null spec text");
  return load(out, [&] { return realendo::parse_spec(json_text); });
}

void re_spec_free(re_spec* spec) { delete spec; }

const char* re_spec_name(const re_spec* spec) { return spec ? spec->file.name.c_str() : ""; }

int re_check(const re_spec* spec, const char* param, char** out_json) {
  if (!spec) return fail(RE_EARG, "null spec");
  return guarded(out_json, [&] { return realendo::commands::check(spec->file, opt(param)); });
}

int re_cohomology(const re_spec* spec, char** out_json) {
  if (!spec) return fail(RE_EARG, "null spec");
  return guarded(out_json, [&] { return realendo::commands::cohomology(spec->file); });
}

int re_packet(const re_spec* spec, const char* form, const char* param, const char* s, char** out_json) {
  if (!spec) return fail(RE_EARG, "null spec");
  if (!form || !param) return fail(RE_EARG, "packet needs a form and a parameter");
  return guarded(out_json, [&] {
    std::optional<realendo::Vec> y;
    if (s) y = realendo::parse_vector(s);
    return realendo::commands::packet(spec->file, form, param, y);
  });
}

int re_transfer(const re_spec* spec, const char* form, const char* param, const char* s, char** out_json) {
  if (!spec) return fail(RE_EARG, "null spec");
  if (!param || !s) return fail(RE_EARG, "transfer needs a parameter and s");
  return guarded(out_json, [&] {
    return realendo::commands::transfer(spec->file, opt(form), param, realendo::parse_vector(s));
  });
}

int re_verify(const re_spec* spec, char** out_json) {
  if (!spec) return fail(RE_EARG, "null spec");
  return guarded(out_json, [&] { return realendo::commands::verify(spec->file); });
}

void re_string_free(char* s) { std::free(s); }

}  // extern "C"
