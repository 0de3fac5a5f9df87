#include "doctest.h"
#include "json.hpp"
#include "realendo/realendo.h"

#include <string>

namespace {

const char* sl2_spec = R"({
  "name": "SL2",
  "cartan_type": "A1",
  "isogeny": "sc",
  "inner_class": [0],
  "forms": [{"name": "split", "twist": ["0"]}],
  "parameters": [
    {"name": "ds", "kind": "L", "mu": ["1"], "lambda": ["0"]},
    {"name": "bad", "kind": "L", "mu": ["1/2"], "lambda": ["0"]}
  ]
})";

nlohmann::json take(char* out) {
  REQUIRE(out != nullptr);
  auto j = nlohmann::json::parse(out);
  re_string_free(out);
  return j;
}

}  // namespace

TEST_CASE("C interface: loading and error codes") {
  re_spec* h = nullptr;
  CHECK(re_spec_load_string("{not json", &h) == RE_EPARSE);
  CHECK(h == nullptr);
  CHECK(std::string(re_last_error()).find("JSON") != std::string::npos);
  CHECK(re_spec_load_string(R"({"name": "x", "cartan_type": "A1", "isogeny": "sc", "inner_class": [0, 0]})", &h) ==
        RE_EVALIDATION);
  CHECK(re_spec_load_string(nullptr, &h) == RE_EARG);
  CHECK(re_spec_load_string(sl2_spec, nullptr) == RE_EARG);
  CHECK(re_spec_load_file("/nonexistent/spec.json", &h) == RE_EPARSE);

  REQUIRE(re_spec_load_string(sl2_spec, &h) == RE_OK);
  CHECK(std::string(re_spec_name(h)) == "SL2");
  char* out = nullptr;
  CHECK(re_check(nullptr, nullptr, &out) == RE_EARG);
  CHECK(re_check(h, "ds", nullptr) == RE_EARG);

  // an invalid parameter still produces the document
  CHECK(re_check(h, nullptr, &out) == RE_EVALIDATION);
  auto doc = take(out);
  CHECK(doc["parameters"][0]["valid"] == true);
  CHECK(doc["parameters"][1]["valid"] == false);
  CHECK(re_check(h, "ds", &out) == RE_OK);
  take(out);

  CHECK(re_packet(h, "split", "nope", nullptr, &out) == RE_EVALIDATION);
  CHECK(out == nullptr);
  CHECK(re_packet(h, "split", "ds", "[1/2", &out) == RE_EPARSE);
  CHECK(re_packet(h, nullptr, "ds", nullptr, &out) == RE_EARG);
  re_spec_free(h);
}

TEST_CASE("C interface: packet and transfer documents") {
  re_spec* h = nullptr;
  REQUIRE(re_spec_load_string(sl2_spec, &h) == RE_OK);
  char* out = nullptr;
  REQUIRE(re_packet(h, "split", "ds", "[1/2]", &out) == RE_OK);
  auto doc = take(out);
  REQUIRE(doc["members"].size() == 2);
  CHECK(doc["members"][0]["delta"]["value"] == "+1");
  CHECK(doc["members"][1]["delta"]["value"] == "-1");

  REQUIRE(re_transfer(h, nullptr, "ds", "[1/2]", &out) == RE_OK);
  doc = take(out);
  CHECK(doc["endoscopic"]["h_type"] == "torus");
  CHECK(doc["related_pair"]["related"] == true);

  REQUIRE(re_cohomology(h, &out) == RE_OK);
  doc = take(out);
  CHECK(doc["torus"]["h1_order"] == "2");

  REQUIRE(re_verify(h, &out) == RE_OK);
  CHECK(take(out)["passed"] == true);
  re_spec_free(h);
}
