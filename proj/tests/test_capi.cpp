#include <string>

#include "doctest.h"
#include "json.hpp"
#include "veronese.h"

namespace {

struct Ctx {
  vrn_ctx* p = nullptr;
  ~Ctx() { vrn_ctx_destroy(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { vrn_string_free(s); }
};

}  // namespace

TEST_CASE("context lifecycle and errors") {
  Ctx c;
  CHECK(vrn_ctx_create(4, nullptr, &c.p) == VRN_OK);
  CHECK(vrn_ctx_q(c.p) == 4);
  vrn_ctx* bad = nullptr;
  CHECK(vrn_ctx_create(3, nullptr, &bad) == VRN_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(vrn_ctx_create(4, "10110", &bad) == VRN_ERR_INVALID_ARGUMENT);  // reducible
  CHECK(vrn_ctx_create(4, "1011", &bad) == VRN_ERR_INVALID_ARGUMENT);   // wrong degree
  Ctx c2;
  CHECK(vrn_ctx_create(8, "1011", &c2.p) == VRN_OK);  // t^3 + t + 1
}

TEST_CASE("classify the Table-1 Sigma10 representative at q = 4") {
  Ctx c;
  REQUIRE(vrn_ctx_create(4, nullptr, &c.p) == VRN_OK);
  Str out;
  // pencil [[x,y,.],[y,z,.],[.,.,z]]
  CHECK(vrn_classify_plane(c.p, "x,y,.; y,z,.; .,.,z", 2, &out.s) == VRN_OK);
  auto j = nlohmann::json::parse(out.s);
  CHECK(j.at("label") == "Sigma10");
  CHECK(j.at("point_od") == nlohmann::json({1, 1, 7, 12}));
  // same plane through the generator matrix input
  Str out2;
  CHECK(vrn_classify_plane(c.p, "1 0 0 0 0 0  0 1 0 0 0 0  0 0 0 1 0 1", 0, &out2.s) ==
        VRN_OK);
  auto j2 = nlohmann::json::parse(out2.s);
  CHECK(j2.at("label") == "Sigma10");
}

TEST_CASE("out-of-scope and parse errors map to statuses") {
  Ctx c;
  REQUIRE(vrn_ctx_create(4, nullptr, &c.p) == VRN_OK);
  Str out;
  // the nucleus plane misses the surface
  CHECK(vrn_classify_plane(c.p, "0 1 0 0 0 0  0 0 1 0 0 0  0 0 0 0 1 0", 0, &out.s) ==
        VRN_ERR_OUT_OF_SCOPE);
  CHECK(std::string(vrn_last_error(c.p)).find("rank-1") != std::string::npos);
  Str out2;
  CHECK(vrn_classify_plane(c.p, "garbage", 0, &out2.s) == VRN_ERR_PARSE);
  Str out3;
  CHECK(vrn_classify_plane(c.p, "x,y,.; z,z,.; .,.,.", 2, &out3.s) == VRN_ERR_PARSE);
  Str out4;
  CHECK(vrn_representative(c.p, "Sigma99", &out4.s) == VRN_ERR_INVALID_ARGUMENT);
  Str out5;
  CHECK(vrn_verify(c.p, "bogus-check", 0, &out5.s) == VRN_ERR_PARSE);
}

TEST_CASE("representatives round-trip through the C API") {
  Ctx c;
  REQUIRE(vrn_ctx_create(8, nullptr, &c.p) == VRN_OK);
  for (const char* label : {"Sigma2", "Sigma12", "Sigma14"}) {
    Str out;
    REQUIRE(vrn_representative(c.p, label, &out.s) == VRN_OK);
    auto j = nlohmann::json::parse(out.s);
    CHECK(j.at("label") == label);
  }
  Str bad;
  CHECK(vrn_representative(c.p, "Sigma14p", &bad.s) == VRN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("census via the C API: q = 2 under both groups") {
  Ctx c;
  REQUIRE(vrn_ctx_create(2, nullptr, &c.p) == VRN_OK);
  Str out;
  REQUIRE(vrn_census(c.p, "pgl3", 1, 1, 0, &out.s) == VRN_OK);
  auto j = nlohmann::json::parse(out.s);
  CHECK(j.at("labels").size() == 15);
  CHECK(j.at("total_planes") == 805);
  Str out7;
  REQUIRE(vrn_census(c.p, "sym7", 1, 1, 0, &out7.s) == VRN_OK);
  auto j7 = nlohmann::json::parse(out7.s);
  CHECK(j7.at("labels").size() == 5);
  CHECK(j7.at("total_planes") == 805);
}

TEST_CASE("census JSON body is byte-identical across shard counts") {
  Ctx c;
  REQUIRE(vrn_ctx_create(4, nullptr, &c.p) == VRN_OK);
  Str a, b;
  REQUIRE(vrn_census(c.p, "pgl3", 1, 1, 0, &a.s) == VRN_OK);
  REQUIRE(vrn_census(c.p, "pgl3", 1, 8, 0, &b.s) == VRN_OK);
  auto ja = nlohmann::json::parse(a.s);
  auto jb = nlohmann::json::parse(b.s);
  ja.erase("runtime_seconds");
  jb.erase("runtime_seconds");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("verify through the C API") {
  Ctx c;
  REQUIRE(vrn_ctx_create(4, nullptr, &c.p) == VRN_OK);
  Str out;
  REQUIRE(vrn_verify(c.p, "table1", 0, &out.s) == VRN_OK);
  auto j = nlohmann::json::parse(out.s);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("checks").size() == 15);
  Str out2;
  REQUIRE(vrn_verify(c.p, "sigma6-hyperplanes", 0, &out2.s) == VRN_OK);
  CHECK(nlohmann::json::parse(out2.s).at("all_pass") == true);
}
