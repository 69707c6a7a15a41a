#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "aqg/io.hpp"
#include "aqg/pipeline.hpp"

using namespace aqg;

TEST_SUITE_BEGIN("io");

namespace {
constexpr double tol = kDefaultTol;
}

TEST_CASE("serialize/parse round trip is byte-identical") {
  for (const auto& name : bundled_example_names()) {
    CAPTURE(name);
    auto ex = make_bundled_example(name);
    const std::string once = serialize_definition(ex, name);
    auto parsed = parse_definition(once);
    const std::string twice = serialize_definition(parsed, name);
    CHECK(once == twice);
    CHECK(parsed.algebra.dim() == ex.algebra.dim());
    CHECK(max_norm(Matrix(parsed.comult - ex.comult)) == 0.0);
  }
}

TEST_CASE("generated z2 file loads with dimension 2") {
  auto ex = make_bundled_example("group_z2");
  const std::string path = "test_group_z2.aqg.json";
  write_definition(path, ex, "group_z2");
  auto loaded = load_definition(path, tol);
  CHECK(loaded.algebra.dim() == 2);
  std::remove(path.c_str());
}

TEST_CASE("kac-paljutkin file loads with dimension 8") {
  auto ex = make_bundled_example("kac_paljutkin");
  const std::string path = "test_kp.aqg.json";
  write_definition(path, ex, "kac_paljutkin");
  auto loaded = load_definition(path, tol);
  CHECK(loaded.algebra.dim() == 8);
  std::remove(path.c_str());
}

TEST_CASE("schema violations are reported") {
  CHECK_THROWS_AS(parse_definition("not json at all"), AqgError);

  auto ex = make_bundled_example("group_z2");
  std::string text = serialize_definition(ex, "group_z2");
  // push an index out of range
  auto pos = text.find("\"k\": 0");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  broken.replace(pos, 6, "\"k\": 9");
  try {
    parse_definition(broken);
    CHECK(false);
  } catch (const AqgError& e) {
    CHECK(e.code() == ErrorCode::schema_error);
  }

  // missing field
  auto pos2 = text.find("\"comult\"");
  std::string missing = text.substr(0, pos2 - 3) + "\n}\n";
  CHECK_THROWS_AS(parse_definition(missing), AqgError);
}

TEST_CASE("corrupted structure constants fail the axiom precheck") {
  auto ex = make_bundled_example("group_z2");
  std::string text = serialize_definition(ex, "group_z2");
  // flip a structure constant: e g = e instead of g breaks the unit axiom
  auto pos = text.find("\"k\": 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"k\": 0");
  const std::string path = "test_corrupt.aqg.json";
  {
    std::ofstream f(path);
    f << text;
  }
  try {
    load_definition(path, tol);
    CHECK(false);
  } catch (const AqgError& e) {
    CHECK(e.code() == ErrorCode::axiom_rejected);
  }
  std::remove(path.c_str());
}

TEST_CASE("machine reports are deterministic") {
  auto ex = make_bundled_example("sweedler");
  PipelineOptions opt;
  auto r1 = full_report(ex, opt);
  auto r2 = full_report(ex, opt);
  CHECK(r1.to_json("sweedler") == r2.to_json("sweedler"));
}

TEST_CASE("full report passes on further group shapes") {
  // odd order, and a noncommutative-cocommutative group algebra
  for (const auto& [kind, group] :
       {std::pair<const char*, const char*>{"group_algebra", "z5"},
        {"group_algebra", "d4"},
        {"function_algebra", "d4"}}) {
    CAPTURE(kind);
    CAPTURE(group);
    auto ex = make_example(kind, group);
    PipelineOptions opt;
    auto report = full_report(ex, opt);
    CHECK(report.all_passed());
    CHECK(report.max_residual() < 1e-9);
  }
}

TEST_CASE("full report covers the manifest for positive inputs") {
  auto ex = make_bundled_example("group_z2");
  PipelineOptions opt;
  auto report = full_report(ex, opt);
  CHECK(report.all_passed());
  for (const auto& row : identity_manifest()) {
    CAPTURE(row.id);
    CHECK(report.find(row.id) != nullptr);
  }
  // and every emitted id is in the manifest
  for (const auto& e : report.entries()) {
    bool known = false;
    for (const auto& row : identity_manifest())
      if (e.id == row.id) known = true;
    CAPTURE(e.id);
    CHECK(known);
  }
}

TEST_SUITE_END();
