#include <catch2/catch.hpp>

#include "symdesign/design_order.hpp"
#include "symdesign/json_io.hpp"

using namespace symdesign;

namespace {
Json z2_n3_json() {
  return Json::parse(R"({
    "labels": [0, 1],
    "m": ["4", "4"],
    "r": ["1", "1"],
    "c_basis": [["1", "1"]],
    "semi_universal": true
  })");
}
}  // namespace

TEST_CASE("custom z2 file reproduces the built-in design bound") {
  std::vector<std::string> warnings;
  SymmetryData custom = load_custom_symmetry(
      z2_n3_json(), [&](const std::string& w) { warnings.push_back(w); });
  REQUIRE(custom.n == 3);

  OrderResult via_custom = compute_design_order(custom);
  OrderResult builtin = compute_design_order(Symmetry::Z2, 3, 2);
  REQUIRE(!via_custom.bound.is_infinite());
  REQUIRE(*via_custom.bound.value == *builtin.bound.value);
  REQUIRE(via_custom.bound.witness == builtin.bound.witness);
  // Semi-universality warning is always emitted.
  REQUIRE(!warnings.empty());
}

TEST_CASE("full-rank custom basis yields an infinite bound") {
  Json j = Json::parse(R"({
    "labels": [0, 1],
    "m": ["2", "2"],
    "r": ["1", "1"],
    "c_basis": [["1", "0"], ["0", "1"]],
    "semi_universal": true
  })");
  SymmetryData d = load_custom_symmetry(j, nullptr);
  OrderResult r = compute_design_order(d);
  REQUIRE(r.lattice_rank == 0);
  REQUIRE(r.bound.is_infinite());
}

TEST_CASE("duplicate labels are rejected") {
  Json j = z2_n3_json();
  j["labels"] = Json::parse("[0, 0]");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
}

TEST_CASE("malformed rationals are rejected") {
  Json j = z2_n3_json();
  j["c_basis"] = Json::parse(R"([["1", "1/0"]])");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
  j["c_basis"] = Json::parse(R"([["1", "x"]])");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
  j["c_basis"] = Json::parse(R"([["1", ""]])");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
}

TEST_CASE("nonpositive multiplicities are rejected") {
  Json j = z2_n3_json();
  j["m"] = Json::parse(R"(["0", "8"])");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
  j["m"] = Json::parse(R"(["-4", "4"])");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
}

TEST_CASE("semi-universality must be asserted") {
  Json j = z2_n3_json();
  j["semi_universal"] = false;
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
  j.erase("semi_universal");
  REQUIRE_THROWS_AS(load_custom_symmetry(j, nullptr), InputError);
}

TEST_CASE("dependent c_basis rows are reduced with a warning") {
  Json j = Json::parse(R"({
    "labels": [0, 1, 2],
    "m": ["2", "4", "2"],
    "r": ["1", "1", "1"],
    "c_basis": [["1", "1", "1"], ["2", "2", "2"], ["0", "1", "0"]],
    "semi_universal": true
  })");
  std::vector<std::string> warnings;
  SymmetryData d = load_custom_symmetry(
      j, [&](const std::string& w) { warnings.push_back(w); });
  REQUIRE(d.c_basis.rows() == 2);
  bool saw_reduce = false;
  for (const auto& w : warnings)
    saw_reduce |= w.find("dependent") != std::string::npos;
  REQUIRE(saw_reduce);
}

TEST_CASE("multiplicity vector is appended when missing from the span") {
  // c_basis spans only (1, 0); m = (2, 2) is not in the span, so the loader
  // must append it, making the constraint space full rank -> infinite bound.
  Json j = Json::parse(R"({
    "labels": [0, 1],
    "m": ["2", "2"],
    "r": ["1", "1"],
    "c_basis": [["1", "0"]],
    "semi_universal": true
  })");
  std::vector<std::string> warnings;
  SymmetryData d = load_custom_symmetry(
      j, [&](const std::string& w) { warnings.push_back(w); });
  REQUIRE(d.c_basis.rows() == 2);
  bool saw_append = false;
  for (const auto& w : warnings)
    saw_append |= w.find("appending") != std::string::npos;
  REQUIRE(saw_append);
  REQUIRE(compute_design_order(d).bound.is_infinite());
}

TEST_CASE("rationals in p/q form flow through exactly") {
  Json j = Json::parse(R"({
    "labels": [0, 1, 2],
    "m": ["1", "2", "1"],
    "r": ["1", "1", "1"],
    "c_basis": [["1/2", "1", "1/2"]],
    "semi_universal": true
  })");
  SymmetryData d = load_custom_symmetry(j, nullptr);
  REQUIRE(d.c_basis.at(0, 0) == Rat(1, 2));
  REQUIRE(d.n == 2);
  OrderResult r = compute_design_order(d);
  // Kernel of (1/2, 1, 1/2) contains (1, 0, -1), which attains <m, x+> = 1.
  REQUIRE(r.lattice_rank == 2);
  REQUIRE(!r.bound.is_infinite());
  REQUIRE(*r.bound.value == 1);
  REQUIRE(r.seed_info->t0 == 1);
}
