#include <catch2/catch.hpp>

#include <algorithm>

#include "symdesign/commutant.hpp"
#include "symdesign/symmetry.hpp"

using namespace symdesign;

namespace {
std::vector<std::pair<long, long>> rm_pairs(const BlockStructure& bs) {
  std::vector<std::pair<long, long>> v;
  for (const auto& s : bs.sectors) v.emplace_back(s.r, s.m);
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("z2 n=3 commutant: two sectors of multiplicity 4") {
  BlockStructure bs = decompose_commutant(symmetry_generators(Symmetry::Z2, 3), 8);
  REQUIRE(rm_pairs(bs) == std::vector<std::pair<long, long>>{{1, 4}, {1, 4}});
  REQUIRE(isometry_residual(bs) < 1e-10);
}

TEST_CASE("u1 n=4 commutant: binomial multiplicities") {
  BlockStructure bs = decompose_commutant(symmetry_generators(Symmetry::U1, 4), 16);
  REQUIRE(rm_pairs(bs) ==
          std::vector<std::pair<long, long>>{{1, 1}, {1, 1}, {1, 4}, {1, 4}, {1, 6}});
}

TEST_CASE("su2 n=4 commutant matches the exact multiplicity data") {
  BlockStructure bs = decompose_commutant(symmetry_generators(Symmetry::SU2, 4), 16);
  // Oracle: the exact backend data (r_i, m_i).
  SymmetryData d = build_su2(4, 2);
  std::vector<std::pair<long, long>> expect;
  for (size_t i = 0; i < d.num_labels(); ++i)
    expect.emplace_back(long(d.r[i].get_si()), long(d.m[i].get_si()));
  std::sort(expect.begin(), expect.end());
  REQUIRE(rm_pairs(bs) == expect);
  REQUIRE(isometry_residual(bs) < 1e-10);
}

TEST_CASE("su2 sectors across sizes agree with the exact backend") {
  for (long n = 3; n <= 6; ++n) {
    BlockStructure bs =
        decompose_commutant(symmetry_generators(Symmetry::SU2, n), 1L << n);
    SymmetryData d = build_su2(n, 2);
    std::vector<std::pair<long, long>> expect;
    for (size_t i = 0; i < d.num_labels(); ++i)
      expect.emplace_back(long(d.r[i].get_si()), long(d.m[i].get_si()));
    std::sort(expect.begin(), expect.end());
    REQUIRE(rm_pairs(bs) == expect);
  }
}

TEST_CASE("conjugating symmetric operators yields the block pattern") {
  BlockStructure bs = decompose_commutant(symmetry_generators(Symmetry::SU2, 5), 32);
  assign_labels(bs, Symmetry::SU2, 5);
  // A symmetric test operator: sum of embedded symmetrized permutations.
  auto span = su2_symmetric_operator_span(3);
  Matrix a = Matrix::Zero(32, 32);
  double w = 0.3;
  for (const auto& op : span) {
    a += w * embed_operator(op, {0, 1, 2}, 5);
    w = 1.1 * w + 0.05;
  }
  REQUIRE(block_pattern_residual(bs, a) < 1e-8);
  // And a non-symmetric operator is flagged.
  REQUIRE(block_pattern_residual(bs, pauli_total(5, 'Z')) > 1e-3);
}

TEST_CASE("labels follow the spin ordering for su2") {
  BlockStructure bs = symmetric_block_structure(Symmetry::SU2, 5);
  REQUIRE(bs.sectors.size() == 3);
  for (size_t i = 0; i < bs.sectors.size(); ++i) {
    REQUIRE(*bs.sectors[i].label == long(i));
    REQUIRE(bs.sectors[i].r == 6 - 2 * long(i));  // r = n - 2i + 1
  }
}

TEST_CASE("input validation") {
  REQUIRE_THROWS_AS(decompose_commutant({}, 4), InputError);
  Matrix bad = Matrix::Identity(4, 4);
  REQUIRE_THROWS_AS(decompose_commutant({bad}, 8), InputError);
}
