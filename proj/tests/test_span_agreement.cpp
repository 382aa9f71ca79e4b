#include <catch2/catch.hpp>

#include "support/span_check.hpp"
#include "symdesign/commutant.hpp"
#include "symdesign/symmetry.hpp"

using namespace symdesign;

// The analytic constraint bases must span exactly the space of numerically
// computed trace vectors of embedded local symmetric operators.  The full
// n <= 8, k <= 4 sweep runs in the acceptance suite; this is the unit-sized
// version plus the named spec cases.

namespace {
void check_case(Symmetry sym, long n, long k) {
  SymmetryData data = build_symmetry(sym, n, k);
  BlockStructure bs = symmetric_block_structure(sym, n);
  auto ops = symmetric_operator_span(sym, k);
  Eigen::MatrixXd f = oracles::numeric_f_rows(bs, ops, n, k);
  auto cmp = oracles::compare_spans(f, data.c_basis);
  INFO(to_string(sym) << " n=" << n << " k=" << k);
  REQUIRE(cmp.numeric_rank_equal);
  REQUIRE(cmp.numeric_mutual_containment);
  REQUIRE(cmp.exact_equal);
}
}  // namespace

TEST_CASE("rational reconstruction") {
  Rat r;
  REQUIRE(oracles::reconstruct_rational(0.5, r));
  REQUIRE(r == Rat(1, 2));
  REQUIRE(oracles::reconstruct_rational(-2.3333333333, r));
  REQUIRE(r == Rat(-7, 3));
  REQUIRE(oracles::reconstruct_rational(41.0, r));
  REQUIRE(r == 41);
}

TEST_CASE("u1 spans: analytic equals numeric") {
  check_case(Symmetry::U1, 5, 2);
  check_case(Symmetry::U1, 6, 3);  // rank-4 case from the backend contract
  SymmetryData d = build_u1(6, 3);
  REQUIRE(rank(d.c_basis) == 4);
}

TEST_CASE("z2 spans: analytic equals numeric") {
  check_case(Symmetry::Z2, 4, 2);
  check_case(Symmetry::Z2, 5, 3);
}

TEST_CASE("su2 spans: analytic equals numeric (permutation-operator oracle)") {
  check_case(Symmetry::SU2, 5, 2);
  check_case(Symmetry::SU2, 6, 4);  // rank-3 case from the backend contract
  SymmetryData d = build_su2(6, 4);
  REQUIRE(rank(d.c_basis) == 3);
}
