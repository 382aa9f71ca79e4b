#include <catch2/catch.hpp>

#include "symdesign/block_structure.hpp"
#include "symdesign/commutant.hpp"
#include "symdesign/symmetry.hpp"

using namespace symdesign;

TEST_CASE("u1 block structure has weight sectors in label order") {
  BlockStructure bs = u1_block_structure(4);
  REQUIRE(bs.dim == 16);
  REQUIRE(bs.sectors.size() == 5);
  std::vector<long> ms;
  for (const auto& s : bs.sectors) {
    REQUIRE(s.r == 1);
    ms.push_back(s.m);
  }
  REQUIRE(ms == std::vector<long>{1, 4, 6, 4, 1});
  REQUIRE(isometry_residual(bs) < 1e-12);
  REQUIRE(bs.total_block_dim() == 16);
}

TEST_CASE("z2 block structure splits by parity") {
  BlockStructure bs = z2_block_structure(3);
  REQUIRE(bs.sectors.size() == 2);
  REQUIRE(bs.sectors[0].m == 4);
  REQUIRE(bs.sectors[1].m == 4);
  REQUIRE(*bs.sectors[0].label == 0);
  REQUIRE(*bs.sectors[1].label == 1);
  // Sector 0 basis states all have even weight.
  const Matrix& v = bs.sectors[0].isometry;
  Matrix parity = z_parity(3);
  REQUIRE(((parity * v) - v).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("embed_operator places a gate on the right qubits") {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  // X on qubit 1 of n=2: basis order |q1 q0>.
  Matrix full = embed_operator(x, {1}, 2);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j)
      REQUIRE(std::abs(full(i, j) - ((i ^ 2) == j ? 1.0 : 0.0)) < 1e-15);

  REQUIRE_THROWS_AS(embed_operator(x, {0, 1}, 2), InputError);
  REQUIRE_THROWS_AS(embed_operator(x, {2}, 2), InputError);
}

TEST_CASE("f-vectors of diagonal weight units reproduce the u1 basis rows") {
  const long n = 5, k = 2;
  SymmetryData data = build_u1(n, k);
  BlockStructure bs = u1_block_structure(n);
  // E_xx for a weight-w computational state x on k qubits has
  // f_lambda = C(n-k, lambda-w), the c_w row.
  for (long x = 0; x < (1 << k); ++x) {
    Matrix e = Matrix::Zero(1 << k, 1 << k);
    e(x, x) = 1;
    Matrix full = embed_operator(e, {0, 1}, n);
    Vector f = f_vector(bs, full);
    const long w = __builtin_popcountl(x);
    for (long lam = 0; lam <= n; ++lam)
      REQUIRE(std::abs(f[lam].real() -
                       data.c_basis.at(w, lam).get_d()) < 1e-12);
  }
}

TEST_CASE("pattern residual accepts symmetric and flags non-symmetric ops") {
  BlockStructure bs = u1_block_structure(3);
  Matrix ztot = pauli_total(3, 'Z');
  REQUIRE(block_pattern_residual(bs, ztot) < 1e-12);
  Matrix xtot = pauli_total(3, 'X');  // breaks U(1)
  REQUIRE(block_pattern_residual(bs, xtot) > 0.5);
}

TEST_CASE("operator spans have the expected sizes") {
  REQUIRE(u1_symmetric_operator_span(2).size() == 6);   // 1+4+1 squared sums
  REQUIRE(z2_symmetric_operator_span(2).size() == 8);   // two 2-dim sectors
  REQUIRE(su2_symmetric_operator_span(2).size() == 2);  // id and swap, both Hermitian
  REQUIRE(su2_symmetric_operator_span(3).size() >= 6);
}
