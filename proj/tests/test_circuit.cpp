#include <catch2/catch.hpp>

#include "symdesign/circuit.hpp"
#include "symdesign/commutant.hpp"
#include "symdesign/frame_potential.hpp"

using namespace symdesign;

TEST_CASE("brickwork spec for u1 n=3 k=2") {
  CircuitSpec spec = brickwork_spec(Symmetry::U1, 3, 2);
  REQUIRE(spec.gamma == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  REQUIRE(spec.probs == std::vector<double>{0.5, 0.5});
  REQUIRE(spec.locality() == 2);
  REQUIRE_NOTHROW(spec.validate());
}

TEST_CASE("disconnected gate supports are rejected") {
  CircuitSpec spec;
  spec.n = 4;
  spec.symmetry = Symmetry::U1;
  spec.gamma = {{0, 1}, {2, 3}};
  spec.probs = {0.5, 0.5};
  REQUIRE_THROWS_AS(spec.validate(), InputError);

  spec.gamma = {{0, 1}, {1, 2}, {2, 3}};
  spec.probs = {0.4, 0.3, 0.3};
  REQUIRE_NOTHROW(spec.validate());

  spec.probs = {0.5, 0.5, 0.5};
  REQUIRE_THROWS_AS(spec.validate(), InputError);
  spec.probs = {0.5, 0.5, -0.0};
  REQUIRE_THROWS_AS(spec.validate(), InputError);
}

TEST_CASE("in-place local application agrees with explicit embedding") {
  Rng rng(5);
  BlockStructure local = u1_block_structure(2);
  for (const auto& support :
       std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 1}, {0, 3}}) {
    Matrix gate = sample_symmetric_haar(local, rng);
    Matrix m = Matrix::Random(16, 16);
    Matrix expect = embed_operator(gate, support, 4) * m;
    Matrix got = m;
    apply_embedded_gate(got, gate, support, 4);
    REQUIRE((expect - got).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("circuit samples are symmetric unitaries") {
  for (auto sym : {Symmetry::Z2, Symmetry::U1}) {
    CircuitSampler sampler(brickwork_spec(sym, 4, 2));
    auto gens = symmetry_generators(sym, 4);
    Rng rng(77);
    for (long depth : {1L, 4L, 16L}) {
      Matrix u = sampler.sample(rng, depth);
      REQUIRE(unitarity_residual(u) < 1e-10);
      for (const auto& g : gens)
        REQUIRE((g * u - u * g).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("depth-1 global window equals global symmetric haar") {
  // A single window covering all qubits samples the global symmetric group.
  const long n = 3;
  CircuitSampler sampler(brickwork_spec(Symmetry::U1, n, n));
  BlockStructure global = u1_block_structure(n);
  auto circ = estimate_frame_potential(
      [&](Rng& rng) { return sampler.sample(rng, 1); }, 2, 40000, 8);
  auto haar = estimate_frame_potential(symmetric_haar_sampler(global), 2, 40000, 9);
  const double sigma =
      std::sqrt(circ.stderr_ * circ.stderr_ + haar.stderr_ * haar.stderr_);
  REQUIRE(std::abs(circ.mean - haar.mean) < 5 * sigma);
}

TEST_CASE("unconstrained local gates drive F_1 to the full-Haar value") {
  // With no symmetry constraint (single full-block local structure), a deep
  // 2-local circuit approaches full-unitary Haar, where F_1 = 1.
  const long n = 3;
  BlockStructure full_local;
  full_local.dim = 4;
  full_local.sectors.push_back({1, 4, Matrix::Identity(4, 4), std::nullopt});
  auto deep = [&](Rng& rng) {
    Matrix u = Matrix::Identity(1 << n, 1 << n);
    for (int step = 0; step < 24; ++step) {
      Matrix gate = sample_symmetric_haar(full_local, rng);
      const int lo = int(rng.below(n - 1));
      apply_embedded_gate(u, gate, {lo, lo + 1}, n);
    }
    return u;
  };
  auto est = estimate_frame_potential(deep, 1, 30000, 64);
  REQUIRE(std::abs(est.mean - 1.0) < 5 * est.stderr_);
}

TEST_CASE("frame potential is non-increasing in depth up to noise") {
  CircuitSampler sampler(brickwork_spec(Symmetry::U1, 3, 2));
  double prev_mean = 0, prev_se = 0;
  bool first = true;
  for (long depth : {1L, 2L, 4L, 8L, 16L, 32L}) {
    auto est = estimate_frame_potential(
        [&](Rng& rng) { return sampler.sample(rng, depth); }, 2, 20000,
        100 + depth);
    if (!first) {
      const double sigma =
          std::sqrt(est.stderr_ * est.stderr_ + prev_se * prev_se);
      REQUIRE(est.mean <= prev_mean + 3 * sigma);
    }
    first = false;
    prev_mean = est.mean;
    prev_se = est.stderr_;
  }
}

TEST_CASE("circuit frame potential stays above the symmetric-haar floor") {
  const long n = 3, k = 2;
  for (auto sym : {Symmetry::Z2, Symmetry::U1}) {
    CircuitSampler sampler(brickwork_spec(sym, n, k));
    BlockStructure global = sym == Symmetry::Z2 ? z2_block_structure(n)
                                                : u1_block_structure(n);
    for (long t : {1L, 2L}) {
      auto haar =
          estimate_frame_potential(symmetric_haar_sampler(global), t, 20000, 3);
      for (long depth : {2L, 8L, 32L}) {
        auto circ = estimate_frame_potential(
            [&](Rng& rng) { return sampler.sample(rng, depth); }, t, 20000,
            40 + depth);
        const double sigma = std::sqrt(circ.stderr_ * circ.stderr_ +
                                       haar.stderr_ * haar.stderr_);
        REQUIRE(circ.mean >= haar.mean - 3 * sigma);
      }
    }
  }
}
