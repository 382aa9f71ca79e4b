#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "symdesign/block_structure.hpp"
#include "symdesign/circuit.hpp"
#include "symdesign/haar.hpp"
#include "symdesign/rng.hpp"

namespace symdesign {

/// Monte Carlo estimate of F_t = E |tr(U V')|^{2t} over independent pairs.
struct FramePotentialEstimate {
  long t = 1;
  double mean = 0;
  double stderr_ = 0;  // sample standard deviation / sqrt(samples)
  uint64_t samples = 0;
  uint64_t rng_seed = 0;
};

using UnitarySampler = std::function<Matrix(Rng&)>;

inline UnitarySampler symmetric_haar_sampler(const BlockStructure& bs) {
  return [&bs](Rng& rng) { return sample_symmetric_haar(bs, rng); };
}

inline int configured_threads() {
  if (const char* env = std::getenv("SYMDESIGN_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

/// Mean of |tr(U V')|^{2t} over `samples` independent pairs.  Work is split
/// into fixed-size chunks, each with its own substream derived from
/// (rng_seed, chunk index), and partial sums are reduced in chunk order, so
/// the estimate is bit-identical for a given seed regardless of the thread
/// count.
inline FramePotentialEstimate estimate_frame_potential(
    const UnitarySampler& sampler, long t, uint64_t samples, uint64_t rng_seed,
    int threads = 0) {
  if (t < 1) throw InputError("frame potential: t must be >= 1");
  if (samples < 2) throw InputError("frame potential: need at least 2 samples");
  if (threads <= 0) threads = configured_threads();

  constexpr uint64_t kChunk = 1024;
  const uint64_t nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<long double> sums(nchunks, 0.0L), sqsums(nchunks, 0.0L);

  auto run_chunk = [&](uint64_t c) {
    Rng rng = Rng::substream(rng_seed, c);
    const uint64_t begin = c * kChunk;
    const uint64_t end = std::min(samples, begin + kChunk);
    long double s = 0, s2 = 0;
    for (uint64_t i = begin; i < end; ++i) {
      Matrix u = sampler(rng);
      Matrix v = sampler(rng);
      const Cplx tr = (u * v.adjoint()).trace();
      const long double a2 = static_cast<long double>(std::norm(tr));
      long double w = 1;
      for (long p = 0; p < t; ++p) w *= a2;
      s += w;
      s2 += w * w;
    }
    sums[c] = s;
    sqsums[c] = s2;
  };

  if (threads == 1 || nchunks == 1) {
    for (uint64_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::atomic<uint64_t> next{0};
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (uint64_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
          run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  long double total = 0, total2 = 0;
  for (uint64_t c = 0; c < nchunks; ++c) {  // fixed reduction order
    total += sums[c];
    total2 += sqsums[c];
  }
  const long double n = static_cast<long double>(samples);
  const long double mean = total / n;
  const long double var = std::max(0.0L, (total2 - n * mean * mean) / (n - 1));

  FramePotentialEstimate est;
  est.t = t;
  est.mean = static_cast<double>(mean);
  est.stderr_ = static_cast<double>(std::sqrt(var / n));
  est.samples = samples;
  est.rng_seed = rng_seed;
  return est;
}

enum class Verdict { Consistent, Inconsistent, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct DepthPoint {
  long depth = 0;
  FramePotentialEstimate estimate;
};

struct DesignTestResult {
  Verdict verdict = Verdict::Inconclusive;
  long t = 0;
  FramePotentialEstimate haar;
  std::vector<DepthPoint> circuit_trace;  // doubling depth schedule
  double delta = 0;                       // stabilized circuit mean - haar mean
  double combined_stderr = 0;
  long stabilized_depth = 0;
};

struct DesignTestOptions {
  uint64_t samples = 100000;
  uint64_t rng_seed = 1;
  long max_depth = 4096;
  double decision_sigmas = 3.0;
  int threads = 0;
};

/// Statistical design test: estimates the circuit-ensemble frame potential
/// on a doubling depth schedule until successive estimates agree within one
/// combined standard error, then compares the stabilized value with the
/// symmetric-Haar frame potential at `decision_sigmas` combined standard
/// errors.  A schedule that never stabilizes is inconclusive.
inline DesignTestResult design_test(Symmetry sym, long n, long k, long t,
                                    const DesignTestOptions& opt = {}) {
  if (sym != Symmetry::Z2 && sym != Symmetry::U1 && sym != Symmetry::SU2)
    throw InputError("design test: built-in symmetries only");
  if (n > 6) throw InputError("design test: n above 6 is not tractable here");
  if (t < 1 || t > 4) throw InputError("design test: t must be in 1..4");

  DesignTestResult res;
  res.t = t;

  const BlockStructure global = symmetric_block_structure(sym, n);
  res.haar = estimate_frame_potential(symmetric_haar_sampler(global), t,
                                      opt.samples, opt.rng_seed, opt.threads);

  CircuitSampler circuits(brickwork_spec(sym, n, k));
  bool stabilized = false;
  FramePotentialEstimate prev{};
  uint64_t depth_index = 1;
  for (long depth = 1; depth <= opt.max_depth; depth *= 2, ++depth_index) {
    UnitarySampler s = [&](Rng& rng) { return circuits.sample(rng, depth); };
    FramePotentialEstimate cur = estimate_frame_potential(
        s, t, opt.samples, detail::splitmix64(opt.rng_seed ^ depth_index),
        opt.threads);
    res.circuit_trace.push_back({depth, cur});
    if (depth > 1) {
      const double se =
          std::sqrt(prev.stderr_ * prev.stderr_ + cur.stderr_ * cur.stderr_);
      if (std::abs(cur.mean - prev.mean) < se) {
        stabilized = true;
        res.stabilized_depth = depth;
        break;
      }
    }
    prev = cur;
  }

  if (!stabilized) {
    res.verdict = Verdict::Inconclusive;
    return res;
  }

  const FramePotentialEstimate& fin = res.circuit_trace.back().estimate;
  res.delta = fin.mean - res.haar.mean;
  res.combined_stderr = std::sqrt(fin.stderr_ * fin.stderr_ +
                                  res.haar.stderr_ * res.haar.stderr_);
  res.verdict = std::abs(res.delta) <= opt.decision_sigmas * res.combined_stderr
                    ? Verdict::Consistent
                    : Verdict::Inconsistent;
  return res;
}

}  // namespace symdesign
