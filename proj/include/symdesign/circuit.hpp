#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "symdesign/block_structure.hpp"
#include "symdesign/commutant.hpp"
#include "symdesign/haar.hpp"
#include "symdesign/rng.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

/// One random-circuit layer distribution: a gate support gamma is drawn with
/// probability probs[i] and a symmetric Haar gate is applied on it.
struct CircuitSpec {
  long n = 0;
  Symmetry symmetry = Symmetry::U1;
  std::vector<std::vector<int>> gamma;
  std::vector<double> probs;
  long depth = 1;

  long locality() const {
    size_t k = 0;
    for (const auto& g : gamma) k = std::max(k, g.size());
    return static_cast<long>(k);
  }

  /// Checks supports, probabilities and connectivity (the support hypergraph
  /// must not decompose into independent parts).
  void validate() const {
    if (n < 1 || n > 10) throw InputError("circuit spec: n out of range (1..10)");
    if (depth < 1) throw InputError("circuit spec: depth must be >= 1");
    if (gamma.empty()) throw InputError("circuit spec: no gate supports");
    if (probs.size() != gamma.size())
      throw InputError("circuit spec: probs/gamma length mismatch");
    double total = 0;
    for (double p : probs) {
      if (p <= 0) throw InputError("circuit spec: probabilities must be > 0");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw InputError("circuit spec: probabilities must sum to 1");
    for (const auto& g : gamma) {
      if (g.empty()) throw InputError("circuit spec: empty gate support");
      std::vector<int> s = g;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("circuit spec: repeated qubit in a gate support");
      if (s.front() < 0 || s.back() >= n)
        throw InputError("circuit spec: qubit index out of range");
    }
    // Union-find over qubits through shared supports.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gamma)
      for (size_t i = 1; i < g.size(); ++i) parent[find(g[i])] = find(g[0]);
    const int root = find(0);
    for (int q = 1; q < n; ++q)
      if (find(q) != root)
        throw InputError("circuit spec: gate supports do not connect all qubits");
  }
};

/// u <- embed(gate, support) * u without forming the embedded matrix:
/// mixes row groups that differ only on the support bits.
inline void apply_embedded_gate(Matrix& u, const Matrix& gate,
                                const std::vector<int>& support, long n) {
  const long k = static_cast<long>(support.size());
  const long dim = 1L << n;
  const long gdim = 1L << k;
  const long rest_dim = 1L << (n - k);
  if (u.rows() != dim || gate.rows() != gdim)
    throw InputError("apply_embedded_gate: dimension mismatch");

  std::vector<long> rest_bits;
  std::vector<bool> used(n, false);
  for (int q : support) used[q] = true;
  for (long b = 0; b < n; ++b)
    if (!used[b]) rest_bits.push_back(b);

  std::vector<long> row(gdim);
  Matrix scratch(gdim, dim);
  for (long rest = 0; rest < rest_dim; ++rest) {
    long base = 0;
    for (size_t b = 0; b < rest_bits.size(); ++b)
      if ((rest >> b) & 1) base |= 1L << rest_bits[b];
    for (long gi = 0; gi < gdim; ++gi) {
      long x = base;
      for (long g = 0; g < k; ++g)
        if ((gi >> g) & 1) x |= 1L << support[g];
      row[gi] = x;
    }
    for (long gi = 0; gi < gdim; ++gi) scratch.row(gi) = u.row(row[gi]);
    for (long gi = 0; gi < gdim; ++gi) {
      u.row(row[gi]).setZero();
      for (long gj = 0; gj < gdim; ++gj)
        if (gate(gi, gj) != Cplx(0, 0))
          u.row(row[gi]) += gate(gi, gj) * scratch.row(gj);
    }
  }
}

/// Default layout: contiguous k-qubit windows on a line, uniform
/// probabilities.
inline CircuitSpec brickwork_spec(Symmetry sym, long n, long k, long depth = 1) {
  if (k < 1 || k > n) throw InputError("brickwork_spec: need 1 <= k <= n");
  CircuitSpec spec;
  spec.n = n;
  spec.symmetry = sym;
  spec.depth = depth;
  const long windows = n - k + 1;
  for (long w = 0; w < windows; ++w) {
    std::vector<int> g(k);
    std::iota(g.begin(), g.end(), static_cast<int>(w));
    spec.gamma.push_back(std::move(g));
  }
  spec.probs.assign(windows, 1.0 / double(windows));
  return spec;
}

/// Local symmetric-Haar gate factories, one block structure per support.
class CircuitSampler {
 public:
  CircuitSampler(CircuitSpec spec, const DecomposeOptions& opt = {})
      : spec_(std::move(spec)) {
    spec_.validate();
    for (const auto& g : spec_.gamma) {
      const long k = static_cast<long>(g.size());
      local_.push_back(symmetric_block_structure(spec_.symmetry, k, opt));
    }
  }

  const CircuitSpec& spec() const { return spec_; }

  /// One depth-`depth` circuit: a product of `depth` independently drawn
  /// embedded local symmetric Haar gates.
  Matrix sample(Rng& rng, long depth) const {
    const long dim = 1L << spec_.n;
    Matrix u = Matrix::Identity(dim, dim);
    for (long step = 0; step < depth; ++step) {
      const size_t gi = pick_gamma(rng);
      Matrix gate = sample_symmetric_haar(local_[gi], rng);
      apply_embedded_gate(u, gate, spec_.gamma[gi], spec_.n);
    }
    return u;
  }

  Matrix sample(Rng& rng) const { return sample(rng, spec_.depth); }

 private:
  size_t pick_gamma(Rng& rng) const {
    double x = rng.uniform01();
    double acc = 0;
    for (size_t i = 0; i < spec_.probs.size(); ++i) {
      acc += spec_.probs[i];
      if (x <= acc) return i;
    }
    return spec_.probs.size() - 1;
  }

  CircuitSpec spec_;
  std::vector<BlockStructure> local_;
};

}  // namespace symdesign
