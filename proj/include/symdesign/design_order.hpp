#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdesign/closed_form.hpp"
#include "symdesign/lattice.hpp"
#include "symdesign/optimizer.hpp"
#include "symdesign/rational_matrix.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

/// Full pipeline output for one instance: the exact optimization result plus
/// closed-form cross-checks and provenance needed by the CLI and tests.
struct OrderResult {
  SymmetryData data;
  std::optional<long> k;  // locality, when the instance came from (n, k)
  size_t lattice_rank = 0;
  LatticeBasis lattice;
  std::optional<SeedInfo> seed_info;
  bool shortcut = false;
  DesignBound bound;
  std::optional<ClosedFormBound> closed_form;
  std::vector<std::string> warnings;
};

/// symmetry data -> rational kernel -> saturated lattice -> seed ->
/// bounded enumeration.  Universal instances (full-rank constraint space)
/// short out to an infinite bound.
inline OrderResult compute_design_order(SymmetryData data,
                                        std::optional<long> k = std::nullopt,
                                        const MinimizeOptions& opts = {}) {
  OrderResult res;
  res.k = k;
  WarnSink warn = [&](const std::string& msg) { res.warnings.push_back(msg); };

  RationalMatrix kernel = rational_kernel(data.c_basis, warn);
  res.lattice = integer_saturation(kernel, warn);
  res.lattice_rank = res.lattice.dim();

  if (res.lattice_rank > 0) {
    res.seed_info = seed(data, res.lattice);
    res.shortcut = shortcut_check(data, *res.seed_info);
    res.bound = minimize(data, res.lattice, *res.seed_info, opts);
  }
  // else: bound stays infinite (value absent)

  if (data.symmetry != Symmetry::Custom && k && data.n && *data.n >= *k + 1 &&
      !closed_form_degenerate(data.symmetry, *data.n, *k))
    res.closed_form = closed_form_bound(data.symmetry, *data.n, *k);

  res.data = std::move(data);
  return res;
}

inline OrderResult compute_design_order(Symmetry sym, long n, long k,
                                        const MinimizeOptions& opts = {}) {
  return compute_design_order(build_symmetry(sym, n, k), k, opts);
}

}  // namespace symdesign
