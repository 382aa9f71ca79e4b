#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdesign/circuit.hpp"
#include "symdesign/design_order.hpp"
#include "symdesign/optimizer.hpp"
#include "symdesign/symmetry.hpp"

namespace symdesign {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

/// Custom-symmetry schema:
///   {"labels": [0, 1, ...], "m": ["...decimal..."], "r": ["..."],
///    "c_basis": [["p/q", ...], ...], "semi_universal": true}
/// Validation: distinct labels, m >= 1, exact rationals; linearly dependent
/// c_basis rows are reduced away with a warning; if the multiplicity vector
/// is not in the span of c_basis it is appended (the trace vector of the
/// identity always belongs to the constraint space), with a warning.
/// The caller is responsible for semi-universality, and the loader warns to
/// that effect.
inline SymmetryData load_custom_symmetry(const Json& j, const WarnSink& warn) {
  auto emit = [&](const std::string& s) {
    if (warn) warn(s);
  };
  for (const char* field : {"labels", "m", "r", "c_basis", "semi_universal"})
    if (!j.contains(field))
      throw InputError(std::string("custom symmetry: missing field '") + field + "'");
  if (!j["semi_universal"].is_boolean() || !j["semi_universal"].get<bool>())
    throw InputError(
        "custom symmetry: 'semi_universal' must be true; the engine's bound "
        "is only meaningful under that hypothesis");
  emit("custom symmetry: semi-universality is asserted by the input file and "
       "is the caller's responsibility");

  SymmetryData d;
  d.symmetry = Symmetry::Custom;
  for (const auto& l : j["labels"]) {
    if (!l.is_number_integer() || l.get<long>() < 0)
      throw InputError("custom symmetry: labels must be nonnegative integers");
    d.labels.push_back(IrrepLabel{l.get<long>()});
  }
  for (const auto& s : j["m"]) d.m.push_back(parse_int(s.get<std::string>()));
  for (const auto& s : j["r"]) d.r.push_back(parse_int(s.get<std::string>()));

  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j["c_basis"]) {
    std::vector<Rat> r;
    for (const auto& e : row) r.push_back(parse_rational(e.get<std::string>()));
    if (r.size() != d.labels.size())
      throw InputError("custom symmetry: c_basis row width != label count");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw InputError("custom symmetry: empty c_basis");

  // Reduce dependent rows (warn, keep an independent subset).
  RationalMatrix all = RationalMatrix::from_rows(rows);
  if (rank(all) < all.rows()) {
    emit("custom symmetry: c_basis rows are linearly dependent; reducing to "
         "an independent subset");
    RationalMatrix reduced(0, all.cols());
    for (size_t i = 0; i < all.rows(); ++i) {
      RationalMatrix trial = reduced;
      trial.append_row(all.row(i));
      if (rank(trial) == trial.rows()) reduced = trial;
    }
    all = reduced;
  }

  // The identity is a symmetric local operator, so its trace vector (the
  // multiplicity vector) always lies in the constraint space.  Inputs that
  // omit it describe the space incompletely; complete it.
  {
    RationalMatrix mrow(1, d.labels.size());
    for (size_t i = 0; i < d.m.size(); ++i) mrow.at(0, i) = Rat(d.m[i]);
    if (!span_contains(all, mrow)) {
      emit("custom symmetry: multiplicity vector was not in span(c_basis); "
           "appending it (the identity's trace vector is always a constraint)");
      all.append_row(mrow.row(0));
    }
  }
  d.c_basis = all;

  // Record the qubit count when the total dimension is an exact power of 2.
  Int dim = d.total_dimension();
  for (long n = 1; n <= 62; ++n)
    if (dim == pow2(n)) {
      d.n = n;
      break;
    }
  d.validate();
  return d;
}

inline SymmetryData load_custom_symmetry_file(const std::string& path,
                                              const WarnSink& warn) {
  return load_custom_symmetry(load_json_file(path), warn);
}

/// Circuit schema: {"n": 3, "gamma": [[0,1],[1,2]], "probs": [0.5, 0.5],
/// "symmetry": "U1", "depth": 16}; probs defaults to uniform and depth to 1.
inline CircuitSpec load_circuit_spec(const Json& j) {
  CircuitSpec spec;
  if (!j.contains("n") || !j.contains("gamma") || !j.contains("symmetry"))
    throw InputError("circuit spec: need fields n, gamma, symmetry");
  spec.n = j["n"].get<long>();
  spec.symmetry = symmetry_from_string(j["symmetry"].get<std::string>());
  for (const auto& g : j["gamma"])
    spec.gamma.push_back(g.get<std::vector<int>>());
  if (j.contains("probs"))
    spec.probs = j["probs"].get<std::vector<double>>();
  else
    spec.probs.assign(spec.gamma.size(), 1.0 / double(spec.gamma.size()));
  if (j.contains("depth")) spec.depth = j["depth"].get<long>();
  spec.validate();
  return spec;
}

inline Json circuit_spec_to_json(const CircuitSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["symmetry"] = to_string(spec.symmetry);
  j["gamma"] = spec.gamma;
  j["probs"] = spec.probs;
  j["depth"] = spec.depth;
  return j;
}

// ---- result serialization (big integers as decimal strings) --------------

inline Json design_bound_to_json(const DesignBound& b) {
  Json j;
  if (b.is_infinite()) {
    j["bound"] = "infinite";
    j["max_design_order"] = "infinite";
  } else {
    j["bound"] = to_string(*b.value);
    j["max_design_order"] = to_string(b.max_design_order());
    Json w = Json::array();
    for (const Int& v : b.witness) w.push_back(to_string(v));
    j["witness"] = w;
  }
  j["optimal"] = b.optimal;
  j["nodes_visited"] = b.nodes_visited;
  return j;
}

inline Json order_result_to_json(const OrderResult& r) {
  Json j;
  j["symmetry"] = to_string(r.data.symmetry);
  if (r.data.n) j["n"] = *r.data.n;
  if (r.k) j["k"] = *r.k;
  j["num_labels"] = r.data.num_labels();
  j["lattice_rank"] = r.lattice_rank;
  j.update(design_bound_to_json(r.bound));
  if (r.seed_info) {
    Json s;
    s["t0"] = to_string(r.seed_info->t0);
    Json d = Json::array();
    for (const Int& v : r.seed_info->d) d.push_back(to_string(v));
    s["d"] = d;
    s["lambda_prime"] = r.seed_info->lambda_prime;
    s["sublattice_1d"] = r.seed_info->sublattice_1d;
    j["seed"] = s;
  }
  j["shortcut"] = r.shortcut;
  if (r.closed_form) {
    Json c;
    c["value"] = to_string(r.closed_form->value);
    c["regime"] = to_string(r.closed_form->regime);
    c["tight_when"] = r.closed_form->validity;
    if (!r.bound.is_infinite())
      c["matches_optimizer"] = (*r.bound.value == r.closed_form->value);
    j["closed_form"] = c;
  }
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace symdesign
