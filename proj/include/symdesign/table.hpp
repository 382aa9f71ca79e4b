#pragma once

#include <string>
#include <vector>

#include "symdesign/design_order.hpp"
#include "symdesign/json_io.hpp"

namespace symdesign {

struct TableCell {
  Symmetry symmetry;
  long n = 0, k = 0;
  DesignBound bound;
  std::optional<ClosedFormBound> closed_form;
  // Tight regime: optimizer == closed form.  Upper-bound regime: optimizer
  // <= closed form.  Universal/degenerate cells: optimizer is infinite.
  bool match = false;
};

/// The design-order grid: every built-in symmetry and locality in `ks`, for
/// n from k+1 to max_n, optimizer value next to the closed form with a match
/// flag per cell.  Degenerate closed-form cells (universal regime) match
/// exactly when the optimizer reports an infinite bound.
inline std::vector<TableCell> design_order_table(
    long max_n, const std::vector<long>& ks,
    const std::vector<Symmetry>& syms = {Symmetry::Z2, Symmetry::U1,
                                         Symmetry::SU2}) {
  std::vector<TableCell> cells;
  for (Symmetry sym : syms)
    for (long k : ks)
      for (long n = k + 1; n <= max_n; ++n) {
        TableCell cell;
        cell.symmetry = sym;
        cell.n = n;
        cell.k = k;
        OrderResult r = compute_design_order(sym, n, k);
        cell.bound = r.bound;
        cell.closed_form = r.closed_form;
        if (closed_form_degenerate(sym, n, k))
          cell.match = r.bound.is_infinite();
        else if (cell.closed_form && !cell.bound.is_infinite())
          cell.match = cell.closed_form->regime == Regime::Tight
                           ? (*cell.bound.value == cell.closed_form->value)
                           : (*cell.bound.value <= cell.closed_form->value);
        else
          cell.match = false;
        cells.push_back(std::move(cell));
      }
  return cells;
}

inline Json table_to_json(const std::vector<TableCell>& cells) {
  Json rows = Json::array();
  for (const auto& c : cells) {
    Json j;
    j["symmetry"] = to_string(c.symmetry);
    j["k"] = c.k;
    j["n"] = c.n;
    j["optimizer"] = c.bound.is_infinite() ? "infinite" : to_string(*c.bound.value);
    if (c.closed_form) {
      j["closed_form"] = to_string(c.closed_form->value);
      j["regime"] = to_string(c.closed_form->regime);
    } else {
      j["closed_form"] = c.bound.is_infinite() ? "infinite" : "none";
      j["regime"] = "universal";
    }
    j["match"] = c.match;
    rows.push_back(std::move(j));
  }
  Json out;
  out["table"] = rows;
  return out;
}

inline std::string table_to_text(const std::vector<TableCell>& cells) {
  std::string out =
      "symmetry  k   n   optimizer        closed_form      regime            match\n";
  for (const auto& c : cells) {
    auto pad = [](std::string s, size_t w) {
      if (s.size() < w) s.resize(w, ' ');
      return s;
    };
    std::string opt = c.bound.is_infinite() ? "infinite" : to_string(*c.bound.value);
    std::string cf = c.closed_form ? to_string(c.closed_form->value)
                     : c.bound.is_infinite() ? "infinite"
                                             : "none";
    std::string regime = c.closed_form ? to_string(c.closed_form->regime) : "universal";
    out += pad(to_string(c.symmetry), 10) + pad(std::to_string(c.k), 4) +
           pad(std::to_string(c.n), 4) + pad(opt, 17) + pad(cf, 17) +
           pad(regime, 18) + (c.match ? "yes" : "NO") + "\n";
  }
  return out;
}

}  // namespace symdesign
