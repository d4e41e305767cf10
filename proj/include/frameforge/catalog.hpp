#pragma once

// Built-in examples, addressable by name from the command line.

#include <string>
#include <vector>

#include "frameforge/stepfn.hpp"

namespace frameforge {

enum class CatalogKind { scaling, wavelet };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::string description;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> e{
      {"shannon", CatalogKind::scaling, "indicator of [-1/2,1/2)"},
      {"phi_quarter", CatalogKind::scaling, "indicator of [-1/4,1/4)"},
      {"psi0", CatalogKind::wavelet, "indicator of [-1,-1/2) u [1/2,1)"},
      {"psi1", CatalogKind::wavelet, "indicator of [-1/2,-1/4) u [1/4,1/2)"},
  };
  return e;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

inline StepFunction catalog(const std::string& name, int window_exp = 4) {
  if (window_exp < 1) throw input_error("window exponent must be at least 1");
  auto sym = [&](Dyadic a, Dyadic b) { return StepFunction::indicator(LineSet::symmetric(window_exp, a, b)); };
  auto centred = [&](Dyadic r) { return StepFunction::indicator(LineSet(window_exp, {{-r, r}})); };
  if (name == "shannon") return centred(half());
  if (name == "phi_quarter") return centred(Dyadic(1, 2));
  if (name == "psi0") return sym(half(), Dyadic(1));
  if (name == "psi1") return sym(Dyadic(1, 2), half());
  std::string known;
  for (const auto& e : catalog_entries()) known += (known.empty() ? "" : ", ") + e.name;
  throw input_error("unknown catalog entry '" + name + "'; known: " + known);
}

}  // namespace frameforge
