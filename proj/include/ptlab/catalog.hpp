#pragma once

// Known permutation trinomials X^r h(X^(q-1)) over GF(2^(2m)), with the
// condition on m under which each permutes.

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "ptlab/perm.hpp"

namespace ptlab {

struct CatalogEntry {
  int index;                  // 1..15 known rows, 16..18 the new classes
  int r;
  std::array<int, 3> h;       // exponents of h, ascending
  std::string_view condition; // human-readable m-condition
  bool (*holds)(int m);
  std::string_view citation;

  // True when h = 1 + X^beta + X^alpha, i.e. the row is a (r, alpha, beta) family.
  bool is_standard_trinomial() const { return h[0] == 0; }
  int alpha() const { return h[2]; }
  int beta() const { return h[1]; }
  ExpPoly instantiate(const FieldCtx& ctx) const;
};

std::span<const CatalogEntry> catalog();
const CatalogEntry& catalog_entry(int index);
// Entry with the same r and h, if any.
const CatalogEntry* find_catalog_entry(int r, int alpha, int beta);

}  // namespace ptlab
