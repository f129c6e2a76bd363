#include "ptlab/catalog.hpp"

#include <stdexcept>

namespace ptlab {

namespace {

bool odd(int m) { return m % 2 == 1; }
bool even_not3(int m) { return m % 2 == 0 && m % 3 != 0; }
bool coprime3(int m) { return m % 3 != 0; }
bool two_mod4(int m) { return m % 4 == 2; }
bool two_four_mod6(int m) { return m % 6 == 2 || m % 6 == 4; }
bool not0mod4_coprime3(int m) { return m % 4 != 0 && m % 3 != 0; }
bool not0mod5(int m) { return m % 5 != 0; }

const CatalogEntry kRows[] = {
    {1, 3, {0, 1, 3}, "m odd", odd, "ZLF Thm 4.2"},
    {2, 3, {0, 2, 3}, "m odd", odd, "ZLF Thm 4.1"},
    {3, 2, {0, 2, 3}, "gcd(m,3)=1", coprime3, "RG Thm 3.3"},
    {4, 4, {0, 1, 3}, "gcd(m,3)=1", coprime3, "RG Thm 3.1; Li Thm 2.6"},
    {5, 3, {0, 3, 4}, "m odd", odd, "RG Thm 3.5"},
    {6, 5, {0, 1, 4}, "m odd", odd, "RG Thm 3.4; Li Thm 2.8"},
    {7, 5, {0, 3, 4}, "m = 2 mod 4", two_mod4, "ZLF Thm 3.1"},
    {8, 4, {0, 1, 5}, "m = 2,4 mod 6", two_four_mod6, "Li Thm 2.7"},
    {9, 5, {0, 1, 5}, "m = 2 mod 4", two_mod4, "Li Thm 2.4; ZLF Thm 4.3"},
    {10, 5, {1, 2, 5}, "m = 2 mod 4", two_mod4, "ZLF Thm 3.2"},
    {11, 5, {0, 4, 5}, "m = 2 mod 4", two_mod4, "ZLF Thm 4.4"},
    {12, 5, {0, 2, 6}, "m != 0 mod 4, gcd(m,3)=1", not0mod4_coprime3, "Li Thm 2.10; Harsh Thm 3.4"},
    {13, 5, {0, 5, 6}, "m != 0 mod 4, gcd(m,3)=1", not0mod4_coprime3, "Harsh Thm 3.2"},
    {14, 7, {0, 1, 6}, "gcd(m,3)=1", coprime3, "Harsh Thm 3.1"},
    {15, 7, {0, 4, 6}, "gcd(m,3)=1", coprime3, "Harsh Thm 3.3"},
    {16, 7, {0, 5, 7}, "m even, m != 0 mod 3", even_not3, "new"},
    {17, 9, {0, 6, 8}, "m odd", odd, "new"},
    {18, 11, {0, 4, 10}, "m != 0 mod 5", not0mod5, "new"},
};

}  // namespace

ExpPoly CatalogEntry::instantiate(const FieldCtx& ctx) const {
  return ExpPoly::from_circle_form(ctx, static_cast<Word>(r), h);
}

std::span<const CatalogEntry> catalog() { return kRows; }

const CatalogEntry& catalog_entry(int index) {
  for (const auto& e : kRows) {
    if (e.index == index) return e;
  }
  throw std::out_of_range("no catalog row " + std::to_string(index));
}

const CatalogEntry* find_catalog_entry(int r, int alpha, int beta) {
  for (const auto& e : kRows) {
    if (e.is_standard_trinomial() && e.r == r && e.alpha() == alpha && e.beta() == beta) return &e;
  }
  return nullptr;
}

}  // namespace ptlab
