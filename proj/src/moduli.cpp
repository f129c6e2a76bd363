#include "ptlab/gf2m.hpp"

namespace ptlab {

// Generated: smallest integer with bit n set whose polynomial is irreducible,
// i.e. the lexicographically least irreducible of each degree. Mirrors
// data/moduli.txt.
const ModulusTable& ModulusTable::builtin() {
  static const ModulusTable table = [] {
    ModulusTable t;
    t.entries_ = {
      {1, 0x2},
      {2, 0x7},
      {3, 0xb},
      {4, 0x13},
      {5, 0x25},
      {6, 0x43},
      {7, 0x83},
      {8, 0x11b},
      {9, 0x203},
      {10, 0x409},
      {11, 0x805},
      {12, 0x1009},
      {13, 0x201b},
      {14, 0x4021},
      {15, 0x8003},
      {16, 0x1002b},
      {17, 0x20009},
      {18, 0x40009},
      {19, 0x80027},
      {20, 0x100009},
      {21, 0x200005},
      {22, 0x400003},
      {23, 0x800021},
      {24, 0x100001b},
      {25, 0x2000009},
      {26, 0x400001b},
      {27, 0x8000027},
      {28, 0x10000003},
      {29, 0x20000005},
      {30, 0x40000003},
      {31, 0x80000009},
      {32, 0x10000008d},
      {33, 0x20000004b},
      {34, 0x40000001b},
      {35, 0x800000005},
      {36, 0x1000000035},
      {37, 0x200000003f},
      {38, 0x4000000063},
      {39, 0x8000000011},
      {40, 0x10000000039},
    };
    return t;
  }();
  return table;
}

}  // namespace ptlab
