#pragma once

// Binary extension fields GF(2^n), 1 <= n <= 40, in polynomial basis.
//
// An element is a bit-packed coordinate vector (bit i = coefficient of X^i).
// Every element carries the modulus of the field it belongs to, so mixing
// elements of two differently-defined fields is detected and rejected.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptlab {

using Word = std::uint64_t;

inline constexpr int kMaxDegree = 40;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Elem {
  Word bits = 0;
  Word field = 0;  // modulus of the owning field

  friend bool operator==(const Elem&, const Elem&) = default;
  bool is_zero() const { return bits == 0; }
};

Elem operator+(Elem a, Elem b);
Elem operator-(Elem a, Elem b);
Elem operator*(Elem a, Elem b);
Elem operator/(Elem a, Elem b);
Elem& operator+=(Elem& a, Elem b);
Elem& operator*=(Elem& a, Elem b);
Elem pow(Elem a, Word e);
Elem inv(Elem a);

std::string to_hex(Elem a);
std::ostream& operator<<(std::ostream& os, Elem a);

namespace gf2x {
// Arithmetic in GF(2)[X] on polynomials packed into a Word.
int degree(Word f);
Word mod(Word a, Word m);
Word mulmod(Word a, Word b, Word m);
Word gcd(Word a, Word b);
bool is_irreducible(Word f);
}  // namespace gf2x

class FieldCtx {
 public:
  // Validates that `modulus` has degree n and is irreducible.
  FieldCtx(int n, Word modulus);

  int degree() const { return n_; }
  Word modulus() const { return modulus_; }
  Word size() const { return Word{1} << n_; }
  Word group_order() const { return (Word{1} << n_) - 1; }

  Elem zero() const { return {0, modulus_}; }
  Elem one() const { return {1, modulus_}; }
  Elem elem(Word bits) const;
  // Residue class of X.
  Elem x() const;
  // Element of multiplicative order 2^n - 1.
  Elem generator() const { return {shared_->generator, modulus_}; }
  // Distinct prime factors of 2^n - 1, ascending.
  const std::vector<Word>& group_order_primes() const { return shared_->primes; }

  bool owns(Elem a) const { return a.field == modulus_; }
  void check(Elem a) const;

  // Unchecked arithmetic on bit patterns, for inner loops.
  Word mul_raw(Word a, Word b) const;
  Word sqr_raw(Word a) const { return mul_raw(a, a); }
  Word pow_raw(Word a, Word e) const;
  Word inv_raw(Word a) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  struct Shared {
    Word generator = 1;
    std::vector<Word> primes;
  };
  int n_;
  Word modulus_;
  std::shared_ptr<const Shared> shared_;
};

// Degree -> modulus. Serialized as text lines "n hex_modulus".
class ModulusTable {
 public:
  // Lexicographically smallest irreducible polynomial for every 1 <= n <= 40.
  static const ModulusTable& builtin();
  // Entries read from `in` override the builtin ones; every entry is validated.
  static ModulusTable parse(std::istream& in);
  static ModulusTable load(const std::string& path);
  // Honors PTLAB_MODULUS_TABLE when set, otherwise the builtin table.
  static ModulusTable from_env();

  Word modulus(int n) const;
  void write(std::ostream& out) const;

 private:
  std::map<int, Word> entries_;
};

// Uses the table installed by set_default_modulus_table, else the builtin one.
FieldCtx new_field(int n);
void set_default_modulus_table(ModulusTable table);
FieldCtx new_field(int n, const ModulusTable& table);

Elem add(const FieldCtx& ctx, Elem a, Elem b);
Elem mul(const FieldCtx& ctx, Elem a, Elem b);
Elem inv(const FieldCtx& ctx, Elem a);
Elem pow(const FieldCtx& ctx, Elem a, Word e);

// a^(2^k); k is taken mod n since the Frobenius has order n.
Elem frobenius(const FieldCtx& ctx, Elem a, Word k);

// Sum_{i < top/sub} a^(2^(sub*i)), with exponents reduced mod n. Requires
// sub | top and a^(2^top) = a, so that the sum is the relative trace from
// GF(2^top) to GF(2^sub) of an element of GF(2^gcd(n, top)).
Elem trace_rel(const FieldCtx& ctx, Elem a, Word sub, Word top);

Word mult_order(const FieldCtx& ctx, Elem a);

bool is_in_subfield(const FieldCtx& ctx, Elem a, int k);

}  // namespace ptlab
