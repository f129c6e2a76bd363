#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ptlab/catalog.hpp"
#include "ptlab/qm.hpp"

using namespace ptlab;

namespace {

std::set<Word> exps(const ExpPoly& f) {
  const auto v = f.exponents();
  return {v.begin(), v.end()};
}

ExpPoly row(int i, int m) { return catalog_entry(i).instantiate(new_field(2 * m)); }

ExpPoly poly(const FieldCtx& f, std::initializer_list<std::pair<Word, Elem>> terms) {
  const std::vector<std::pair<Word, Elem>> v(terms);
  return ExpPoly::make(f, v);
}

}  // namespace

TEST(Congruence, CrtExamples) {
  const Congruence a[] = {{0, 3}, {0, 5}};
  EXPECT_EQ(crt_solve(a), 0);
  const Congruence b[] = {{2, 3}, {3, 5}};
  EXPECT_EQ(crt_solve(b), 8);
  // d = -1 (mod 9) and d = alpha (q+1) r^-1 - 1 (mod 7) with q = 8, r = 3, alpha = 4.
  const Congruence c[] = {{-1, 9}, {(4 * 9 * 5 - 1) % 7, 7}};
  EXPECT_EQ(crt_solve(c), 53);
  const auto scan = oracle::exponent_scan(exps(row(6, 3)), exps(row(5, 3)), 63);
  EXPECT_NE(std::find(scan.begin(), scan.end(), 53u), scan.end());
  const Congruence bad[] = {{1, 6}, {1, 4}};
  EXPECT_THROW(crt_solve(bad), std::invalid_argument);
  EXPECT_EQ(crt_solve(std::span<const Congruence>{}), 0);
}

TEST(Congruence, CrtRandomAgainstScan) {
  std::mt19937_64 rng(21);
  const std::int64_t moduli[] = {4, 9, 25, 7, 11, 13};
  for (int t = 0; t < 200; ++t) {
    std::vector<Congruence> sys;
    std::int64_t prod = 1;
    for (std::int64_t m : moduli) {
      if (rng() % 2) continue;
      sys.push_back({static_cast<std::int64_t>(rng() % 100) - 50, m});
      prod *= m;
    }
    const std::int64_t x = crt_solve(sys);
    ASSERT_GE(x, 0);
    ASSERT_LT(x, prod);
    for (const auto& c : sys) ASSERT_EQ(((x - c.residue) % c.modulus + c.modulus) % c.modulus, 0);
  }
}

TEST(Congruence, LinearSolverAgainstScan) {
  for (std::uint64_t n : {1u, 12u, 63u, 255u, 360u}) {
    for (std::uint64_t a = 0; a < n; a += 1 + n / 40) {
      for (std::uint64_t b = 0; b < n; b += 1 + n / 30) {
        std::vector<std::uint64_t> want;
        for (std::uint64_t d = 0; d < n; ++d) {
          if (a * d % n == b % n) want.push_back(d);
        }
        ASSERT_EQ(solve_linear_congruence(a, b, n), want) << a << "d=" << b << " mod " << n;
      }
    }
  }
  EXPECT_EQ(solve_linear_congruence(2, 49, 255), (std::vector<std::uint64_t>{152}));
  EXPECT_THROW(solve_linear_congruence(1, 1, 0), std::invalid_argument);
}

TEST(Congruence, Inverse) {
  EXPECT_EQ(inverse_mod(3, 7), 5u);
  EXPECT_EQ(inverse_mod(53, 63), 44u);
  EXPECT_FALSE(inverse_mod(6, 9));
  EXPECT_EQ(inverse_mod(5, 1), 0u);
}

TEST(Lemma61, Examples) {
  EXPECT_TRUE(lemma61_screen({3, 6, 3}, 1));
  EXPECT_FALSE(lemma61_screen({11, 10, 4}, 3));
}

TEST(Lemma61, ScreenedFamiliesNeverPermute) {
  int screened = 0;
  for (int m = 1; m <= 6; ++m) {
    const FieldCtx big = new_field(2 * m);
    for (int r = 1; r <= 12; ++r) {
      for (int a = 2; a <= 12; ++a) {
        for (int b = 1; b < a; ++b) {
          const TrinomialFamily fam{r, a, b};
          if (!lemma61_screen(fam, m)) continue;
          ++screened;
          ASSERT_FALSE(is_permutation_bruteforce(big, instantiate(fam, big))) << fam.to_string() << " m=" << m;
        }
      }
    }
  }
  EXPECT_GT(screened, 0);
}

TEST(Step1, Examples) {
  const ExpPoly f1 = instantiate(kF1, 3);
  EXPECT_EQ(step1_exponent_match(f1, f1).front(), 1u);
  EXPECT_TRUE(step1_exponent_match(f1, row(1, 3)).empty());
  // f6(x) = f5(x^53), i.e. f5 = f6(x^44).
  const auto fwd = step1_exponent_match(row(6, 3), row(5, 3));
  EXPECT_NE(std::find(fwd.begin(), fwd.end(), 53u), fwd.end());
  const auto back = step1_exponent_match(row(5, 3), row(6, 3));
  EXPECT_NE(std::find(back.begin(), back.end(), 44u), back.end());
}

TEST(Step1, AgreesWithIndependentScan) {
  for (int m = 1; m <= 4; ++m) {
    const Word n = (Word{1} << (2 * m)) - 1;
    for (int i = 1; i <= 18; ++i) {
      for (int j = 1; j <= 18; ++j) {
        const ExpPoly f = row(i, m), g = row(j, m);
        const auto got = step1_exponent_match(f, g);
        ASSERT_EQ(got, oracle::exponent_scan(exps(f), exps(g), n)) << i << " vs " << j << " m=" << m;
        ASSERT_EQ(got, step1_exhaustive_scan(f, g, 3));
      }
    }
  }
}

TEST(Step2, Examples) {
  const FieldCtx big = new_field(6);
  const ExpPoly f1 = instantiate(kF1, big);
  EXPECT_EQ(step2_coefficient_solve(big, f1, f1, 1), std::make_pair(big.one(), big.one()));
  EXPECT_EQ(step2_coefficient_solve(big, row(6, 3), row(5, 3), 53), std::make_pair(big.one(), big.one()));
  for (Word x = 0; x < big.size(); ++x) {
    ASSERT_EQ(row(6, 3)(big.elem(x)), row(5, 3)(pow(big.elem(x), 53)));
  }
  EXPECT_THROW(step2_coefficient_solve(big, f1, f1, 2), std::invalid_argument);

  // Same support, unreachable coefficients: A1 A2 = A1 A2^2 = 1 forces A2 = 1.
  const FieldCtx f16 = new_field(4);
  const ExpPoly a = poly(f16, {{1, f16.one()}, {2, f16.one()}, {4, f16.one()}});
  const ExpPoly b = poly(f16, {{1, f16.one()}, {2, f16.one()}, {4, f16.x()}});
  EXPECT_FALSE(step2_coefficient_solve(f16, a, b, 1));
  EXPECT_FALSE(find_qm_witness(f16, a, b).witness);
}

TEST(Step2, CoefficientPatternUnreachableOverF4) {
  const FieldCtx f4 = new_field(2);
  const ExpPoly a = poly(f4, {{1, f4.one()}, {2, f4.one()}});
  const ExpPoly b = poly(f4, {{1, f4.one()}, {3, f4.one()}});
  EXPECT_FALSE(functional_witness_search(f4, a, b));
  EXPECT_TRUE(step1_exponent_match(a, b).empty());
}

TEST(QMEquivalent, Examples) {
  const FieldCtx f6 = new_field(6);
  const ExpPoly f1 = instantiate(kF1, f6);
  EXPECT_EQ(qm_equivalent(f6, f1, f1), (QMWitness{1, f6.one(), f6.one()}));
  EXPECT_FALSE(qm_equivalent(f6, f1, instantiate(kF2, f6)));
  const FieldCtx f8 = new_field(8);
  EXPECT_FALSE(qm_equivalent(f8, instantiate(kF1, f8), instantiate(kF3, f8)));
  EXPECT_THROW(qm_equivalent(f6, f1, instantiate(kF3, f6)), std::invalid_argument);
}

TEST(QMEquivalent, WitnessesVerifyAndInvert) {
  // Scale and twist a permutation, then recover the relation.
  std::mt19937_64 rng(31);
  for (int m : {2, 3, 4}) {
    const FieldCtx big = new_field(2 * m);
    const Word n = big.group_order();
    const ExpPoly g = instantiate(kF1, big);
    for (int t = 0; t < 4; ++t) {
      Word d = 0;
      while (std::gcd(d, n) != 1) d = 1 + rng() % (n - 1);
      const Elem a1 = big.elem(1 + rng() % n), a2 = big.elem(1 + rng() % n);
      std::vector<std::pair<Word, Elem>> terms;
      for (const auto& term : g.terms()) {
        terms.emplace_back(term.exp * d % n, a1 * term.coeff * pow(a2, term.exp));
      }
      const ExpPoly f = ExpPoly::make(big, terms);
      const auto w = qm_equivalent(big, f, g);
      ASSERT_TRUE(w);
      EXPECT_TRUE(verify_witness(big, f, g, *w));
      const QMWitness back = invert_witness(big, *w);
      EXPECT_TRUE(verify_witness(big, g, f, back));
      EXPECT_EQ(invert_witness(big, back), *w);
    }
  }
}

TEST(QMEquivalent, Transitive) {
  const int m = 3;
  const FieldCtx big = new_field(2 * m);
  const ExpPoly f5 = row(5, m), f6 = row(6, m);
  const auto w1 = qm_equivalent(big, f6, f5);
  const auto w2 = qm_equivalent(big, f5, f6);
  ASSERT_TRUE(w1 && w2);
  // f6 ~ f5 ~ f6 composes to a self-relation of f6.
  const Word d = w1->d * w2->d % big.group_order();
  const QMWitness comp{d, w1->a1 * w2->a1, w2->a2 * pow(w1->a2, w2->d)};
  EXPECT_TRUE(verify_witness(big, f6, f6, comp));
}

TEST(Lemma42, Examples) {
  EXPECT_EQ(lemma42_classify({11, 10, 4}, 1), SmallFieldTag::X);
  EXPECT_EQ(lemma42_classify({9, 8, 6}, 1), SmallFieldTag::X);
  EXPECT_EQ(lemma42_classify({7, 7, 5}, 2), SmallFieldTag::XOverF16);
  EXPECT_EQ(lemma42_classify({1, 2, 1}, 1), SmallFieldTag::XCubePlus);
  EXPECT_EQ(lemma42_classify({1, 3, 1}, 2), SmallFieldTag::Nontrivial);
  EXPECT_THROW(lemma42_classify(kF1, 3), std::invalid_argument);
  EXPECT_EQ(tag_name(SmallFieldTag::X), "X");
}

TEST(Lemma42, CrossCheckSample) {
  for (int m : {1, 2}) {
    for (int r = 1; r <= 7; ++r) {
      for (int a = 2; a <= 6; ++a) {
        for (int b = 1; b < a; ++b) {
          const auto c = lemma42_cross_check({r, a, b}, m);
          EXPECT_TRUE(c.consistent) << "(" << r << "," << a << "," << b << ") m=" << m;
          EXPECT_EQ(c.equivalent_to_cubic.has_value(), m == 1);
        }
      }
    }
  }
  const auto f1 = lemma42_cross_check(kF1, 1);
  EXPECT_TRUE(f1.permutes);
  EXPECT_TRUE(f1.equivalent_to_x);
  const auto f3 = lemma42_cross_check(kF3, 2);
  EXPECT_TRUE(f3.permutes);
  EXPECT_TRUE(f3.equivalent_to_x);
}

TEST(SwappedPartner, Shape) {
  const FieldCtx big = new_field(6);
  EXPECT_EQ(swapped_partner({3, 4, 3}, big), row(6, 3));
  EXPECT_EQ(swapped_partner({3, 4, 3}, big), instantiate({5, 4, 1}, big));
}

TEST(Conjecture, Examples) {
  const auto a = conjecture_witness({3, 4, 3}, 3);
  EXPECT_EQ(a.witness.d, 53u);
  EXPECT_TRUE(a.pointwise);
  EXPECT_TRUE(a.congruences_hold);
  EXPECT_EQ(a.closed_form, 53u);
  EXPECT_TRUE(a.closed_form_agrees);

  const auto b = conjecture_witness({2, 3, 2}, 4);
  EXPECT_EQ(2 * b.witness.d % 255, 49u);
  EXPECT_TRUE(b.pointwise);

  // r = alpha: the Frobenius x -> x^q.
  const auto c = conjecture_witness({3, 3, 1}, 3);
  EXPECT_EQ(c.witness.d, 8u);
  EXPECT_TRUE(c.pointwise);

  EXPECT_THROW(conjecture_witness(kF1, 5), std::invalid_argument);
}

TEST(Audit, Examples) {
  const auto a = integer_congruence_audit(3, 4, 3, 8);
  EXPECT_EQ(a.d, 53u);
  EXPECT_TRUE(a.even);
  EXPECT_TRUE(a.coprime);
  EXPECT_TRUE(a.first && a.second && a.third);
  EXPECT_TRUE(a.closed_form_agrees);

  const auto b = integer_congruence_audit(3, 4, 3, 9);
  EXPECT_FALSE(b.even);
  ASSERT_TRUE(b.d);
  EXPECT_EQ(b.branch, "case1");
  // d = -1 modulo (q+1)/2 and r d = alpha (q+1) - r modulo q^2 - 1
  EXPECT_EQ((*b.d + 1) % 5, 0u);
  EXPECT_EQ(3 * *b.d % 80, 37u);

  const auto c = integer_congruence_audit(5, 10, 5, 4);
  EXPECT_EQ(c.branch, "lemma61");
  EXPECT_FALSE(c.d);

  EXPECT_THROW(integer_congruence_audit(3, 4, 3, 6), std::invalid_argument);
  EXPECT_THROW(integer_congruence_audit(2, 4, 3, 9), std::invalid_argument);
}

TEST(Audit, MatchesFieldWitnessForEvenQ) {
  for (int m = 2; m <= 5; ++m) {
    const std::uint64_t q = std::uint64_t{1} << m;
    for (int r = 1; r <= 9; r += 2) {
      for (int a = 2; a <= 7; ++a) {
        for (int b = 1; b < a; ++b) {
          if (std::gcd<std::uint64_t>(r, q - 1) != 1) continue;
          const auto audit = integer_congruence_audit(r, a, b, q);
          if (!audit.d || !audit.coprime) continue;
          const std::uint64_t n = q * q - 1;
          EXPECT_EQ(r * *audit.d % n, (a * (q + 1) - r) % n) << r << "," << a << "," << b << " q=" << q;
          EXPECT_TRUE(audit.third);
        }
      }
    }
  }
}
