#include <gtest/gtest.h>

#include "sw1pers/field.hpp"

using namespace sw1pers;

TEST(FieldPrime, RejectsComposites) {
  for (std::uint32_t n : {0u, 1u, 4u, 9u, 65536u, 70001u}) EXPECT_THROW(FieldPrime{n}, Error) << n;
  try {
    FieldPrime f(15);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(FieldPrime, InversesMultiplyToOne) {
  for (std::uint32_t p : {2u, 3u, 5u, 11u, 101u, 65521u}) {
    FieldPrime f(p);
    for (std::uint32_t a = 1; a < p; a += (p > 1000 ? 97 : 1)) EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << p << " " << a;
  }
}

TEST(FieldPrime, ArithmeticMatchesIntegerResidues) {
  FieldPrime f(11);
  for (long long a = -30; a <= 30; ++a)
    for (long long b = -30; b <= 30; ++b) {
      const auto ra = f.from_int(a), rb = f.from_int(b);
      EXPECT_EQ(f.add(ra, rb), f.from_int(a + b));
      EXPECT_EQ(f.sub(ra, rb), f.from_int(a - b));
      EXPECT_EQ(f.mul(ra, rb), f.from_int(a * b));
    }
  EXPECT_EQ(f.neg(0), 0u);
  EXPECT_EQ(f.add(f.neg(4), 4), 0u);
}

TEST(FieldPrime, LargestPrimeProductsDoNotOverflow) {
  FieldPrime f(65521);
  EXPECT_EQ(f.mul(65520, 65520), 1u);  // (-1)^2
}
