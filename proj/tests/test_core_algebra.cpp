#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "knit/graded.hpp"
#include "knit/rational.hpp"

using namespace knit;

namespace {

  Rational q(std::int64_t n, std::int64_t d = 1) {
    return Rational(n) / Rational(d);
  }

  GradedBasis z2_basis() {
    return GradedBasis({{"u", 0}, {"v", 0}, {"s", 1}, {"t", 1}}, GradingMode::Z2);
  }

  //! Random degree-preserving map on z2_basis() with entries in -2..2.
  GradedLinearMap random_even_map(std::mt19937& rng, GradedBasis const& b) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<GradedVector>          cols(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b.degree(i) == b.degree(j)) {
          cols[i].add_term(j, Rational(coef(rng)));
        }
      }
    }
    return GradedLinearMap(b, b, 0, std::move(cols));
  }

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("3"), q(3));
  EXPECT_EQ(Rational::parse("-7"), q(-7));
  EXPECT_EQ(Rational::parse("4/6"), q(2, 3));
  EXPECT_EQ(Rational::parse("-1/2"), q(-1, 2));
  EXPECT_EQ(Rational::parse("+5/10"), q(1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(),
            "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
  for (auto s : {"", "-", "1/", "/2", "1.5", "1e3", "a", "--1", "1/0", "1/-2", " 1"}) {
    EXPECT_THROW(Rational::parse(s), InvalidInput) << s;
  }
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(q(6, 4).str(), "3/2");
  EXPECT_EQ(q(-6, 3).str(), "-2");
  EXPECT_EQ(q(0, 5).str(), "0");
  std::ostringstream os;
  os << q(-1, 3);
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(Rational, FieldArithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_EQ(-q(2, 3), q(-2, 3));
  EXPECT_TRUE((q(1, 2) - q(2, 4)).is_zero());
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_EQ(q(-3, 4).numerator(), -3);
  EXPECT_EQ(q(-3, 4).denominator(), 4);
}

TEST(ParitySign, DependsOnlyOnParity) {
  EXPECT_EQ(parity_sign(1, 1, GradingMode::Z), q(-1));
  EXPECT_EQ(parity_sign(2, 3, GradingMode::Z), q(1));
  EXPECT_EQ(parity_sign(-1, 3, GradingMode::Z), q(-1));
  EXPECT_EQ(parity_sign(-2, -5, GradingMode::Z), q(1));
  EXPECT_EQ(parity_sign(0, 1, GradingMode::Z2), q(1));
  EXPECT_EQ(parity_sign(1, 1, GradingMode::Z2), q(-1));
  for (Degree a = -4; a <= 4; ++a) {
    for (Degree b = -4; b <= 4; ++b) {
      EXPECT_EQ(parity_sign(a, b, GradingMode::Z),
                parity_sign(a + 2, b - 2, GradingMode::Z));
      EXPECT_EQ(parity_sign(a, b, GradingMode::Z), parity_sign(b, a, GradingMode::Z));
    }
  }
}

TEST(ParitySign, RejectsIllegalZ2Degrees) {
  EXPECT_THROW(parity_sign(2, 1, GradingMode::Z2), InvalidInput);
  EXPECT_THROW(parity_sign(0, -1, GradingMode::Z2), InvalidInput);
}

TEST(GradedBasis, ValidatesEntries) {
  EXPECT_THROW(GradedBasis({{"x", 0}, {"x", 1}}, GradingMode::Z), InvalidInput);
  EXPECT_THROW(GradedBasis({{"", 0}}, GradingMode::Z), InvalidInput);
  EXPECT_THROW(GradedBasis({{"x", 2}}, GradingMode::Z2), InvalidInput);
  EXPECT_NO_THROW(GradedBasis({{"x", 2}, {"y", -3}}, GradingMode::Z));
  EXPECT_EQ(GradedBasis({}, GradingMode::Z).size(), 0u);
}

TEST(GradedBasis, LookupAndDegreeArithmetic) {
  auto b = z2_basis();
  EXPECT_EQ(b.index_of("s"), 2u);
  EXPECT_FALSE(b.find("w").has_value());
  EXPECT_THROW(b.index_of("w"), InvalidInput);
  EXPECT_EQ(b.add(1, 1), 0);
  EXPECT_EQ(b.sign(2, 3), -1);
  EXPECT_EQ(b.sign(0, 3), 1);
  GradedBasis z({{"a", 3}}, GradingMode::Z);
  EXPECT_EQ(z.add(3, 4), 7);
}

TEST(GradedVector, SparseAndExact) {
  GradedVector v;
  v.add_term(1, q(1, 2));
  v.add_term(1, q(-1, 2));
  EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(v.terms().empty());
  auto w = GradedVector::unit(0, q(3)) + GradedVector::unit(2, q(1, 3));
  EXPECT_EQ(w.coefficient(0), q(3));
  EXPECT_EQ(w.coefficient(1), q(0));
  EXPECT_TRUE((q(3) * w - w - w - w).is_zero());
  EXPECT_EQ(to_string(w, z2_basis()), "3*u + 1/3*s");
  EXPECT_EQ(to_string(GradedVector(), z2_basis()), "0");
}

TEST(GradedVector, HomogeneousDegree) {
  auto b = z2_basis();
  EXPECT_EQ(homogeneous_degree(GradedVector::unit(2) + GradedVector::unit(3), b), 1);
  EXPECT_FALSE(homogeneous_degree(GradedVector::unit(0) + GradedVector::unit(3), b));
  EXPECT_THROW(require_in(GradedVector::unit(7), b, "v"), BasisMismatch);
}

TEST(GradedLinearMap, EnforcesDegreeShift) {
  auto b = z2_basis();
  // u -> s changes parity, so it needs an odd shift.
  std::vector<GradedVector> cols(4);
  cols[0] = GradedVector::unit(2);
  EXPECT_THROW(GradedLinearMap(b, b, 0, cols), InvalidInput);
  EXPECT_NO_THROW(GradedLinearMap(b, b, 1, cols));
  EXPECT_EQ(GradedLinearMap(b, b, 3, cols).degree_shift(), 1);
  EXPECT_THROW(GradedLinearMap(b, b, 0, std::vector<GradedVector>(3)), InvalidInput);
}

TEST(GradedLinearMap, CompositionIsAssociativeAndUnital) {
  std::mt19937 rng(20241);
  auto         b  = z2_basis();
  auto         id = GradedLinearMap::identity(b);
  for (int trial = 0; trial < 50; ++trial) {
    auto m1 = random_even_map(rng, b);
    auto m2 = random_even_map(rng, b);
    auto m3 = random_even_map(rng, b);
    EXPECT_EQ(compose_graded_maps(m3, compose_graded_maps(m2, m1)),
              compose_graded_maps(compose_graded_maps(m3, m2), m1));
    EXPECT_EQ(compose_graded_maps(id, m1), m1);
    EXPECT_EQ(compose_graded_maps(m1, id), m1);
    // Composition agrees with applying the maps in turn.
    auto v = GradedVector::unit(0, q(2)) + GradedVector::unit(3, q(-1, 5));
    EXPECT_EQ(apply_graded_map(compose_graded_maps(m2, m1), v),
              apply_graded_map(m2, apply_graded_map(m1, v)));
  }
}

TEST(GradedLinearMap, ApplyIsLinear) {
  std::mt19937 rng(7);
  auto         b = z2_basis();
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_even_map(rng, b);
    auto x = GradedVector::unit(trial % 4, q(trial, 3));
    auto y = GradedVector::unit((trial + 1) % 4, q(-2));
    EXPECT_EQ(apply_graded_map(m, x + q(5) * y),
              apply_graded_map(m, x) + q(5) * apply_graded_map(m, y));
  }
}

TEST(GradedLinearMap, ShapeErrors) {
  auto b = z2_basis();
  GradedBasis c({{"u", 0}}, GradingMode::Z2);
  auto m = GradedLinearMap::zero(c, b);
  EXPECT_THROW(compose_graded_maps(m, m), BasisMismatch);
  EXPECT_THROW(add_maps(m, GradedLinearMap::zero(c, b, 1)), BasisMismatch);
  EXPECT_THROW(apply_graded_map(m, GradedVector::unit(2)), BasisMismatch);
  GradedBasis zb({{"u", 0}}, GradingMode::Z);
  EXPECT_THROW(GradedLinearMap::zero(zb, c), InvalidInput);
}

TEST(GradedLinearMap, MapByNames) {
  auto        b = z2_basis();
  GradedBasis sub({{"t", 1}, {"u", 0}}, GradingMode::Z2);
  auto        m = map_by_names(sub, b);
  EXPECT_EQ(m.column(0), GradedVector::unit(3));
  EXPECT_EQ(m.column(1), GradedVector::unit(0));
}
