#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace epg;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a) / b; }

// Independent evaluation with plain integers scaled by 4 (all the right-hand
// sides have denominators dividing 4).
std::int64_t mlbl_rhs_x4(std::int64_t m, std::int64_t k) {
  return 4 * k * (m - 1) * m + 2 * m * m + 8 * (k + 1) * m;
}

std::int64_t mlbl2_rhs_x4(std::int64_t m, std::int64_t k) {
  const std::int64_t lo = (k + 1) / 2;
  const std::int64_t hi = k / 2 + 1;
  return 2 * m * (m - 1) * (2 * lo * hi + k) + m * m * (1 + (hi - lo) * (hi - lo));
}

}  // namespace

TEST(Fraction, Formatting) {
  EXPECT_EQ(to_fraction_string(q(141, 4)), "141/4");
  EXPECT_EQ(to_fraction_string(q(116)), "116");
  EXPECT_EQ(to_fraction_string(q(-3, 6)), "-1/2");
}

TEST(Lbl1, Examples) {
  EXPECT_TRUE(lbl1(4, 6, 2).violated);
  EXPECT_TRUE(lbl1(5, 11, 3).violated);
  const auto ok = lbl1(3, 3, 2);
  EXPECT_FALSE(ok.violated);
  // 18 >= 9 + sqrt(24) with both sides of the squared form exposed.
  EXPECT_EQ(ok.lhs, q(24));
  EXPECT_EQ(ok.rhs, q(81));
}

TEST(Lbl1, AgreesWithFloatingPointAwayFromTies) {
  for (std::int64_t m = 3; m <= 9; ++m) {
    for (std::int64_t n = m; n <= 60; ++n) {
      for (std::int64_t k = 0; k <= 8; ++k) {
        const double lhs = static_cast<double>((k + 1) * (m + n));
        const double rhs = static_cast<double>(m * n) + std::sqrt(2.0 * k * (m + n));
        if (std::abs(lhs - rhs) < 1e-9) continue;
        EXPECT_EQ(lbl1(m, n, k).violated, lhs < rhs) << m << ' ' << n << ' ' << k;
      }
    }
  }
}

TEST(Lbl1, RangeErrors) {
  EXPECT_THROW(lbl1(2, 5, 1), Error);
  EXPECT_THROW(lbl1(6, 5, 1), Error);
  EXPECT_THROW(lbl1(3, 5, -1), Error);
}

TEST(LblCrossings, Examples) {
  const auto a = lbl_crossings(3, 10, 1, 0);
  EXPECT_EQ(a.lhs, q(30));
  EXPECT_EQ(a.rhs, q(12));
  EXPECT_TRUE(a.violated);
  const auto b = lbl_crossings(3, 3, 4, 0);
  EXPECT_EQ(b.lhs, q(0));
  EXPECT_EQ(b.rhs, q(30));
  EXPECT_FALSE(b.violated);
  const auto c = lbl_crossings(4, 8, 2, 12);
  EXPECT_EQ(c.lhs, q(32));
  EXPECT_EQ(c.rhs, q(48));
  EXPECT_FALSE(c.violated);
  EXPECT_THROW(lbl_crossings(4, 8, 2, -1), Error);
}

TEST(AcpLower, Examples) {
  const auto a = acp_lower(3, 4, 1, 0, 0, 0);
  EXPECT_EQ(a.lhs, q(8));
  EXPECT_TRUE(a.violated);
  EXPECT_FALSE(acp_lower(3, 4, 5, 0, 0, 0).violated);
  EXPECT_EQ(acp_lower(3, 4, 5, 0, 0, 0).lhs, q(0));
  EXPECT_EQ(acp_lower(3, 4, 1, 1, 2, 3).rhs, q(8));
}

TEST(Mlbl, Examples) {
  const auto a = mlbl(4, 156, 5);
  EXPECT_EQ(a.lhs, q(156));
  EXPECT_EQ(a.rhs, q(116));
  EXPECT_TRUE(a.violated);
  const auto b = mlbl(4, 49, 4);
  EXPECT_EQ(b.lhs, q(98));
  EXPECT_EQ(b.rhs, q(96));
  EXPECT_TRUE(b.violated);
  const auto c = mlbl(3, 36, 3);
  EXPECT_EQ(c.lhs, q(36));
  EXPECT_EQ(c.rhs, q(93, 2));
  EXPECT_FALSE(c.violated);
}

TEST(Mlbl2, Examples) {
  const auto a = mlbl2(3, 36, 3);
  EXPECT_EQ(to_fraction_string(a.lhs), "36");
  EXPECT_EQ(to_fraction_string(a.rhs), "141/4");
  EXPECT_TRUE(a.violated);
  EXPECT_FALSE(mlbl2(3, 35, 3).violated);
  for (std::int64_t m = 3; m <= 6; ++m) EXPECT_FALSE(mlbl2(m, 1000, 2 * m - 1).violated);
}

TEST(Bounds, RhsMatchesIntegerOracle) {
  for (std::int64_t m = 3; m <= 10; ++m) {
    for (std::int64_t k = 0; k <= 20; ++k) {
      EXPECT_EQ(mlbl(m, m, k).rhs * 4, Rational(mlbl_rhs_x4(m, k)));
      EXPECT_EQ(mlbl2(m, m, k).rhs * 4, Rational(mlbl2_rhs_x4(m, k)));
    }
  }
}

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold_b2m3(3), q(95, 2));
  EXPECT_EQ(threshold_b2m3(4), q(117));
  EXPECT_THROW(threshold_b2m3(2), Error);
  for (std::int64_t m = 3; m <= 8; ++m) {
    const Rational t = threshold_b2m3(m);
    Integer n = boost::multiprecision::numerator(t) / boost::multiprecision::denominator(t);
    if (Rational(n) < t) ++n;
    EXPECT_TRUE(mlbl(m, n.convert_to<std::int64_t>(), 2 * m - 3).violated) << m;
  }
}

TEST(HeldtN, Examples) {
  EXPECT_EQ(heldt_n(4), 8);
  EXPECT_EQ(heldt_n(6), 34);
  EXPECT_EQ(heldt_n(7), 42);
  EXPECT_EQ(heldt_n(8), 92);
  for (std::int64_t bad : {-1, 0, 3, 5}) {
    try {
      heldt_n(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedM);
    }
  }
}

TEST(Verdict, Examples) {
  EXPECT_EQ(verdict(2, 5, 1, false).in_class, Membership::No);
  EXPECT_EQ(verdict(2, 4, 1, false).in_class, Membership::Yes);
  EXPECT_EQ(verdict(2, 5, 2, true).in_class, Membership::Yes);
  EXPECT_EQ(verdict(1, 9, 0, true).in_class, Membership::Yes);
  const auto s = verdict(3, 36, 3, true);
  EXPECT_EQ(s.in_class, Membership::No);
  EXPECT_EQ(s.reason.rfind("mlbl2", 0), 0u) << s.reason;
  EXPECT_EQ(verdict(3, 36, 4, true).in_class, Membership::Yes);
  EXPECT_EQ(verdict(3, 36, 3, false).in_class, Membership::Unknown);
  EXPECT_EQ(verdict(4, 6, 2, false).in_class, Membership::No);
  // b(K_{5,10}) is either 3 or 4.
  EXPECT_EQ(verdict(5, 10, 3, false).in_class, Membership::Unknown);
  EXPECT_THROW(verdict(5, 4, 1, false), Error);
}

TEST(Verdict, NeverContradictsItsInequalities) {
  for (std::int64_t m = 3; m <= 8; ++m) {
    for (std::int64_t n = m; n <= 500; n += (n < 60 ? 1 : 7)) {
      for (std::int64_t k = 0; k <= 14; ++k) {
        for (bool mono : {false, true}) {
          const auto v = verdict(m, n, k, mono);
          if (v.in_class != Membership::Yes) continue;
          EXPECT_FALSE(lbl1(m, n, k).violated);
          if (mono) {
            EXPECT_FALSE(mlbl(m, n, k).violated);
            EXPECT_FALSE(mlbl2(m, n, k).violated);
          }
        }
      }
    }
  }
}

TEST(Bounds, ViolationIsMonotoneInN) {
  for (std::int64_t m = 3; m <= 7; ++m) {
    for (std::int64_t k = 0; k < 2 * m - 2; ++k) {
      bool seen = false;
      bool seen2 = false;
      for (std::int64_t n = m; n <= 400; ++n) {
        const bool v = mlbl(m, n, k).violated;
        if (seen) {
          EXPECT_TRUE(v) << m << ' ' << n << ' ' << k;
        }
        seen = seen || v;
        const bool v2 = mlbl2(m, n, k).violated;
        if (seen2 && m - (k + 2) / 2 > 0) {
          EXPECT_TRUE(v2);
        }
        seen2 = seen2 || v2;
      }
    }
  }
}

TEST(Separations, HeldtWitnesses) {
  // K_{k+1, heldt_n(k+1)} is in B_k but not monotonic B_k.
  for (std::int64_t k = 7; k <= 12; ++k) {
    const auto v = mlbl(k + 1, heldt_n(k + 1), k);
    EXPECT_TRUE(v.violated) << k;
    // Closed forms of 4 (lhs - rhs) for odd and even k.
    const std::int64_t expect = k % 2 == 1 ? k * k * k * k - 3 * k * k * k - 19 * k * k - 9 * k - 10
                                           : k * k * k * k - 5 * k * k * k - 16 * k * k - 20 * k - 10;
    EXPECT_EQ((v.lhs - v.rhs) * 4, Rational(expect)) << k;
  }
}

TEST(Separations, LowerBendWitnesses) {
  for (std::int64_t k : {5, 7, 9}) {
    const auto v = mlbl(k + 1, heldt_n(k + 1), 2 * k - 8);
    EXPECT_TRUE(v.violated) << k;
    EXPECT_EQ(v.lhs - v.rhs, q(7, 2) * k * k + 7 * k + q(71, 2)) << k;
  }
  for (std::int64_t k : {6, 8}) {
    const auto v = mlbl(k + 1, heldt_n(k + 1), 2 * k - 9);
    EXPECT_TRUE(v.violated) << k;
    EXPECT_EQ(v.lhs - v.rhs, q(1, 4) * k * k * k + q(1, 4) * k * k + q(31, 2) * k + q(31, 2)) << k;
  }
  EXPECT_EQ(mlbl(6, 34, 2).lhs, q(272));
  EXPECT_EQ(mlbl(6, 34, 2).rhs, q(114));
}

TEST(BoundVerdictJson, FractionStrings) {
  const auto doc = to_json(mlbl2(3, 36, 3));
  EXPECT_EQ(doc["lhs"], "36");
  EXPECT_EQ(doc["rhs"], "141/4");
  EXPECT_EQ(doc["violated"], true);
  EXPECT_EQ(doc["name"], "mlbl2");
}
