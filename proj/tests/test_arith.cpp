#include <gtest/gtest.h>

#include "gmm/arith.hpp"
#include "gmm/errors.hpp"
#include "support.hpp"

namespace gmm {
namespace {

using testing::Q;

TEST(Ord, Examples) {
  EXPECT_EQ(ord_p(Integer(12), Prime(2)), Order(2));
  EXPECT_EQ(ord_p(Q("1/9"), Prime(3)), Order(-2));
  EXPECT_EQ(ord_p(Q("0"), Prime(5)), Order::infinity());
  EXPECT_TRUE(ord_p(Integer(0), Prime(5)).is_infinite());
  EXPECT_EQ(ord_p(Q("-50/7"), Prime(7)), Order(-1));
}

TEST(Ord, InfinityOrdering) {
  EXPECT_LT(Order(1000000), Order::infinity());
  EXPECT_EQ(Order(3) + Order::infinity(), Order::infinity());
  EXPECT_EQ(Order(3) + Order(-5), Order(-2));
}

TEST(Prime, RejectsComposites) {
  EXPECT_THROW(Prime(1), DomainError);
  EXPECT_THROW(Prime(0), DomainError);
  EXPECT_THROW(Prime(-3), DomainError);
  EXPECT_THROW(Prime(91), DomainError);
  EXPECT_NO_THROW(Prime(Integer("170141183460469231731687303715884105727")));
}

TEST(Factor, Examples) {
  EXPECT_EQ(factor(Integer(360)),
            (std::vector<PrimePower>{{Prime(2), 3}, {Prime(3), 2}, {Prime(5), 1}}));
  EXPECT_TRUE(factor(Integer(1)).empty());
  EXPECT_EQ(factor(Integer(-97)), (std::vector<PrimePower>{{Prime(97), 1}}));
  EXPECT_THROW(factor(Integer(0)), DomainError);
}

TEST(Factor, BeyondTrialDivision) {
  // Two primes above the trial bound, found by rho.
  const Integer p("1000000007"), q("998244353");
  const auto f = factor(p * p * q * 12);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[2], (PrimePower{Prime(q), 1}));
  EXPECT_EQ(f[3], (PrimePower{Prime(p), 2}));
}

TEST(Factor, PerfectPowers) {
  const Integer q("1000000000000000003");
  EXPECT_EQ(factor(pow(q, 3) * 4),
            (std::vector<PrimePower>{{Prime(2), 2}, {Prime(q), 3}}));
  const Integer r("1000000007");
  EXPECT_EQ(factor(pow(Integer(r * 998244353), 2)),
            (std::vector<PrimePower>{{Prime(998244353), 2}, {Prime(r), 2}}));
}

TEST(Factor, BudgetErrorCarriesCofactor) {
  const Integer p("1000000000000000003"), q("1000000000000000009");
  FactorOptions tight;
  tight.trial_bound = 100;
  tight.rho_iterations = 10;
  tight.rho_attempts = 1;
  try {
    factor(p * q * 8, tight);
    FAIL() << "expected a budget error";
  } catch (const UnfactoredCofactorError& e) {
    EXPECT_EQ(e.cofactor(), p * q);
  }
}

TEST(Factor, RandomProductsRoundTrip) {
  testing::Random rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Integer n = rng.integer(1, 1'000'000'000) * Integer(rng.integer(1, 1'000'000));
    Integer product = 1;
    for (const auto& [p, e] : factor(n)) {
      EXPECT_GE(e, 1);
      EXPECT_TRUE(is_probable_prime(p.value()));
      product *= pow(p.value(), static_cast<unsigned long>(e));
    }
    EXPECT_EQ(product, n);
  }
}

TEST(Content, Examples) {
  auto split = content_and_primitive({Q("4/3"), Q("2"), Q("2/3")});
  EXPECT_EQ(split.content, Q("2/3"));
  EXPECT_EQ(split.primitive, (std::vector<Integer>{2, 3, 1}));

  split = content_and_primitive({Q("1"), Q("1")});
  EXPECT_EQ(split.content, Q("1"));
  EXPECT_EQ(split.primitive, (std::vector<Integer>{1, 1}));

  split = content_and_primitive({Q("-2"), Q("-4")});
  EXPECT_EQ(split.content, Q("-2"));
  EXPECT_EQ(split.primitive, (std::vector<Integer>{1, 2}));

  split = content_and_primitive({Q("0"), Q("-3/2"), Q("3")});
  EXPECT_EQ(split.content, Q("-3/2"));
  EXPECT_EQ(split.primitive, (std::vector<Integer>{0, 1, -2}));

  EXPECT_THROW(content_and_primitive({Q("0"), Q("0")}), DomainError);
  EXPECT_THROW(content_and_primitive({}), DomainError);
}

TEST(Content, RoundTrip) {
  testing::Random rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> coeffs;
    const int len = static_cast<int>(rng.integer(1, 6));
    for (int i = 0; i < len; ++i) coeffs.push_back(rng.rational(40));
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; }))
      coeffs[0] = 1;
    const auto split = content_and_primitive(coeffs);
    Integer g = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      EXPECT_EQ(split.content * split.primitive[i], coeffs[i]);
      g = gcd(g, split.primitive[i]);
    }
    EXPECT_EQ(g, 1);
    const auto first = std::find_if(split.primitive.begin(), split.primitive.end(),
                                    [](const Integer& v) { return v != 0; });
    EXPECT_GT(*first, 0);
  }
}

TEST(Ord, IsAValuation) {
  testing::Random rng(3);
  const std::vector<Prime> primes{Prime(2), Prime(3), Prime(5), Prime(7)};
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = rng.nonzero_rational(200), y = rng.nonzero_rational(200);
    for (const auto& p : primes) {
      EXPECT_EQ(ord_p(Rational(x * y), p), ord_p(x, p) + ord_p(y, p));
      const Order a = ord_p(x, p), b = ord_p(y, p);
      const Order sum = ord_p(Rational(x + y), p);
      EXPECT_GE(sum, std::min(a, b));
      if (a != b) EXPECT_EQ(sum, std::min(a, b));
    }
  }
}

TEST(Ord, RebuildsFromFactorization) {
  testing::Random rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational x = rng.nonzero_rational(5000);
    Rational rebuilt = x < 0 ? -1 : 1;
    for (const Integer& part : {Integer(numerator(x)), Integer(denominator(x))})
      for (const auto& [p, e] : factor(part)) {
        (void)e;
        rebuilt *= pow(Rational(p.value()), ord_p(x, p).value());
      }
    EXPECT_EQ(rebuilt, x);
  }
}

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(Q("-6/4")), "-3/2");
  EXPECT_EQ(to_string(Q("+7")), "7");
  EXPECT_THROW(Q("1/0"), ParseError);
  EXPECT_THROW(Q("x"), ParseError);
  EXPECT_THROW(Q(""), ParseError);
  EXPECT_EQ(Q("-12345678901234567890123/3"), make_rational(Integer("-4115226300411522630041"), 1));
}

}  // namespace
}  // namespace gmm
