#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gmm {

// Expression templates are off so both types behave as plain value types
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// A positive rational prime. Primality is checked on construction.
class Prime {
 public:
  explicit Prime(Integer value);
  explicit Prime(long value) : Prime(Integer(value)) {}

  const Integer& value() const { return value_; }
  operator const Integer&() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const Prime&, const Prime&) = default;
  friend auto operator<=>(const Prime& a, const Prime& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

 private:
  Integer value_;
};

/// Integer extended by +infinity, the value group of ord_p plus ord_p(0).
class Order {
 public:
  constexpr Order(long value) : value_(value), infinite_(false) {}
  static constexpr Order infinity() { return Order(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Precondition: finite.
  constexpr long value() const { return value_; }

  friend constexpr bool operator==(const Order&, const Order&) = default;
  friend constexpr std::strong_ordering operator<=>(const Order& a,
                                                    const Order& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Order operator+(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Order(a.value_ + b.value_);
  }

 private:
  constexpr Order(long value, bool infinite)
      : value_(value), infinite_(infinite) {}
  long value_;
  bool infinite_;
};

/// Exponent of p in a nonzero integer; +infinity for zero.
Order ord_p(const Integer& x, const Prime& p);
Order ord_p(const Rational& x, const Prime& p);

struct PrimePower {
  Prime prime;
  long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactorOptions {
  /// Trial division bound.
  unsigned long trial_bound = 1'000'000;
  /// Pollard-Brent iterations per attempt, and attempts per composite.
  unsigned long rho_iterations = 250'000;
  unsigned rho_attempts = 4;
};

/// Factorization of |n| in ascending prime order. Throws DomainError for
/// n = 0 and UnfactoredCofactorError when the budget runs out.
std::vector<PrimePower> factor(const Integer& n, const FactorOptions& = {});

/// Probable-prime test (Miller-Rabin, 32 rounds after trial division).
bool is_probable_prime(const Integer& n);

struct ContentSplit {
  Rational content;
  std::vector<Integer> primitive;
};

/// coeffs = content * primitive, with primitive coprime integers whose first
/// nonzero entry is positive. The content carries the sign.
ContentSplit content_and_primitive(const std::vector<Rational>& coeffs);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);
/// base^exponent for any integer exponent; base must be nonzero if exponent < 0.
Rational pow(const Rational& base, long exponent);
Rational make_rational(const Integer& num, const Integer& den);

/// "a" or "a/b", canonical.
std::string to_string(const Rational& x);
/// Parses "a" or "a/b" with optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);
bool fits_int64(const Integer& x);

}  // namespace gmm
