#include "gmm/arith.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "gmm/errors.hpp"

namespace gmm {

namespace {

const std::vector<unsigned long>& small_primes(unsigned long bound) {
  static std::mutex mutex;
  static std::vector<unsigned long> primes;
  static unsigned long sieved_to = 0;
  std::lock_guard lock(mutex);
  if (sieved_to < bound) {
    std::vector<bool> composite(bound + 1, false);
    primes.clear();
    for (unsigned long i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    sieved_to = bound;
  }
  return primes;
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Brent's variant of Pollard rho; returns a nontrivial divisor or nullopt.
std::optional<Integer> brent_split(const Integer& n, unsigned long c,
                                   unsigned long max_iterations) {
  auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
  Integer y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1, iterations = 0;
  constexpr unsigned long kBatch = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long batch = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < batch; ++i) {
        y = step(y);
        q = (q * abs_value(Integer(x - y))) % n;
      }
      g = gcd(q, n);
      k += batch;
      iterations += batch;
      if (iterations > max_iterations) return std::nullopt;
    }
    r *= 2;
  }
  if (g == n) {
    // Batched gcd overshot; walk back one step at a time.
    do {
      ys = step(ys);
      g = gcd(abs_value(Integer(x - ys)), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void factor_cofactor(const Integer& m, const FactorOptions& options,
                     std::map<Integer, long>& out, long multiplicity = 1) {
  if (m == 1) return;
  if (is_probable_prime(m)) {
    out[m] += multiplicity;
    return;
  }
  // m = r^k: factor r once. Rho is hopeless on squares of large primes.
  if (mpz_perfect_power_p(m.backend().data())) {
    const auto bits = static_cast<unsigned long>(mpz_sizeinbase(m.backend().data(), 2));
    for (unsigned long k = bits; k >= 2; --k) {
      Integer root;
      if (mpz_root(root.backend().data(), m.backend().data(), k)) {
        factor_cofactor(root, options, out, multiplicity * static_cast<long>(k));
        return;
      }
    }
  }
  for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
    if (auto d = brent_split(m, 1 + 2 * attempt, options.rho_iterations)) {
      factor_cofactor(*d, options, out, multiplicity);
      factor_cofactor(Integer(m / *d), options, out, multiplicity);
      return;
    }
  }
  throw UnfactoredCofactorError(m);
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.backend().data(), 32) > 0;
}

Prime::Prime(Integer value) : value_(std::move(value)) {
  if (!is_probable_prime(value_))
    throw DomainError("not a prime: " + value_.str());
}

Order ord_p(const Integer& x, const Prime& p) {
  if (x == 0) return Order::infinity();
  long e = 0;
  Integer rest = abs_value(x);
  while (rest % p.value() == 0) {
    rest /= p.value();
    ++e;
  }
  return e;
}

Order ord_p(const Rational& x, const Prime& p) {
  if (x == 0) return Order::infinity();
  return Order(ord_p(Integer(numerator(x)), p).value() -
               ord_p(Integer(denominator(x)), p).value());
}

std::vector<PrimePower> factor(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<Integer, long> found;
  Integer rest = abs_value(n);
  for (unsigned long p : small_primes(options.trial_bound)) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[Integer(p)];
    }
  }
  if (rest > 1) {
    if (rest <= Integer(options.trial_bound) * options.trial_bound)
      ++found[rest];  // no divisor below its square root
    else
      factor_cofactor(rest, options, found);
  }
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({Prime(p), e});
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(Integer(a / gcd(a, b) * b));
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return make_rational(pow(Integer(numerator(base)), e),
                       pow(Integer(denominator(base)), e));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num, den);  // gmp canonicalizes
}

ContentSplit content_and_primitive(const std::vector<Rational>& coeffs) {
  Integer num_gcd = 0, den_lcm = 1;
  const Rational* first = nullptr;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    if (!first) first = &c;
    num_gcd = gcd(num_gcd, Integer(numerator(c)));
    den_lcm = lcm(den_lcm, Integer(denominator(c)));
  }
  if (!first) throw DomainError("content of an all-zero list");
  Rational content = make_rational(num_gcd, den_lcm);
  if (*first < 0) content = -content;
  ContentSplit out{content, {}};
  out.primitive.reserve(coeffs.size());
  for (const auto& c : coeffs) out.primitive.push_back(numerator(c / content));
  return out;
}

std::string to_string(const Rational& x) { return x.str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::string_view digits = s;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
      digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("malformed rational literal '" + std::string(text) +
                       "'");
    Integer v{std::string(digits)};
    return s[0] == '-' ? Integer(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace gmm
