// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polygraph {

/// Coefficient domain tag: characteristic 0 means exact rationals,
/// otherwise a prime p names GF(p).
struct FieldSpec {
  std::uint64_t characteristic = 0;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// GF(p) with a runtime modulus. Values are canonical representatives in [0, p).
class PrimeField {
public:
  using Value = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (p >= (1ull << 31)) throw std::invalid_argument("prime modulus too large");
  }

  std::uint64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec{p_}; }

  Value zero() const { return 0; }
  Value one() const { return 1 % p_; }
  bool is_zero(Value a) const { return a == 0; }
  bool eq(Value a, Value b) const { return a == b; }

  Value from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Value>(r);
  }

  Value add(Value a, Value b) const {
    Value s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  Value mul(Value a, Value b) const { return (a * b) % p_; }
  Value pow(Value a, std::uint64_t e) const {
    Value r = one(), base = a % p_;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Value inv(Value a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF(p)");
    return pow(a, p_ - 2);
  }
  Value div(Value a, Value b) const { return mul(a, inv(b)); }

  std::string to_string(Value a) const { return std::to_string(a); }
  Value parse(const std::string& s) const {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("invalid GF(p) coefficient: " + s);
    return from_int(v);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint64_t p_;
};

/// Exact rational arithmetic, arbitrary precision, always in reduced form.
class RationalField {
public:
  using Value = mpq_class;

  FieldSpec spec() const { return FieldSpec{0}; }

  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
  bool eq(const Value& a, const Value& b) const { return a == b; }

  Value from_int(long long v) const {
    Value r;
    r = static_cast<signed long>(v);
    return r;
  }

  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, std::uint64_t e) const {
    Value r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  }
  Value inv(const Value& a) const {
    if (is_zero(a)) throw std::invalid_argument("division by zero rational");
    return Value(1) / a;
  }
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

  std::string to_string(const Value& a) const { return a.get_str(); }
  Value parse(const std::string& s) const {
    try {
      Value v(s, 10);
      v.canonicalize();
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid rational coefficient: " + s);
    }
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

private:
};

/// Smallest primitive root modulo a prime p.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_root requires a prime");
  if (p == 2) return 1;
  std::uint64_t order = p - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = order;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      prime_factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);
  PrimeField f(p);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (std::uint64_t q : prime_factors) {
      if (f.pow(g, order / q) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

/// Element of multiplicative order exactly k in GF(p). Requires k | p-1.
/// Convention: power of the smallest primitive root, so the result is canonical.
inline std::uint64_t root_of_unity(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw std::invalid_argument("root_of_unity requires a prime modulus");
  if (k == 0 || (p - 1) % k != 0)
    throw std::invalid_argument("GF(" + std::to_string(p) + ") has no element of order " + std::to_string(k));
  PrimeField f(p);
  return f.pow(primitive_root(p), (p - 1) / k);
}

}  // namespace polygraph
