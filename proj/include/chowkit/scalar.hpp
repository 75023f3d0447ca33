/**
 * @file scalar.hpp
 * @brief Exact scalar ring: arbitrary-precision rationals or a prime field
 *        Z/p with a runtime modulus.
 *
 * A Scalar is either a reduced rational backed by GMP, or a residue in
 * [0,p) for a prime p checked at construction. Mixing rules: combining a
 * rational with a mod-p value coerces the rational into Z/p (error if its
 * denominator vanishes mod p); combining two mod-p values with different
 * moduli is an error. All operations are exact; there is no floating point
 * anywhere in this library.
 */
#ifndef CHOWKIT_SCALAR_HPP
#define CHOWKIT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace chowkit {

/// Default prime field modulus, 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// (a*b) mod m without overflow, m < 2^63.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// a^-1 mod p; throws std::domain_error if gcd(a,p) != 1.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

class Scalar {
 public:
  /// Rational zero.
  Scalar() : rat_(0) {}
  Scalar(int v) : rat_(v) {}
  Scalar(long v) : rat_(static_cast<signed long>(v)) {}
  explicit Scalar(const mpz_class& z) : rat_(z) {}
  explicit Scalar(mpq_class q) : rat_(std::move(q)) { rat_.canonicalize(); }

  /// num/den as a reduced rational. den must be nonzero.
  static Scalar rational(const mpz_class& num, const mpz_class& den);

  /// Residue r mod p. p must be prime (checked).
  static Scalar mod_p(std::uint64_t r, std::uint64_t p);

  /// Parses "3", "-3/4" or "5 mod 101".
  static Scalar parse(const std::string& s);

  bool is_mod() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t residue() const { return res_; }
  const mpq_class& rational_value() const;

  bool is_zero() const { return is_mod() ? res_ == 0 : rat_ == 0; }
  bool is_one() const { return is_mod() ? res_ == 1 % modulus_ : rat_ == 1; }
  bool is_integer() const;

  /// Image in Z/p. Throws std::domain_error if the denominator is 0 mod p.
  Scalar to_mod(std::uint64_t p) const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Exact field division; throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order used for canonical term maps. Mod-p sorts after rationals.
  bool operator<(const Scalar& o) const;

  /// "p/q" for rationals (plain integer when q=1), "r mod p" otherwise.
  std::string str() const;

 private:
  // Aligns the two operands into a common ring. Throws on modulus clash.
  static void align(Scalar& a, Scalar& b);

  mpq_class rat_;
  std::uint64_t res_ = 0;
  std::uint64_t modulus_ = 0;  // 0 means rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace chowkit

#endif  // CHOWKIT_SCALAR_HPP
