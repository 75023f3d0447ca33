#include "chowkit/scalar.hpp"

#include <ostream>

namespace chowkit {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sufficient witness set for 64-bit integers (Sinclair).
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::mod_p(std::uint64_t r, std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime_u64(p))
    throw std::invalid_argument("Scalar: modulus is not a supported prime: " +
                                std::to_string(p));
  Scalar s;
  s.modulus_ = p;
  s.res_ = r % p;
  return s;
}

Scalar Scalar::parse(const std::string& s) {
  auto mod_pos = s.find(" mod ");
  if (mod_pos != std::string::npos) {
    std::uint64_t r = std::stoull(s.substr(0, mod_pos));
    std::uint64_t p = std::stoull(s.substr(mod_pos + 5));
    return mod_p(r, p);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
  q.canonicalize();
  return Scalar(q);
}

const mpq_class& Scalar::rational_value() const {
  if (is_mod()) throw std::domain_error("Scalar: not a rational");
  return rat_;
}

bool Scalar::is_integer() const {
  if (is_mod()) return true;
  return rat_.get_den() == 1;
}

Scalar Scalar::to_mod(std::uint64_t p) const {
  if (is_mod()) {
    if (modulus_ != p) throw std::domain_error("Scalar: modulus mismatch");
    return *this;
  }
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class den_mod = rat_.get_den() % pz;
  if (den_mod == 0)
    throw std::domain_error("Scalar: denominator vanishes mod p");
  mpz_class num_mod = rat_.get_num() % pz;
  if (num_mod < 0) num_mod += pz;
  std::uint64_t num = num_mod.get_ui();
  std::uint64_t den = den_mod.get_ui();
  return mod_p(mulmod_u64(num, invmod_u64(den, p), p), p);
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.modulus_ == b.modulus_) return;
  if (a.modulus_ != 0 && b.modulus_ != 0)
    throw std::domain_error("Scalar: mixing different prime fields");
  if (a.modulus_ != 0)
    b = b.to_mod(a.modulus_);
  else
    a = a.to_mod(b.modulus_);
}

Scalar Scalar::operator-() const {
  if (is_mod()) return mod_p(res_ == 0 ? 0 : modulus_ - res_, modulus_);
  Scalar s;
  s.rat_ = -rat_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (a.is_mod()) {
    std::uint64_t r = a.res_ + b.res_;
    if (r >= a.modulus_) r -= a.modulus_;
    a.res_ = r;
    return a;
  }
  a.rat_ += b.rat_;
  return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (a.is_mod()) {
    a.res_ = mulmod_u64(a.res_, b.res_, a.modulus_);
    return a;
  }
  a.rat_ *= b.rat_;
  return a;
}

Scalar Scalar::operator/(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (a.is_mod()) {
    a.res_ = mulmod_u64(a.res_, invmod_u64(b.res_, a.modulus_), a.modulus_);
    return a;
  }
  a.rat_ /= b.rat_;
  return a;
}

Scalar Scalar::inv() const { return Scalar(1) / *this; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r(1), b = *this;
  if (is_mod()) r = mod_p(1, modulus_);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (a.is_mod()) return a.res_ == b.res_;
  return a.rat_ == b.rat_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (is_mod() != o.is_mod()) return !is_mod();
  if (is_mod()) {
    if (modulus_ != o.modulus_) return modulus_ < o.modulus_;
    return res_ < o.res_;
  }
  return rat_ < o.rat_;
}

std::string Scalar::str() const {
  if (is_mod())
    return std::to_string(res_) + " mod " + std::to_string(modulus_);
  return rat_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace chowkit
