/**
 * @file sparse_poly.hpp
 * @brief Sparse multivariate polynomials over Scalar, keyed by exponent
 *        vectors. Canonical form: no stored zero coefficients, all exponent
 *        vectors of the declared length.
 */
#ifndef CHOWKIT_SPARSE_POLY_HPP
#define CHOWKIT_SPARSE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowkit/scalar.hpp"

namespace chowkit {

class SparsePoly {
 public:
  using Expo = std::vector<std::uint32_t>;

  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Scalar& c);
  /// The variable x_i.
  static SparsePoly variable(int nvars, int i);
  /// Univariate polynomial from a low-to-high coefficient list (nvars = 1).
  static SparsePoly univariate(const std::vector<Scalar>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  /// Adds c * x^e, dropping the term if the sum cancels.
  void add_term(const Expo& e, const Scalar& c);

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Scalar& c) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o) { return *this += -o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;

  /// Exact evaluation. point.size() must equal nvars().
  Scalar eval(const std::vector<Scalar>& point) const;

  /// Exact quotient *this / d. Throws std::domain_error when not divisible.
  SparsePoly exact_div(const SparsePoly& d) const;

  // -- univariate helpers (nvars == 1) --
  long degree1() const;           ///< degree in the single variable
  Scalar coeff1(long i) const;    ///< coefficient of x^i
  std::vector<Scalar> coeffs1() const;  ///< low-to-high, length degree1()+1
  SparsePoly derivative1() const;
  /// Makes the leading coefficient 1 (field coefficients).
  SparsePoly monic1() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Expo, Scalar> terms_;
};

/// Monic gcd of univariate polynomials over a field.
/// Throws std::invalid_argument if both inputs are zero.
SparsePoly gcd_univariate(const SparsePoly& f, const SparsePoly& g);

std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

}  // namespace chowkit

#endif  // CHOWKIT_SPARSE_POLY_HPP
