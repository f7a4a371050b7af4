#pragma once

// Exact arithmetic over Z[A, A^-1] and its localization at d = -A^-2 - A^2.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpoly/error.hpp"

namespace wpoly {

using Integer = mpz_class;

/// Integer-coefficient Laurent polynomial in one variable (printed as A by
/// default).  Stored densely from the lowest nonzero exponent; both ends of
/// the coefficient vector are nonzero and the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Integer& c, int exponent);
  static LaurentPoly A(int exponent = 1) { return monomial(1, exponent); }
  /// d = -A^-2 - A^2, the value of one extra circle.
  static const LaurentPoly& d();
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPoly from_terms(
      const std::vector<std::pair<int, Integer>>& terms);
  static LaurentPoly parse(std::string_view text, char var = 'A');

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent; both 0 for the zero polynomial.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return is_zero() ? 0 : high() - low(); }
  Integer coeff(int exponent) const;
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }
  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;
  /// Dense coefficients from low() to high() (interior zeros included).
  const std::vector<Integer>& dense() const { return coeffs_; }

  bool is_monomial() const { return term_count() == 1; }
  /// +-A^k.
  bool is_unit() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) {
    return a *= k;
  }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by A^k.
  LaurentPoly shifted(int k) const;
  /// Integer power.  Negative exponents are allowed only for units +-A^k.
  LaurentPoly pow(int e) const;
  /// Image under A -> A^-1.
  LaurentPoly mirrored() const;
  /// Image under A -> A^k (k != 0).
  LaurentPoly substitute_power(int k) const;

  /// Sum of squared coefficients.
  Integer l2_norm_sq() const;

  /// Horner evaluation; throws when z == 0 and there are negative exponents.
  std::complex<double> eval(std::complex<double> z) const;
  std::complex<long double> eval(std::complex<long double> z) const;
  /// Sum |c_k| |z|^k, the scale against which evaluation error is measured.
  long double abs_scale(std::complex<long double> z) const;

  /// Canonical text form, descending exponents: "-A^4 - A^-4".
  std::string to_string(char var = 'A') const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Quotient of f by g, or nullopt when g does not divide f in Z[A, A^-1].
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f,
                                         const LaurentPoly& g);
/// Quotient of f by g; throws NotDivisible when there is a remainder.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);
/// d^k as a Laurent polynomial (k >= 0).
LaurentPoly d_pow(int k);

/// An element num * d^dexp of Z[A, A^-1][1/d].  Reduction is lazy: call
/// normalized() to strip factors of d while dexp < 0.  Equality does not
/// depend on the representation.
class DRingElem {
 public:
  DRingElem() = default;
  DRingElem(LaurentPoly num, int dexp = 0)  // NOLINT: Laurent polys embed
      : num_(std::move(num)), dexp_(num_.is_zero() ? 0 : dexp) {}
  DRingElem(long c) : DRingElem(LaurentPoly(c)) {}  // NOLINT

  static DRingElem d_power(int k) { return DRingElem(LaurentPoly(1), k); }

  const LaurentPoly& num() const { return num_; }
  int dexp() const { return dexp_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Strips d from num while dexp < 0.
  DRingElem normalized() const;
  /// Strips every factor of d from num regardless of dexp.
  DRingElem fully_reduced() const;
  /// The value as a Laurent polynomial, if it is one.
  std::optional<LaurentPoly> to_laurent() const;

  DRingElem& operator+=(const DRingElem& rhs);
  DRingElem& operator-=(const DRingElem& rhs) { return *this += -rhs; }
  DRingElem& operator*=(const DRingElem& rhs);
  friend DRingElem operator+(DRingElem a, const DRingElem& b) {
    return a += b;
  }
  friend DRingElem operator-(DRingElem a, const DRingElem& b) {
    return a -= b;
  }
  friend DRingElem operator*(DRingElem a, const DRingElem& b) {
    return a *= b;
  }
  DRingElem operator-() const { return {-num_, dexp_}; }
  friend bool operator==(const DRingElem& a, const DRingElem& b);

  /// Multiplies by d^k.
  DRingElem times_dpow(int k) const {
    return is_zero() ? DRingElem() : DRingElem(num_, dexp_ + k);
  }
  /// Integer power; negative exponents need num to be a unit.
  DRingElem pow(int e) const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  int dexp_ = 0;
};

}  // namespace wpoly
