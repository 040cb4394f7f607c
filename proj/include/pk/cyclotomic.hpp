/*
 * Copyright 2026 The pk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PK_CYCLOTOMIC_HPP
#define PK_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <vector>

namespace pk {

namespace detail {
struct CyclotomicField;
}

/// Integer polynomial, coefficients listed from the constant term up.
using IntPolynomial = std::vector<mpz_class>;

int euler_phi(int n);

/// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
IntPolynomial cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1) modulo Phi_n.
///
/// The representation is canonical: a primitive integer numerator vector over a positive
/// common denominator, so equality is structural. Values built from plain integers or
/// rationals live in Q = Q(zeta_1) and are promoted into any other field on contact;
/// mixing two different orders n > 1 is a usage error (std::invalid_argument).
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT: Eigen constructs Scalar(0) and Scalar(1).
  CycNum(const mpq_class& value);  // NOLINT

  static CycNum zero(int n);
  static CycNum one(int n);
  static CycNum rational(int n, const mpq_class& value);
  static CycNum from_coeffs(int n, const std::vector<mpq_class>& coeffs);
  /// zeta_n^k; k is taken modulo n.
  static CycNum root_of_unity(int n, long k);

  int order() const noexcept;
  int degree() const noexcept;
  mpq_class coeff(int i) const;
  std::vector<mpq_class> coeffs() const;

  bool is_zero() const noexcept;
  bool is_one() const;
  bool is_rational() const noexcept;

  /// The same value viewed in Q(zeta_n). Only rationals change field.
  CycNum in_field(int n) const;

  CycNum inverse() const;
  CycNum pow(long e) const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);
  CycNum operator-() const;

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
  friend CycNum operator/(const CycNum& lhs, const CycNum& rhs) { return lhs * rhs.inverse(); }
  friend bool operator==(const CycNum& lhs, const CycNum& rhs);
  friend bool operator!=(const CycNum& lhs, const CycNum& rhs) { return !(lhs == rhs); }

  /// Total order used for canonical output: by field order, then coefficients.
  friend int compare(const CycNum& lhs, const CycNum& rhs);
  friend bool operator<(const CycNum& lhs, const CycNum& rhs) { return compare(lhs, rhs) < 0; }

  /// Human readable form in the generator z, e.g. "1/2 - z^2".
  std::string to_string() const;

 private:
  CycNum(const detail::CyclotomicField* field, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  CycNum promoted(const detail::CyclotomicField* field) const;

  const detail::CyclotomicField* field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// The image of x under the automorphism zeta_n -> zeta_n^u; u must be a unit mod n.
CycNum galois_conjugate(const CycNum& x, long u);

/// Canonical "p/q" text of a rational (q >= 1 always printed).
std::string rational_string(const mpq_class& q);

}  // namespace pk

namespace Eigen {

template <>
struct NumTraits<pk::CycNum> : GenericNumTraits<pk::CycNum> {
  using Real = pk::CycNum;
  using NonInteger = pk::CycNum;
  using Nested = pk::CycNum;
  using Literal = pk::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static pk::CycNum epsilon() { return pk::CycNum(0); }
  static pk::CycNum dummy_precision() { return pk::CycNum(0); }
  static pk::CycNum highest() { return pk::CycNum(0); }
  static pk::CycNum lowest() { return pk::CycNum(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // PK_CYCLOTOMIC_HPP
