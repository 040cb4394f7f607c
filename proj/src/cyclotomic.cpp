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

#include "pk/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pk/errors.hpp"

namespace pk {

namespace detail {

struct CyclotomicField {
  int n = 1;
  int phi = 1;
  IntPolynomial modulus;  // monic, degree phi
};

namespace {

void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic divisor b; throws if the division leaves a remainder.
IntPolynomial exact_divide(IntPolynomial a, const IntPolynomial& b) {
  trim(a);
  const auto db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) throw std::logic_error("exact_divide: degree");
  IntPolynomial q(a.size() - static_cast<std::size_t>(db), 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const mpz_class c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

}  // namespace

const CyclotomicField* field(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(n);
  if (it != registry.end()) return it->second.get();
  auto f = std::make_unique<CyclotomicField>();
  f->n = n;
  f->phi = euler_phi(n);
  f->modulus = cyclotomic_polynomial(n);
  auto* raw = f.get();
  registry.emplace(n, std::move(f));
  return raw;
}

}  // namespace detail

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  IntPolynomial p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = detail::exact_divide(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces p in place modulo the monic integer polynomial `mod`, leaving deg(p) < deg(mod).
template <typename Coeff>
void reduce_mod(std::vector<Coeff>& p, const IntPolynomial& mod) {
  const auto d = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
    const Coeff c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(i - d + j)] -= c * mod[static_cast<std::size_t>(j)];
    p[static_cast<std::size_t>(i)] = 0;
  }
  p.resize(static_cast<std::size_t>(d), Coeff(0));
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  const auto db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {QPoly{}, a};
  QPoly q(a.size() - static_cast<std::size_t>(db), 0);
  const mpq_class lead = b.back();
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const mpq_class c = a[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(a);
  return {q, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

CycNum::CycNum() : CycNum(0L) {}

CycNum::CycNum(long value) : field_(detail::field(1)), num_{mpz_class(value)}, den_(1) {}

CycNum::CycNum(const mpq_class& value)
    : field_(detail::field(1)), num_{value.get_num()}, den_(value.get_den()) {}

CycNum::CycNum(const detail::CyclotomicField* field, std::vector<mpz_class> num, mpz_class den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNum CycNum::zero(int n) {
  const auto* f = detail::field(n);
  return CycNum(f, std::vector<mpz_class>(static_cast<std::size_t>(f->phi), 0), 1);
}

CycNum CycNum::one(int n) { return rational(n, 1); }

CycNum CycNum::rational(int n, const mpq_class& value) { return CycNum(value).in_field(n); }

CycNum CycNum::from_coeffs(int n, const std::vector<mpq_class>& coeffs) {
  const auto* f = detail::field(n);
  if (static_cast<int>(coeffs.size()) != f->phi) {
    throw std::invalid_argument("from_coeffs: expected " + std::to_string(f->phi) + " coefficients");
  }
  mpz_class den = 1;
  for (const auto& c : coeffs) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.emplace_back(c.get_num() * (den / c.get_den()));
  return CycNum(f, std::move(num), den);
}

CycNum CycNum::root_of_unity(int n, long k) {
  const auto* f = detail::field(n);
  long e = k % n;
  if (e < 0) e += n;
  std::vector<mpz_class> p(static_cast<std::size_t>(std::max<long>(e + 1, f->phi)), 0);
  p[static_cast<std::size_t>(e)] = 1;
  reduce_mod(p, f->modulus);
  return CycNum(f, std::move(p), 1);
}

int CycNum::order() const noexcept { return field_->n; }
int CycNum::degree() const noexcept { return field_->phi; }

mpq_class CycNum::coeff(int i) const {
  mpq_class q(num_.at(static_cast<std::size_t>(i)), den_);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> CycNum::coeffs() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (int i = 0; i < static_cast<int>(num_.size()); ++i) out.push_back(coeff(i));
  return out;
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const noexcept {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  return true;
}

CycNum CycNum::in_field(int n) const {
  if (n == field_->n) return *this;
  if (field_->n != 1) {
    throw std::invalid_argument("cannot move an element of Q(zeta_" + std::to_string(field_->n) +
                                ") into Q(zeta_" + std::to_string(n) + ")");
  }
  return promoted(detail::field(n));
}

CycNum CycNum::promoted(const detail::CyclotomicField* field) const {
  if (field == field_) return *this;
  std::vector<mpz_class> num(static_cast<std::size_t>(field->phi), 0);
  num[0] = num_[0];
  CycNum out;
  out.field_ = field;
  out.num_ = std::move(num);
  out.den_ = den_;
  return out;
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    g = gcd(g, c);
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  den_ /= g;
  for (auto& c : num_) c /= g;
}

namespace {

const detail::CyclotomicField* common_field(const detail::CyclotomicField* a,
                                            const detail::CyclotomicField* b) {
  if (a == b) return a;
  if (a->n == 1) return b;
  if (b->n == 1) return a;
  throw std::invalid_argument("mismatched cyclotomic orders " + std::to_string(a->n) + " and " +
                              std::to_string(b->n));
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& rhs) {
  const auto* f = common_field(field_, rhs.field_);
  if (f != field_) *this = promoted(f);
  const CycNum r = rhs.promoted(f);
  if (den_ == r.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += r.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * r.den_ + r.num_[i] * den_;
    den_ *= r.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
  const auto* f = common_field(lhs.field_, rhs.field_);
  const CycNum a = lhs.promoted(f);
  const CycNum b = rhs.promoted(f);
  const auto phi = static_cast<std::size_t>(f->phi);
  std::vector<mpz_class> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      prod[i + j] += a.num_[i] * b.num_[j];
    }
  }
  reduce_mod(prod, f->modulus);
  return CycNum(f, std::move(prod), a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }
CycNum& CycNum::operator/=(const CycNum& rhs) { return *this = *this / rhs; }

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid on (num, Phi_n) over Q; the common denominator factors out.
  QPoly m(field_->modulus.begin(), field_->modulus.end());
  QPoly a(num_.begin(), num_.end());
  trim(a);
  QPoly r0 = m, r1 = a, s0{}, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = sub_mul(s0, q, s1);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  const mpq_class scale = mpq_class(den_) / r0[0];
  for (auto& c : s0) c *= scale;
  reduce_mod(s0, field_->modulus);
  return from_coeffs(field_->n, s0);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result = one(field_->n);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.field_ == rhs.field_) return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
  if (lhs.field_->n != 1 && rhs.field_->n != 1) return false;
  const auto* f = lhs.field_->n == 1 ? rhs.field_ : lhs.field_;
  return lhs.promoted(f) == rhs.promoted(f);
}

int compare(const CycNum& lhs, const CycNum& rhs) {
  if (lhs.field_->n != rhs.field_->n) return lhs.field_->n < rhs.field_->n ? -1 : 1;
  for (std::size_t i = 0; i < lhs.num_.size(); ++i) {
    const int c = cmp(lhs.num_[i] * rhs.den_, rhs.num_[i] * lhs.den_);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(num_.size()); ++i) {
    mpq_class c = coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = (c == 1);
    if (i == 0) {
      os << c.get_str();
    } else {
      if (!unit) os << c.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

CycNum galois_conjugate(const CycNum& x, long u) {
  const int n = x.order();
  if (std::gcd(((u % n) + n) % n, static_cast<long>(n)) != 1) {
    throw std::invalid_argument("galois_conjugate: exponent is not a unit modulo the field order");
  }
  CycNum out = CycNum::zero(n);
  for (int i = 0; i < x.degree(); ++i) {
    const mpq_class c = x.coeff(i);
    if (c != 0) out += CycNum(c) * CycNum::root_of_unity(n, u * i);
  }
  return out;
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace pk
