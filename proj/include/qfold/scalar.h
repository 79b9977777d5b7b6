// Copyright 2026 The qfold Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact scalar fields used by the linear algebra layer:
//   Rational      - GMP rationals.
//   Cyclotomic    - elements of Q(zeta_m), m chosen per element.
//   PrimeField<P> - integers mod a small prime P (oracle use only).
#ifndef QFOLD_SCALAR_H_
#define QFOLD_SCALAR_H_

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qfold {

using Rational = mpq_class;

// Canonical p/q (mpq_class(p, q) alone does not reduce).
inline Rational MakeRational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws Error(kParseError).
Rational ParseRational(std::string_view text);
std::string ToString(const Rational& value);

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Rational>& CyclotomicPolynomial(int m);
int EulerPhi(int m);

// An element of Q(zeta_m) stored in the power basis 1, z, ..., z^{phi(m)-1}.
// Elements that happen to be rational are normalized to m = 1, so a rational
// constant combines with any field.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}  // NOLINT
  Cyclotomic(const Rational& value);                      // NOLINT
  Cyclotomic(int m, std::vector<Rational> coeffs);

  // zeta_m^k with zeta_m = exp(2 pi i / m).
  static Cyclotomic RootOfUnity(int m, int k);

  int order() const { return m_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool IsRational() const { return m_ == 1; }
  Rational ToRational() const;  // requires IsRational()

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);
  Cyclotomic operator-() const;
  Cyclotomic Inverse() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string ToString() const;

 private:
  void Normalize();
  // Lifts *this into Q(zeta_m); m must be a multiple of the current order.
  Cyclotomic Embedded(int m) const;
  static int CommonOrder(int a, int b);

  int m_;
  std::vector<Rational> coeffs_;
};

inline std::string ToString(const Cyclotomic& value) { return value.ToString(); }

template <uint32_t P>
class PrimeField {
 public:
  PrimeField() = default;
  PrimeField(int64_t v)  // NOLINT
      : value_(static_cast<uint32_t>(((v % static_cast<int64_t>(P)) + P) % P)) {}

  uint32_t value() const { return value_; }

  PrimeField& operator+=(PrimeField o) { value_ = (value_ + o.value_) % P; return *this; }
  PrimeField& operator-=(PrimeField o) { value_ = (value_ + P - o.value_) % P; return *this; }
  PrimeField& operator*=(PrimeField o) {
    value_ = static_cast<uint32_t>((uint64_t{value_} * o.value_) % P);
    return *this;
  }
  PrimeField& operator/=(PrimeField o) { return *this *= o.Inverse(); }
  PrimeField operator-() const { return PrimeField(0) - *this; }
  PrimeField Inverse() const {
    // Fermat; value_ != 0 is the caller's responsibility.
    PrimeField result(1), base = *this;
    for (uint32_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return result;
  }
  friend PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
  friend PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }
  friend bool operator==(PrimeField a, PrimeField b) { return a.value_ == b.value_; }
  friend bool operator!=(PrimeField a, PrimeField b) { return a.value_ != b.value_; }

 private:
  uint32_t value_ = 0;
};

template <uint32_t P>
std::string ToString(PrimeField<P> v) { return std::to_string(v.value()); }

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  return os << c.ToString();
}
template <uint32_t P>
std::ostream& operator<<(std::ostream& os, PrimeField<P> v) { return os << v.value(); }

}  // namespace qfold

#endif  // QFOLD_SCALAR_H_
