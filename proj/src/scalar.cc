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

#include "qfold/scalar.h"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qfold/error.h"

namespace qfold {

namespace {

using Poly = std::vector<Rational>;

void Trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly Multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  Trim(out);
  return out;
}

// Long division; returns quotient, leaves remainder in `num`.
Poly DivMod(Poly& num, const Poly& den) {
  Trim(num);
  if (num.size() < den.size()) return {};
  Poly quot(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  for (size_t k = num.size(); k-- >= den.size();) {
    const Rational factor = num[k] / lead;
    quot[k - den.size() + 1] = factor;
    if (factor == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[k - den.size() + 1 + j] -= factor * den[j];
    if (k == den.size() - 1) break;
  }
  Trim(num);
  Trim(quot);
  return quot;
}

Poly Subtract(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  Trim(out);
  return out;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw Error(ErrorCode::kParseError, "bad rational '" + s + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) { return value.get_str(); }

namespace {

const Poly& CyclotomicLocked(int m, std::map<int, Poly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by every Phi_d with d | m, d < m.
  Poly p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = DivMod(p, CyclotomicLocked(d, cache));
  }
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const std::vector<Rational>& CyclotomicPolynomial(int m) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  return CyclotomicLocked(m, cache);
}

int EulerPhi(int m) {
  int result = m;
  for (int p = 2, rest = m; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      result -= result / p;
    }
  }
  return result;
}

Cyclotomic::Cyclotomic(const Rational& value) : m_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  if (m < 1) throw Error(ErrorCode::kParseError, "cyclotomic order must be positive");
  Normalize();
}

Cyclotomic Cyclotomic::RootOfUnity(int m, int k) {
  k = ((k % m) + m) % m;
  Poly p(k + 1, Rational(0));
  p[k] = 1;
  return Cyclotomic(m, std::move(p));
}

Rational Cyclotomic::ToRational() const {
  if (!IsRational()) throw Error(ErrorCode::kParseError, "not rational: " + ToString());
  return coeffs_[0];
}

void Cyclotomic::Normalize() {
  Poly p = coeffs_;
  const Poly& phi = CyclotomicPolynomial(m_);
  DivMod(p, phi);
  bool rational = true;
  for (size_t i = 1; i < p.size(); ++i) {
    if (p[i] != 0) rational = false;
  }
  if (rational) {
    m_ = 1;
    coeffs_ = {p.empty() ? Rational(0) : p[0]};
    return;
  }
  p.resize(EulerPhi(m_), Rational(0));
  coeffs_ = std::move(p);
}

int Cyclotomic::CommonOrder(int a, int b) { return std::lcm(a, b); }

Cyclotomic Cyclotomic::Embedded(int m) const {
  if (m == m_) return *this;
  const int step = m / m_;
  Poly p(step * (coeffs_.size() - 1) + 1, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  Cyclotomic out;
  out.m_ = m;
  out.coeffs_ = std::move(p);
  // Reduce without demoting so both operands share the basis.
  Poly r = out.coeffs_;
  DivMod(r, CyclotomicPolynomial(m));
  r.resize(EulerPhi(m), Rational(0));
  out.coeffs_ = std::move(r);
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  const int m = CommonOrder(m_, other.m_);
  Cyclotomic a = Embedded(m);
  const Cyclotomic b = other.Embedded(m);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  a.Normalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.IsRational()) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    Normalize();
    return *this;
  }
  const int m = CommonOrder(m_, other.m_);
  Cyclotomic a = Embedded(m);
  const Cyclotomic b = other.Embedded(m);
  a.coeffs_ = Multiply(a.coeffs_, b.coeffs_);
  a.Normalize();
  return *this = std::move(a);
}

Cyclotomic Cyclotomic::Inverse() const {
  if (IsRational()) {
    if (coeffs_[0] == 0) throw Error(ErrorCode::kNotInvertible, "division by zero");
    return Cyclotomic(Rational(1) / coeffs_[0]);
  }
  // Extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible.
  Poly r0 = CyclotomicPolynomial(m_), r1 = coeffs_;
  Trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly rem = r0;
    Poly q = DivMod(rem, r1);
    Poly s2 = Subtract(s0, Multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational g = r1[0];
  for (auto& c : s1) c /= g;
  return Cyclotomic(m_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.Inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.coeffs_ == b.coeffs_;
  const Cyclotomic diff = a - b;
  return diff.IsRational() && diff.coeffs_[0] == 0;
}

std::string Cyclotomic::ToString() const {
  if (IsRational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << (coeffs_[k] > 0 ? "+" : "");
    first = false;
    if (k == 0) {
      os << coeffs_[k].get_str();
      continue;
    }
    if (coeffs_[k] == -1) {
      os << "-";
    } else if (coeffs_[k] != 1) {
      os << coeffs_[k].get_str() << "*";
    }
    os << "E(" << m_ << ")";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace qfold
