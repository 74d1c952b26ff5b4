/*
   Copyright 2026 The ipcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IPCERT_POLY_HPP
#define IPCERT_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ipcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den (den > 0, reduced). Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Smallest integer >= q.
Integer rational_ceil(const Rational& q);

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// coeffs[i] holds a_i; the vector never has a trailing (leading-term) zero.
/// The zero polynomial is represented by an empty vector and is rejected at
/// the certifier's API boundaries.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// a_i, with a_i = 0 beyond the degree.
  const Integer& coeff(std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Canonical order used for factor lists: degree, then coefficients from a_0 up.
std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

/// f(z+n) expanded around n: s_i = f^(i)(n)/i!, all integers.
struct ShiftedPolynomial {
  Polynomial base;
  Integer n;
  std::vector<Integer> s;

  Polynomial as_polynomial() const { return Polynomial(s); }
};

Integer evaluate(const Polynomial& f, const Integer& x);

/// Exact coefficients of f(z+n) via repeated synthetic division by (z-n).
/// s has deg(f)+1 entries, s.back() == leading coefficient of f.
ShiftedPolynomial taylor_shift(const Polynomial& f, const Integer& n);

/// Coefficient reversal z^m f(1/z); trailing zeros of f drop the degree.
Polynomial reciprocal(const Polynomial& f);

/// gcd of |a_i| over all i; positive. Requires f nonzero.
Integer content(const Polynomial& f);
bool is_primitive(const Polynomial& f);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial negate(const Polynomial& f);
Polynomial scalar_mul(const Polynomial& f, const Integer& c);
Polynomial multiply(const Polynomial& f, const Polynomial& g);

/// Exact quotient f/g when g divides f in Z[z]; nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace ipcert

#endif  // IPCERT_POLY_HPP
