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

#include "ipcert/poly.hpp"

#include <stdexcept>

namespace ipcert {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer rational_ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

namespace {

void strip_leading_zeros(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const Integer kZero = 0;

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  strip_leading_zeros(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip_leading_zeros(coeffs_);
}

const Integer& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer evaluate(const Polynomial& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ShiftedPolynomial taylor_shift(const Polynomial& f, const Integer& n) {
  if (f.is_zero()) throw std::domain_error("taylor_shift of zero polynomial");
  std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<Integer> s = f.coeffs();
  // Round r of synthetic division by (z-n) leaves s[r] = f^(r)(n)/r!.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = m; i-- > r;) s[i] += n * s[i + 1];
  return ShiftedPolynomial{f, n, std::move(s)};
}

Polynomial reciprocal(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("reciprocal of zero polynomial");
  std::vector<Integer> rev(f.coeffs().rbegin(), f.coeffs().rend());
  return Polynomial(std::move(rev));
}

Integer content(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("content of zero polynomial");
  Integer g = 0;
  for (const Integer& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_primitive(const Polynomial& f) { return content(f) == 1; }

Polynomial add(const Polynomial& f, const Polynomial& g) {
  std::vector<Integer> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial negate(const Polynomial& f) {
  std::vector<Integer> c = f.coeffs();
  for (Integer& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial scalar_mul(const Polynomial& f, const Integer& k) {
  std::vector<Integer> c = f.coeffs();
  for (Integer& x : c) x *= k;
  return Polynomial(std::move(c));
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial();
  std::vector<Integer> c(f.coeffs().size() + g.coeffs().size() - 1, Integer(0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) c[i + j] += f.coeffs()[i] * g.coeffs()[j];
  return Polynomial(std::move(c));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return Polynomial();
  if (f.degree() < g.degree()) return std::nullopt;
  // Long division over Q; succeeds exactly when g | f in Z[z].
  std::vector<Rational> rem(f.coeffs().size());
  for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = f.coeffs()[i];
  std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<Rational> q(rem.size() - dg);
  Rational lead(g.leading());
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = rem[i + dg] / lead;
    for (std::size_t j = 0; j <= dg; ++j) rem[i + j] -= q[i] * Rational(g.coeffs()[j]);
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (rem[i] != 0) return std::nullopt;
  std::vector<Integer> qi(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return std::nullopt;
    qi[i] = q[i].get_num();
  }
  return Polynomial(std::move(qi));
}

}  // namespace ipcert
