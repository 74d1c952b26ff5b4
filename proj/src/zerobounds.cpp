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

#include "ipcert/zerobounds.hpp"

#include <stdexcept>

namespace ipcert {

namespace {

Integer pow_ui(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

void require_positive(const Rational& alpha) {
  if (alpha <= 0) throw std::domain_error("radius must be positive");
}

void require_annulus_params(const Polynomial& f, const Rational& alpha, const Rational& beta,
                            unsigned j) {
  if (f.is_zero() || f.degree() < 1) throw std::domain_error("polynomial of degree >= 1 required");
  require_positive(alpha);
  if (beta <= alpha) throw std::domain_error("annulus requires alpha < beta");
  if (j > static_cast<unsigned>(f.degree())) throw std::domain_error("index j out of range");
}

// sum over i != skip of |a_i| u^i v^{m-i}, i.e. the dominance sum at u/v with
// denominators cleared by v^m.
Integer cleared_abs_sum(const Polynomial& f, const Integer& u, const Integer& v, unsigned skip) {
  unsigned m = static_cast<unsigned>(f.degree());
  Integer sum = 0;
  Integer ui = 1;
  Integer vi = pow_ui(v, m);
  for (unsigned i = 0; i <= m; ++i) {
    if (i != skip && f.coeff(i) != 0) sum += abs(f.coeff(i)) * ui * vi;
    ui *= u;
    if (i < m) vi /= v;
  }
  return sum;
}

}  // namespace

bool check_disk_dominance(const Polynomial& f, const Rational& alpha) {
  if (f.is_zero() || f.degree() < 1) throw std::domain_error("polynomial of degree >= 1 required");
  require_positive(alpha);
  unsigned m = static_cast<unsigned>(f.degree());
  const Integer& u = alpha.get_num();
  const Integer& v = alpha.get_den();
  Integer lhs = abs(f.leading()) * pow_ui(u, m);
  return lhs > cleared_abs_sum(f, u, v, m);
}

bool check_annulus_t2(const Polynomial& f, const Rational& alpha, const Rational& beta,
                      unsigned j) {
  require_annulus_params(f, alpha, beta, j);
  unsigned m = static_cast<unsigned>(f.degree());
  // |a_j| alpha^j > sum_{i!=j} |a_i| beta^i, cleared by av^m * bv^m.
  const Integer &au = alpha.get_num(), &av = alpha.get_den();
  const Integer &bu = beta.get_num(), &bv = beta.get_den();
  Integer lhs = abs(f.coeff(j)) * pow_ui(au, j) * pow_ui(av, m - j) * pow_ui(bv, m);
  Integer rhs = pow_ui(av, m) * cleared_abs_sum(f, bu, bv, j);
  return lhs > rhs;
}

bool check_annulus_t3(const Polynomial& f, const Rational& alpha, const Rational& beta,
                      unsigned j) {
  require_annulus_params(f, alpha, beta, j);
  unsigned m = static_cast<unsigned>(f.degree());
  // |a_j| alpha^m > beta^{m-j} sum_{i!=j} |a_i| alpha^i, cleared by av^m * bv^{m-j}.
  const Integer &au = alpha.get_num(), &av = alpha.get_den();
  const Integer &bu = beta.get_num(), &bv = beta.get_den();
  Integer lhs = abs(f.coeff(j)) * pow_ui(au, m) * pow_ui(bv, m - j);
  Integer rhs = pow_ui(bu, m - j) * cleared_abs_sum(f, au, av, j);
  return lhs > rhs;
}

Rational minimal_disk_alpha(const Polynomial& f, unsigned precision_bits) {
  if (f.is_zero() || f.degree() < 1) throw std::domain_error("polynomial of degree >= 1 required");
  if (precision_bits < 1) throw std::domain_error("precision_bits must be >= 1");
  unsigned m = static_cast<unsigned>(f.degree());
  Integer scale = pow_ui(2, precision_bits);

  bool lower_terms = false;
  Integer max_abs = 0;
  for (unsigned i = 0; i < m; ++i) {
    if (f.coeff(i) != 0) lower_terms = true;
    Integer a = abs(f.coeff(i));
    if (a > max_abs) max_abs = a;
  }
  if (!lower_terms) return make_rational(1, scale);

  auto holds_at = [&](const Integer& idx) {
    return check_disk_dominance(f, make_rational(idx, scale));
  };

  // Cauchy bound 1 + max|a_i|/|a_m| always satisfies dominance.
  Rational cauchy = 1 + make_rational(max_abs, abs(f.leading()));
  Integer hi = rational_ceil(cauchy * scale);
  Integer lo = 0;  // alpha = 0: dominance vacuously false
  if (!holds_at(hi)) throw std::logic_error("Cauchy bracket does not dominate");
  while (hi - lo > 1) {
    Integer mid = (hi + lo) / 2;
    if (mid > 0 && holds_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  // Bracketing contract: true at alpha*, false one grid step below.
  Rational alpha = make_rational(hi, scale);
  if (!check_disk_dominance(f, alpha) || (lo > 0 && holds_at(lo)))
    throw std::logic_error("bisection bracket violated");
  return alpha;
}

Rational theorem_a_bound(const Rational& zeta, unsigned m) {
  if (m < 2) throw std::domain_error("theorem_a_bound requires m >= 2");
  Rational lower = 2 - make_rational(1, Integer(1) << (m - 1));
  if (zeta <= lower || zeta >= 2) throw std::domain_error("zeta outside (2 - 1/2^{m-1}, 2)");
  Rational zp = 1;  // zeta^{m-1}
  for (unsigned i = 0; i + 1 < m; ++i) zp *= zeta;
  Rational first = 1 - (zeta - 1) / (zp - 1);
  Rational second = (1 - 1 / zp) / (zeta - 1);
  return first > second ? first : second;
}

}  // namespace ipcert
