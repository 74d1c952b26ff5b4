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

#ifndef IPCERT_ZEROBOUNDS_HPP
#define IPCERT_ZEROBOUNDS_HPP

#include <cstddef>
#include <optional>

#include "ipcert/poly.hpp"

namespace ipcert {

enum class DominanceKind { kDiskT1, kAnnulusT2, kAnnulusT3 };

/// The analytic half of a certificate: a coefficient inequality, exact in
/// rationals, that pins the zero locations of the target polynomial.
/// beta and j are present only for the annulus kinds.
struct DominanceWitness {
  DominanceKind kind = DominanceKind::kDiskT1;
  Rational alpha;
  std::optional<Rational> beta;
  std::optional<unsigned> j;
};

/// |a_m| alpha^m > sum_{i<m} |a_i| alpha^i, exactly. True forces every zero
/// into |theta| < alpha.
bool check_disk_dominance(const Polynomial& f, const Rational& alpha);

/// |a_j| alpha^j > sum_{i != j} |a_i| beta^i, exactly. True forces every zero
/// into |theta| < alpha or |theta| > beta.
bool check_annulus_t2(const Polynomial& f, const Rational& alpha, const Rational& beta,
                      unsigned j);

/// |a_j| alpha^m > beta^{m-j} * sum_{i != j} |a_i| alpha^i (denominators
/// cleared), same zero exclusion as the T2 form. Identical to
/// check_disk_dominance at j = m.
bool check_annulus_t3(const Polynomial& f, const Rational& alpha, const Rational& beta,
                      unsigned j);

/// Smallest alpha on the grid k/2^precision_bits for which disk dominance
/// holds; dominance fails at alpha - 2^-precision_bits. Bisection starts from
/// the Cauchy bound 1 + max|a_i|/|a_m|, which always satisfies dominance.
Rational minimal_disk_alpha(const Polynomial& f, unsigned precision_bits);

/// Specialized zero bound from the trinomial-family argument: for m >= 2 and
/// 2 - 1/2^{m-1} < zeta < 2, returns
///   max{ 1 - (zeta-1)/(zeta^{m-1}-1), (1/(zeta-1)) (1 - 1/zeta^{m-1}) },
/// which is < 1 throughout the interval. Throws if zeta is out of range.
Rational theorem_a_bound(const Rational& zeta, unsigned m);

}  // namespace ipcert

#endif  // IPCERT_ZEROBOUNDS_HPP
