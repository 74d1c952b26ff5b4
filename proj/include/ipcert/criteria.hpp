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

#ifndef IPCERT_CRITERIA_HPP
#define IPCERT_CRITERIA_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ipcert/numtheory.hpp"
#include "ipcert/poly.hpp"
#include "ipcert/zerobounds.hpp"

namespace ipcert {

enum class Theorem { kT1, kT2, kT3 };

std::string theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(const std::string& name);

/// The arithmetic half of a certificate: f(n) = sign * p^k * d together with
/// the divisibility index ell for the shifted coefficients.
struct ArithmeticWitness {
  Integer n;
  PrimePowerSplit split;
  unsigned ell = 1;
};

/// One verified condition of a theorem check, with the exact quantities
/// compared rendered into `detail`.
struct CheckCondition {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  bool pass = false;
  std::vector<CheckCondition> conditions;

  /// Name of the first violated condition; empty when pass.
  std::string failed_condition() const;
};

/// Smallest ell in 1..L qualifying under the theorem side conditions, where L
/// is the longest prefix of s with p^k | s_i (capped at m): gcd(k, ell) = 1
/// and, for k > 1, p does not divide s_ell. Requires p^k | s_0.
std::optional<unsigned> compute_ell(const std::vector<Integer>& s, const Integer& p, unsigned k,
                                    unsigned m);

CheckReport check_t1(const Polynomial& f, const Rational& alpha, const ArithmeticWitness& w);
CheckReport check_t2(const Polynomial& f, const Rational& alpha, const Rational& beta, unsigned j,
                     const ArithmeticWitness& w);
CheckReport check_t3(const Polynomial& f, const Rational& alpha, const Rational& beta, unsigned j,
                     const ArithmeticWitness& w);

/// Unified entry: dispatches on the dominance witness kind.
CheckReport check_witness(const Polynomial& f, Theorem t, const DominanceWitness& dom,
                          const ArithmeticWitness& w);

/// ell = 1 specialization: |f(n)|/d prime, or a prime power coprime to
/// |f'(n)|. Returns the witness without checking dominance or window.
std::optional<ArithmeticWitness> corollary_fast_path(const Polynomial& f, const Integer& n,
                                                     const Integer& d);

struct SearchConfig {
  Integer n_max = 10000;
  unsigned alpha_precision_bits = 32;
  std::set<Theorem> theorems = {Theorem::kT1, Theorem::kT2, Theorem::kT3};
  /// Explicit (j, alpha, beta) candidates for T2/T3; empty means AUTO grid.
  std::vector<std::tuple<unsigned, Rational, Rational>> t2t3_grid;
  std::optional<Integer> d_max;
};

struct SearchHit {
  Theorem theorem = Theorem::kT1;
  DominanceWitness dominance;
  ArithmeticWitness arithmetic;
};

enum class SearchStatus { kCertified, kNoWitness, kNotApplicable };

struct SearchResult {
  SearchStatus status = SearchStatus::kNoWitness;
  std::optional<SearchHit> hit;
  std::string reason;  // set for kNotApplicable
};

/// Scans n (and for T2/T3 a (j, alpha, beta) grid) for a witness; the first
/// hit in deterministic order (theorem T1 < T2 < T3, then smallest n, then
/// smallest d) wins. Imprimitive input or degree < 2 is kNotApplicable.
SearchResult search(const Polynomial& f, const SearchConfig& cfg);

}  // namespace ipcert

#endif  // IPCERT_CRITERIA_HPP
