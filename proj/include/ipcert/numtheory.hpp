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

#ifndef IPCERT_NUMTHEORY_HPP
#define IPCERT_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ipcert/poly.hpp"

namespace ipcert {

/// Below this bound the fixed base set {2..41} is a deterministic primality test.
extern const Integer kDeterministicPrimalityBound;

enum class PrimalityRegime { kDeterministic, kProbable };

/// Which regime is_prime uses for N (recorded in certificates).
PrimalityRegime primality_regime(const Integer& n);

/// Miller-Rabin. Deterministic below kDeterministicPrimalityBound; above it,
/// `rounds` bases drawn from a generator seeded by (n, seed_salt), so the
/// verifier can re-test with independent randomness. Throws for N < 2.
bool is_prime(const Integer& n, unsigned rounds = 64, std::uint64_t seed_salt = 0);

/// Complete factorization of N >= 1 as (prime, exponent) pairs, primes ascending.
/// Trial division up to 10^6, then Pollard rho (Brent) with a fixed,
/// input-independent restart schedule. N = 1 gives an empty list.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// One decomposition |N| = p^k * d with p prime, p not dividing d.
struct PrimePowerSplit {
  Integer p;
  unsigned k = 0;
  Integer d;
  int sign = +1;
};

/// All splits of a nonzero N, one per prime divisor (k is forced to the full
/// p-adic valuation), sorted by ascending d then ascending p.
std::vector<PrimePowerSplit> prime_power_splits(const Integer& n);

}  // namespace ipcert

#endif  // IPCERT_NUMTHEORY_HPP
