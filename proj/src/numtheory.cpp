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

#include "ipcert/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ipcert {

// Sorenson & Webster: {2,3,...,41} has no strong pseudoprime below this.
const Integer kDeterministicPrimalityBound("3317044064679887385961981");

namespace {

constexpr unsigned kTrialLimit = 1000000;

const std::vector<std::uint32_t>& small_primes() {
  static std::vector<std::uint32_t> primes;
  static std::once_flag flag;
  std::call_once(flag, [] {
    std::vector<bool> sieve(kTrialLimit + 1, true);
    for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
      if (!sieve[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
    }
  });
  return primes;
}

// One strong-probable-prime test to the given base.
bool sprp(const Integer& n, const Integer& base) {
  Integer a = base % n;
  if (a == 0) return true;
  Integer d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr int kFixedBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

PrimalityRegime primality_regime(const Integer& n) {
  return n < kDeterministicPrimalityBound ? PrimalityRegime::kDeterministic
                                          : PrimalityRegime::kProbable;
}

bool is_prime(const Integer& n, unsigned rounds, std::uint64_t seed_salt) {
  if (n < 2) throw std::domain_error("is_prime requires N >= 2");
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (int b : kFixedBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    if (!sprp(n, Integer(b))) return false;
  }
  if (n < kDeterministicPrimalityBound) return true;
  // Probable regime: extra random bases seeded from (n, salt).
  gmp_randstate_t state;
  gmp_randinit_mt(state);
  Integer seed = n >> 32;
  seed ^= n;
  seed += Integer(seed_salt) * 2654435761u;
  seed += 1;
  gmp_randseed(state, seed.get_mpz_t());
  Integer span = n - 3;
  bool ok = true;
  for (unsigned i = 0; i < rounds && ok; ++i) {
    Integer a;
    mpz_urandomm(a.get_mpz_t(), state, span.get_mpz_t());
    ok = sprp(n, a + 2);
  }
  gmp_randclear(state);
  return ok;
}

namespace {

// Brent-cycle Pollard rho; x0 = 2 and c = 1, 2, 3, ... until a split appears.
// Returns a nontrivial factor of composite odd n.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, r = 1, q = 1, g = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        Integer lim = r - k;
        if (lim > 128) lim = 128;
        for (Integer i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += 128;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer f = pollard_rho(n);
  factor_rec(f, out);
  factor_rec(n / f, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw std::domain_error("factorize requires N >= 1");
  std::vector<std::pair<Integer, unsigned>> result;
  Integer rem = n;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > rem) break;
    if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
    result.emplace_back(p, e);
  }
  if (rem > 1) {
    if (rem <= Integer(kTrialLimit) * kTrialLimit || is_prime(rem)) {
      // Below the square of the trial limit any survivor is prime.
      result.emplace_back(rem, 1);
    } else {
      std::vector<Integer> primes;
      factor_rec(rem, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        result.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
      }
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

std::vector<PrimePowerSplit> prime_power_splits(const Integer& n) {
  if (n == 0) throw std::domain_error("prime_power_splits requires N != 0");
  Integer a = abs(n);
  int sign = sgn(n);
  std::vector<PrimePowerSplit> splits;
  for (const auto& [p, e] : factorize(a)) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
    splits.push_back(PrimePowerSplit{p, e, a / pk, sign});
  }
  std::sort(splits.begin(), splits.end(), [](const PrimePowerSplit& x, const PrimePowerSplit& y) {
    int c = cmp(x.d, y.d);
    if (c != 0) return c < 0;
    return x.p < y.p;
  });
  return splits;
}

}  // namespace ipcert
