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

#include "ipcert/criteria.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ipcert {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kT1: return "T1";
    case Theorem::kT2: return "T2";
    case Theorem::kT3: return "T3";
  }
  return "?";
}

std::optional<Theorem> theorem_from_name(const std::string& name) {
  if (name == "T1" || name == "t1") return Theorem::kT1;
  if (name == "T2" || name == "t2") return Theorem::kT2;
  if (name == "T3" || name == "t3") return Theorem::kT3;
  return std::nullopt;
}

std::string CheckReport::failed_condition() const {
  for (const auto& c : conditions)
    if (!c.pass) return c.name;
  return {};
}

namespace {

Integer pow_ui(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer rational_floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& b, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

Rational abs_sum_at(const Polynomial& f, const Rational& x, unsigned skip) {
  Rational sum = 0;
  for (unsigned i = 0; i <= static_cast<unsigned>(f.degree()); ++i)
    if (i != skip && f.coeff(i) != 0) sum += Rational(abs(f.coeff(i))) * rational_pow(x, i);
  return sum;
}

}  // namespace

std::optional<unsigned> compute_ell(const std::vector<Integer>& s, const Integer& p, unsigned k,
                                    unsigned m) {
  Integer pk = pow_ui(p, k);
  unsigned prefix = 0;
  while (prefix < m && prefix < s.size() &&
         mpz_divisible_p(s[prefix].get_mpz_t(), pk.get_mpz_t()))
    ++prefix;
  for (unsigned ell = 1; ell <= prefix; ++ell) {
    if (std::gcd(k, ell) != 1) continue;
    if (k > 1 && mpz_divisible_p(s[ell].get_mpz_t(), p.get_mpz_t())) continue;
    return ell;
  }
  return std::nullopt;
}

namespace {

// Shared body of the three theorem checkers; beta/j are engaged for T2/T3.
CheckReport run_checks(const Polynomial& f, Theorem t, const Rational& alpha,
                       const std::optional<Rational>& beta, const std::optional<unsigned>& j,
                       const ArithmeticWitness& w) {
  CheckReport report;
  auto fail = [&](const std::string& name, const std::string& detail) {
    report.conditions.push_back({name, false, detail});
    report.pass = false;
    return report;
  };
  auto ok = [&](const std::string& name, const std::string& detail) {
    report.conditions.push_back({name, true, detail});
  };

  // Structural domain of the theorem statement.
  {
    std::ostringstream os;
    os << "deg=" << f.degree() << " alpha=" << str(alpha) << " n=" << str(w.n)
       << " d=" << str(w.split.d) << " p=" << str(w.split.p) << " k=" << w.split.k
       << " ell=" << w.ell << " sign=" << (w.split.sign > 0 ? "+1" : "-1");
    if (beta) os << " beta=" << str(*beta);
    if (j) os << " j=" << *j;
    std::string d = os.str();
    if (f.is_zero() || f.degree() < 1) return fail("input", "polynomial must have degree >= 1");
    unsigned m = static_cast<unsigned>(f.degree());
    if (alpha <= 0) return fail("input", "alpha must be positive; " + d);
    bool annulus = t != Theorem::kT1;
    if (annulus && (!beta || !j)) return fail("input", "T2/T3 require beta and j; " + d);
    if (annulus && *beta <= alpha) return fail("input", "alpha < beta required; " + d);
    if (annulus && *j > m) return fail("input", "index j out of range; " + d);
    if (w.n < 1 || w.split.d < 1 || w.split.k < 1 || w.split.p < 2 ||
        (w.split.sign != 1 && w.split.sign != -1))
      return fail("input", "witness fields must be natural numbers; " + d);
    if (w.ell < 1 || w.ell > m) return fail("input", "ell must lie in 1..m; " + d);
    ok("input", d);
  }
  unsigned m = static_cast<unsigned>(f.degree());

  if (!is_primitive(f)) return fail("primitivity", "content = " + str(content(f)));
  ok("primitivity", "content = 1");

  // Coefficient inequality for the claimed zero region.
  switch (t) {
    case Theorem::kT1: {
      Rational lhs = Rational(abs(f.leading())) * rational_pow(alpha, m);
      Rational rhs = abs_sum_at(f, alpha, m);
      std::string d = "|a_m| alpha^m = " + str(lhs) + " vs " + str(rhs);
      if (!check_disk_dominance(f, alpha)) return fail("dominance", d);
      ok("dominance", d);
      break;
    }
    case Theorem::kT2: {
      Rational lhs = Rational(abs(f.coeff(*j))) * rational_pow(alpha, *j);
      Rational rhs = abs_sum_at(f, *beta, *j);
      std::string d = "|a_j| alpha^j = " + str(lhs) + " vs " + str(rhs);
      if (!check_annulus_t2(f, alpha, *beta, *j)) return fail("dominance", d);
      ok("dominance", d);
      break;
    }
    case Theorem::kT3: {
      Rational lhs = Rational(abs(f.coeff(*j))) * rational_pow(alpha, *j);
      Rational rhs = rational_pow(*beta / alpha, m - *j) * abs_sum_at(f, alpha, *j);
      std::string d = "|a_j| alpha^j = " + str(lhs) + " vs " + str(rhs);
      if (!check_annulus_t3(f, alpha, *beta, *j)) return fail("dominance", d);
      ok("dominance", d);
      break;
    }
  }

  // f(n) = sign * p^k * d, p prime, p coprime to d.
  Integer value = evaluate(f, w.n);
  Integer pk = pow_ui(w.split.p, w.split.k);
  {
    Integer expect = w.split.sign * pk * w.split.d;
    std::string d = "f(" + str(w.n) + ") = " + str(value) + " vs sign*p^k*d = " + str(expect);
    if (value != expect) return fail("value_split", d);
    ok("value_split", d);
  }
  if (!is_prime(w.split.p))
    return fail("prime_p", "p = " + str(w.split.p) + " is not prime");
  ok("prime_p", "p = " + str(w.split.p) + " is prime");
  if (mpz_divisible_p(w.split.d.get_mpz_t(), w.split.p.get_mpz_t()))
    return fail("p_coprime_d", "p divides d = " + str(w.split.d));
  ok("p_coprime_d", "p does not divide d = " + str(w.split.d));

  // Window condition(s), exact in rationals.
  {
    Rational nd(w.n - w.split.d);
    std::string d = "n - d = " + str(nd) + " vs alpha = " + str(alpha);
    if (nd < alpha) return fail("window_lower", d);
    ok("window_lower", d);
  }
  if (t != Theorem::kT1) {
    Rational bd = *beta - Rational(w.split.d);
    std::string d = "beta - d = " + str(bd) + " vs n = " + str(w.n);
    if (bd < Rational(w.n)) return fail("window_upper", d);
    ok("window_upper", d);
  }

  // Divisibility of the shifted coefficients.
  ShiftedPolynomial g = taylor_shift(f, w.n);
  for (unsigned i = 0; i < w.ell; ++i) {
    if (!mpz_divisible_p(g.s[i].get_mpz_t(), pk.get_mpz_t()))
      return fail("shift_prefix", "p^k = " + str(pk) + " does not divide s_" + std::to_string(i) +
                                      " = " + str(g.s[i]));
  }
  ok("shift_prefix", "p^k = " + str(pk) + " divides s_0..s_" + std::to_string(w.ell - 1));

  {
    unsigned g1 = std::gcd(w.split.k, w.ell);
    std::string d = "gcd(k=" + std::to_string(w.split.k) + ", ell=" + std::to_string(w.ell) +
                    ") = " + std::to_string(g1);
    if (g1 != 1) return fail("gcd_k_ell", d);
    ok("gcd_k_ell", d);
  }

  if (w.split.k > 1) {
    std::string d = "k > 1: s_ell = " + str(g.s[w.ell]) + " vs p = " + str(w.split.p);
    if (mpz_divisible_p(g.s[w.ell].get_mpz_t(), w.split.p.get_mpz_t()))
      return fail("k_gt1_nondivisibility", d);
    ok("k_gt1_nondivisibility", d);
  } else {
    ok("k_gt1_nondivisibility", "k = 1, vacuous");
  }

  report.pass = true;
  return report;
}

}  // namespace

CheckReport check_t1(const Polynomial& f, const Rational& alpha, const ArithmeticWitness& w) {
  return run_checks(f, Theorem::kT1, alpha, std::nullopt, std::nullopt, w);
}

CheckReport check_t2(const Polynomial& f, const Rational& alpha, const Rational& beta, unsigned j,
                     const ArithmeticWitness& w) {
  return run_checks(f, Theorem::kT2, alpha, beta, j, w);
}

CheckReport check_t3(const Polynomial& f, const Rational& alpha, const Rational& beta, unsigned j,
                     const ArithmeticWitness& w) {
  return run_checks(f, Theorem::kT3, alpha, beta, j, w);
}

CheckReport check_witness(const Polynomial& f, Theorem t, const DominanceWitness& dom,
                          const ArithmeticWitness& w) {
  return run_checks(f, t, dom.alpha, dom.beta, dom.j, w);
}

std::optional<ArithmeticWitness> corollary_fast_path(const Polynomial& f, const Integer& n,
                                                     const Integer& d) {
  if (f.is_zero() || f.degree() < 1 || n < 1 || d < 1) return std::nullopt;
  Integer value = evaluate(f, n);
  if (value == 0) return std::nullopt;
  Integer a = abs(value);
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
  Integer q = a / d;
  if (q == 1) return std::nullopt;
  int sign = sgn(value);
  if (is_prime(q)) {
    if (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t())) return std::nullopt;
    return ArithmeticWitness{n, PrimePowerSplit{q, 1, d, sign}, 1};
  }
  auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  const auto& [p, k] = factors.front();
  if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
  // Prime power: needs |f'(n)| coprime to p.
  ShiftedPolynomial g = taylor_shift(f, n);
  if (f.degree() < 1 || mpz_divisible_p(g.s[1].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
  return ArithmeticWitness{n, PrimePowerSplit{p, k, d, sign}, 1};
}

namespace {

// Scans splits of f(n) for n in [n_lo, n_hi]; window_hi, when set, additionally
// requires d <= window_hi - n (the two-sided T2/T3 window). Returns the first
// (smallest n, then smallest d) witness.
std::optional<ArithmeticWitness> scan_n_range(const Polynomial& f, const Integer& n_lo,
                                              const Integer& n_hi, const Rational& alpha,
                                              const std::optional<Rational>& window_hi,
                                              const std::optional<Integer>& d_max) {
  unsigned m = static_cast<unsigned>(f.degree());
  for (Integer n = n_lo; n <= n_hi; ++n) {
    Integer value = evaluate(f, n);
    if (value == 0) continue;
    if (abs(value) == 1) continue;
    std::optional<ShiftedPolynomial> shifted;
    for (const PrimePowerSplit& split : prime_power_splits(value)) {
      // Splits come sorted by ascending d; all window checks only get harder.
      if (d_max && split.d > *d_max) break;
      if (Rational(n - split.d) < alpha) break;
      if (window_hi && *window_hi - Rational(split.d) < Rational(n)) break;
      if (!shifted) shifted = taylor_shift(f, n);
      if (auto ell = compute_ell(shifted->s, split.p, split.k, m))
        return ArithmeticWitness{n, split, *ell};
    }
  }
  return std::nullopt;
}

// Evaluates the peak-location polynomial
//   W(x) = sum_{i<j} (j-i)|a_i| x^i - sum_{i>j} (i-j)|a_i| x^i,
// whose single sign change brackets the maximum of |a_j| - sum |a_i| x^{i-j}.
Integer peak_poly_sign(const Polynomial& f, unsigned j, const Rational& x) {
  Rational acc = 0;
  for (unsigned i = 0; i <= static_cast<unsigned>(f.degree()); ++i) {
    if (i == j || f.coeff(i) == 0) continue;
    Rational term = Rational(abs(f.coeff(i))) * rational_pow(x, i);
    if (i < j)
      acc += Rational(j - i) * term;
    else
      acc -= Rational(i - j) * term;
  }
  return sgn(acc);
}

// Dominance of index j on the circle |z| = x (the beta -> alpha limit of the
// annulus conditions).
bool index_dominance(const Polynomial& f, unsigned j, const Rational& x) {
  if (x <= 0) return false;
  unsigned m = static_cast<unsigned>(f.degree());
  if (j == m) return check_disk_dominance(f, x);
  Rational lhs = Rational(abs(f.coeff(j))) * rational_pow(x, j);
  return lhs > abs_sum_at(f, x, j);
}

struct GridEntry {
  unsigned j;
  Rational alpha;
  Rational beta;
};

// Best-effort per-j (alpha, beta) choices: alpha from the minimal-feasible
// bisection of the index-dominance predicate, beta from the dual bisection of
// the theorem-specific annulus predicate. All values land on the dyadic grid
// k / 2^alpha_precision_bits.
std::vector<GridEntry> auto_grid(const Polynomial& f, Theorem t, const SearchConfig& cfg) {
  std::vector<GridEntry> grid;
  unsigned m = static_cast<unsigned>(f.degree());
  Integer scale = pow_ui(2, cfg.alpha_precision_bits);
  Rational beta_cap = Rational(2 * cfg.n_max + 1);
  auto at = [&](const Integer& idx) { return make_rational(idx, scale); };

  for (unsigned j = 0; j <= m; ++j) {
    if (f.coeff(j) == 0) continue;

    bool lower_terms = false;
    for (unsigned i = 0; i < j; ++i)
      if (f.coeff(i) != 0) lower_terms = true;

    std::optional<Rational> alpha;
    if (j == m) {
      alpha = minimal_disk_alpha(f, cfg.alpha_precision_bits);
    } else if (!lower_terms) {
      // Nothing below j: the margin improves toward 0, take the finest grid point.
      if (index_dominance(f, j, at(1))) alpha = at(1);
    } else {
      // W > 0 left of the margin's peak and < 0 right of it. Bracket the sign
      // change on the grid, then take the minimal feasible grid point.
      if (peak_poly_sign(f, j, at(1)) > 0) {
        Integer lo = 1, hi = 2;
        int guard = 0;
        while (peak_poly_sign(f, j, at(hi)) > 0 && guard++ < 300) hi *= 2;
        if (peak_poly_sign(f, j, at(hi)) <= 0) {
          while (hi - lo > 1) {
            Integer mid = (hi + lo) / 2;
            if (peak_poly_sign(f, j, at(mid)) > 0)
              lo = mid;
            else
              hi = mid;
          }
          // The unimodal margin is largest near these two neighbors of its peak.
          Integer feasible = -1;
          if (index_dominance(f, j, at(lo)))
            feasible = lo;
          else if (index_dominance(f, j, at(hi)))
            feasible = hi;
          if (feasible > 0) {
            Integer flo = 0, fhi = feasible;
            while (fhi - flo > 1) {
              Integer mid = (fhi + flo) / 2;
              if (mid > 0 && index_dominance(f, j, at(mid)))
                fhi = mid;
              else
                flo = mid;
            }
            alpha = at(fhi);
          }
        }
      }
    }
    if (!alpha) continue;

    // Dual bisection: largest grid beta keeping the annulus predicate true.
    auto annulus_ok = [&](const Rational& beta) {
      if (beta <= *alpha) return false;
      return t == Theorem::kT2 ? check_annulus_t2(f, *alpha, beta, j)
                               : check_annulus_t3(f, *alpha, beta, j);
    };
    if (t == Theorem::kT3 && j == m) {
      // The T3 inequality at j = m does not involve beta.
      grid.push_back({j, *alpha, beta_cap});
      continue;
    }
    Integer alpha_idx = rational_floor(*alpha * scale);
    Integer lo_idx = alpha_idx + 1;
    if (!annulus_ok(at(lo_idx))) continue;
    Integer cap_idx = rational_ceil(beta_cap * scale);
    Integer hi_idx = lo_idx;
    while (hi_idx < cap_idx && annulus_ok(at(hi_idx))) hi_idx *= 2;
    if (annulus_ok(at(hi_idx))) {
      grid.push_back({j, *alpha, at(hi_idx < cap_idx ? hi_idx : cap_idx)});
      continue;
    }
    while (hi_idx - lo_idx > 1) {
      Integer mid = (hi_idx + lo_idx) / 2;
      if (annulus_ok(at(mid)))
        lo_idx = mid;
      else
        hi_idx = mid;
    }
    grid.push_back({j, *alpha, at(lo_idx)});
  }
  return grid;
}

std::optional<SearchHit> search_t1(const Polynomial& f, const SearchConfig& cfg) {
  Rational alpha = minimal_disk_alpha(f, cfg.alpha_precision_bits);
  Integer n_lo = rational_ceil(alpha) + 1;  // d >= 1 forces n >= alpha + 1
  if (n_lo < 1) n_lo = 1;
  auto w = scan_n_range(f, n_lo, cfg.n_max, alpha, std::nullopt, cfg.d_max);
  if (!w) return std::nullopt;
  return SearchHit{Theorem::kT1, DominanceWitness{DominanceKind::kDiskT1, alpha, {}, {}}, *w};
}

std::optional<SearchHit> search_annulus(const Polynomial& f, Theorem t, const SearchConfig& cfg) {
  unsigned m = static_cast<unsigned>(f.degree());
  std::vector<GridEntry> grid;
  if (!cfg.t2t3_grid.empty()) {
    for (const auto& [j, a, b] : cfg.t2t3_grid) grid.push_back({j, a, b});
  } else {
    grid = auto_grid(f, t, cfg);
  }
  DominanceKind kind = t == Theorem::kT2 ? DominanceKind::kAnnulusT2 : DominanceKind::kAnnulusT3;
  for (const GridEntry& e : grid) {
    if (e.j > m || e.alpha <= 0 || e.beta <= e.alpha) continue;
    bool holds = t == Theorem::kT2 ? check_annulus_t2(f, e.alpha, e.beta, e.j)
                                   : check_annulus_t3(f, e.alpha, e.beta, e.j);
    if (!holds) continue;
    Integer n_lo = rational_ceil(e.alpha) + 1;
    if (n_lo < 1) n_lo = 1;
    Integer n_hi = rational_floor(e.beta) - 1;
    if (n_hi > cfg.n_max) n_hi = cfg.n_max;
    auto w = scan_n_range(f, n_lo, n_hi, e.alpha, e.beta, cfg.d_max);
    if (w) return SearchHit{t, DominanceWitness{kind, e.alpha, e.beta, e.j}, *w};
  }
  return std::nullopt;
}

}  // namespace

SearchResult search(const Polynomial& f, const SearchConfig& cfg) {
  if (f.is_zero() || f.degree() < 2)
    return {SearchStatus::kNotApplicable, std::nullopt, "degree < 2"};
  if (!is_primitive(f)) return {SearchStatus::kNotApplicable, std::nullopt, "imprimitive"};

  for (Theorem t : {Theorem::kT1, Theorem::kT2, Theorem::kT3}) {
    if (!cfg.theorems.count(t)) continue;
    std::optional<SearchHit> hit =
        t == Theorem::kT1 ? search_t1(f, cfg) : search_annulus(f, t, cfg);
    if (hit) {
      CheckReport check = check_witness(f, hit->theorem, hit->dominance, hit->arithmetic);
      if (!check.pass)
        throw std::logic_error("search produced a witness that fails its own checker: " +
                               check.failed_condition());
      return {SearchStatus::kCertified, hit, {}};
    }
  }
  return {SearchStatus::kNoWitness, std::nullopt, {}};
}

}  // namespace ipcert
