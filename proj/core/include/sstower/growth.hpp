#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sstower {

/*
 * Parameters of the Shafarevich-Tate growth laws along the cyclotomic
 * Z_p-tower: d = [k_0:Q], r = total local degree over the distinguished
 * places, and per parity s in {0,1} the rank slope rho[s], local ranks
 * r_s[s] and nu[s], and the mu/delta/lambda coefficients. mu_list is the
 * finite nonincreasing sequence mu_1 >= mu_2 >= ... >= 0, read as 0
 * beyond its length.
 */
struct GrowthParams {
  std::uint32_t p = 3;
  long d = 1;
  long r = 0;
  long a_p = 0;
  std::array<long, 2> rho{0, 0};
  std::array<long, 2> r_s{0, 0};
  std::array<long, 2> nu{0, 0};
  std::array<long, 2> mu_coef{0, 0};
  std::array<long, 2> delta{0, 0};
  std::array<long, 2> lambda{0, 0};
  std::vector<long> mu_list;

  long mu_at(std::size_t i) const;  // mu_i, 1-based, 0 beyond the list

  bool operator==(const GrowthParams&) const = default;
};

struct Violation {
  std::string constraint;  // the breached condition, e.g. "r_s0 >= nu0"
  std::string detail;      // the offending values
};

// d * (floor(p^{n+1} / (p^2 - 1)) - floor((n+1) / 2)): exponent of p in
// the order of the p-part of Sha at level n, in the rank-zero
// supersingular setting. Requires odd prime p, d >= 0, n >= 0.
mpz_class sha_exponent(long d, std::uint32_t p, long n);

// rho_s * (p^n - p^{n-1}): the jump of rank (or corank) from level n-1
// to level n. Requires n >= 1, rho_s >= 0.
mpz_class rank_corank_diff(long rho_s, std::uint32_t p, long n);

// First difference of the Sha exponent once ranks have stabilized, with
// s = n mod 2:
//   mu[s] (p^n - p^{n-1}) + (d - delta[s]) floor(p^n / (p+1))
//     + delta[s] floor(p^{n-1} / (p+1)) + lambda[s].
// Checks the constraints the formula itself needs: n >= 1, mu[s] >= 0,
// 0 <= delta[s] <= d, and delta[s] = 0 when a_p = 0.
mpz_class sha_diff_stable(const GrowthParams& params, long n);

// First difference in the refined law with nontrivial local data at the
// distinguished places (requires a_p = 0), with s = n mod 2:
//   mu[s] (p^n - p^{n-1}) + (r - r_s[s] + nu[s]) floor(p^n / (p+1))
//     - sum_{i=1}^{nu[s]}     floor(p^{n - mu_i} / (p+1))
//     - sum_{i=1}^{r_s[1-s]}  floor(p^{n - mu_i} / (p+1)) + lambda[s].
// Checks n >= 1, mu[s] >= 0, 0 <= nu[s] <= r_s[s], r_s[s] + r_s[1-s] <= r,
// mu_list nonincreasing >= 0, and n - mu_i >= 0 for every index used.
mpz_class sha_diff_ramified(const GrowthParams& params, long n);

// Every constraint of the full parameter system, checked verbatim; an
// empty result means the parameters are admissible.
std::vector<Violation> validate_constraints(const GrowthParams& params);

struct ConsistencyReport {
  long lambda0 = 0;
  long lambda1 = 0;
  // Smallest n such that the fit holds on all of [n, n_max].
  long verified_from = 0;
  bool holds = false;  // fit holds on all of [2, n_max]
  std::optional<long> first_counterexample;  // smallest mismatching n
};

// Cross-check of the closed form against the difference law: fits one
// constant lambda per parity such that the first differences of
// sha_exponent(d, p, .) equal sha_diff_stable with mu = delta = 0 on
// [2, n_max], and reports from which n the fit holds. Requires odd p and
// n_max >= 4.
ConsistencyReport sha_consistency(std::uint32_t p, long d, long n_max);

struct ShaRow {
  long n;
  mpz_class exponent;
  mpz_class diff;  // exponent(n) - exponent(n-1); 0 at n = 0
};

// Rows (n, exponent, first difference) for n in [n_begin, n_end].
std::vector<ShaRow> sha_table(long d, std::uint32_t p, long n_begin,
                              long n_end);

// Witness that d divides (p^l + 1) * p^j, the divisor shape under which
// ranks stabilize up the tower; nullopt when d has no such form.
struct DivisorWitness {
  long l = 0;
  long j = 0;
};
std::optional<DivisorWitness> divisor_form_witness(long d, std::uint32_t p);

bool ranks_stabilize(long d, std::uint32_t p);

}  // namespace sstower
