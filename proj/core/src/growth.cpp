#include "sstower/growth.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"
#include "sstower/errors.hpp"

namespace sstower {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p == 2 || !detail::is_prime(p))
    throw InputError("p must be an odd prime (got " + std::to_string(p) + ")");
}

// floor(p^n / (p + 1)); the recurring growth quantum of the difference laws
mpz_class floor_pow_ratio(std::uint32_t p, long n) {
  return detail::pow_ui(p, static_cast<std::uint64_t>(n)) / (p + 1);
}

mpz_class power_gap(std::uint32_t p, long n) {
  return detail::pow_ui(p, static_cast<std::uint64_t>(n)) -
         detail::pow_ui(p, static_cast<std::uint64_t>(n - 1));
}

void check_mu_list(const std::vector<long>& mu_list) {
  for (std::size_t i = 0; i < mu_list.size(); ++i) {
    if (mu_list[i] < 0)
      throw InputError("mu_list entries must be nonnegative");
    if (i + 1 < mu_list.size() && mu_list[i + 1] > mu_list[i])
      throw InputError("mu_list must be nonincreasing");
  }
}

}  // namespace

long GrowthParams::mu_at(std::size_t i) const {
  return i >= 1 && i <= mu_list.size() ? mu_list[i - 1] : 0;
}

mpz_class sha_exponent(long d, std::uint32_t p, long n) {
  require_odd_prime(p);
  if (d < 0) throw InputError("d must be nonnegative");
  if (n < 0) throw InputError("n must be nonnegative");
  mpz_class q = detail::pow_ui(p, static_cast<std::uint64_t>(n) + 1) /
                (static_cast<std::uint64_t>(p) * p - 1);
  return d * (q - (n + 1) / 2);
}

mpz_class rank_corank_diff(long rho_s, std::uint32_t p, long n) {
  if (n < 1) throw InputError("n must be at least 1");
  if (rho_s < 0) throw InputError("rho_s must be nonnegative");
  return rho_s * power_gap(p, n);
}

mpz_class sha_diff_stable(const GrowthParams& params, long n) {
  if (n < 1) throw InputError("n must be at least 1");
  const int s = static_cast<int>(n % 2);
  const long mu = params.mu_coef[s], delta = params.delta[s];
  if (mu < 0) throw InputError("mu_coef must be nonnegative");
  if (delta < 0 || delta > params.d)
    throw InputError("delta must lie in [0, d]");
  if (params.a_p == 0 && delta != 0)
    throw InputError("delta must be 0 when a_p = 0");
  return mu * power_gap(params.p, n) +
         (params.d - delta) * floor_pow_ratio(params.p, n) +
         delta * floor_pow_ratio(params.p, n - 1) + params.lambda[s];
}

mpz_class sha_diff_ramified(const GrowthParams& params, long n) {
  if (n < 1) throw InputError("n must be at least 1");
  if (params.a_p != 0)
    throw InputError("the refined difference law requires a_p = 0");
  check_mu_list(params.mu_list);
  const int s = static_cast<int>(n % 2);
  const long mu = params.mu_coef[s], nu = params.nu[s];
  const long rs_here = params.r_s[s], rs_other = params.r_s[1 - s];
  if (mu < 0) throw InputError("mu_coef must be nonnegative");
  if (nu < 0 || nu > rs_here)
    throw InputError("nu must lie in [0, r_s] on the active parity");
  if (rs_other < 0 || rs_here + rs_other > params.r)
    throw InputError("r_s0 + r_s1 must lie in [0, r]");

  mpz_class total = mu * power_gap(params.p, n) +
                    (params.r - rs_here + nu) * floor_pow_ratio(params.p, n) +
                    params.lambda[s];
  auto lowered = [&](long count) {
    mpz_class sum = 0;
    for (long i = 1; i <= count; ++i) {
      long shift = n - params.mu_at(static_cast<std::size_t>(i));
      if (shift < 0)
        throw InputError("n - mu_i must be nonnegative for every index used");
      sum += floor_pow_ratio(params.p, shift);
    }
    return sum;
  };
  return total - lowered(nu) - lowered(rs_other);
}

std::vector<Violation> validate_constraints(const GrowthParams& q) {
  std::vector<Violation> out;
  auto flag = [&](const std::string& constraint, const std::string& detail) {
    out.push_back({constraint, detail});
  };
  auto num = [](long v) { return std::to_string(v); };

  for (int s : {0, 1}) {
    const std::string i = std::to_string(s);
    if (q.rho[s] < q.r_s[s])
      flag("rho" + i + " >= r_s" + i,
           "rho" + i + "=" + num(q.rho[s]) + ", r_s" + i + "=" + num(q.r_s[s]));
    if (q.r_s[s] < q.nu[s])
      flag("r_s" + i + " >= nu" + i,
           "r_s" + i + "=" + num(q.r_s[s]) + ", nu" + i + "=" + num(q.nu[s]));
    if (q.nu[s] < 0) flag("nu" + i + " >= 0", "nu" + i + "=" + num(q.nu[s]));
    if (q.mu_coef[s] < 0)
      flag("mu_coef" + i + " >= 0", "mu_coef" + i + "=" + num(q.mu_coef[s]));
    if (q.delta[s] < 0)
      flag("delta" + i + " >= 0", "delta" + i + "=" + num(q.delta[s]));
  }
  if (q.rho[0] - q.r_s[0] != q.rho[1] - q.r_s[1])
    flag("rho0 - r_s0 = rho1 - r_s1",
         num(q.rho[0]) + "-" + num(q.r_s[0]) + " != " + num(q.rho[1]) + "-" +
             num(q.r_s[1]));
  for (std::size_t i = 0; i < q.mu_list.size(); ++i) {
    if (q.mu_list[i] < 0 ||
        (i + 1 < q.mu_list.size() && q.mu_list[i + 1] > q.mu_list[i])) {
      flag("mu_list nonincreasing >= 0", "mu_" + std::to_string(i + 1) + "=" +
                                             num(q.mu_list[i]));
      break;
    }
  }
  const long nu_min = std::min(q.nu[0], q.nu[1]);
  for (std::size_t i = 0; i < q.mu_list.size(); ++i)
    if (static_cast<long>(i) + 1 > nu_min && q.mu_list[i] != 0) {
      flag("mu_i = 0 for i > min(nu0, nu1)",
           "mu_" + std::to_string(i + 1) + "=" + num(q.mu_list[i]) +
               ", min(nu)=" + num(nu_min));
      break;
    }
  if (q.r_s[0] + q.r_s[1] > q.r)
    flag("r_s0 + r_s1 <= r", num(q.r_s[0]) + "+" + num(q.r_s[1]) + " > " +
                                 num(q.r));
  if (q.r > q.d) flag("r <= d", "r=" + num(q.r) + ", d=" + num(q.d));
  if (q.a_p == 0) {
    for (int s : {0, 1})
      if (q.delta[s] != 0)
        flag("delta" + std::to_string(s) + " = 0 when a_p = 0",
             "delta" + std::to_string(s) + "=" + num(q.delta[s]));
  } else if (q.rho[0] != q.rho[1]) {
    flag("rho0 = rho1 when a_p != 0",
         "rho0=" + num(q.rho[0]) + ", rho1=" + num(q.rho[1]) +
             ", a_p=" + num(q.a_p));
  }
  return out;
}

ConsistencyReport sha_consistency(std::uint32_t p, long d, long n_max) {
  require_odd_prime(p);
  if (d < 0) throw InputError("d must be nonnegative");
  if (n_max < 4) throw InputError("n_max must be at least 4");

  auto diff = [&](long n) -> mpz_class {
    return sha_exponent(d, p, n) - sha_exponent(d, p, n - 1);
  };
  auto base = [&](long n) -> mpz_class { return d * floor_pow_ratio(p, n); };

  // one constant per parity, fitted where the asymptotic regime is surest
  mpz_class lambda[2];
  for (int s : {0, 1}) {
    long n = n_max - (n_max % 2 == s ? 0 : 1);
    lambda[s] = diff(n) - base(n);
  }

  ConsistencyReport rep;
  rep.lambda0 = static_cast<long>(lambda[0].get_si());
  rep.lambda1 = static_cast<long>(lambda[1].get_si());
  long last_bad = 1;
  for (long n = 2; n <= n_max; ++n)
    if (diff(n) != base(n) + lambda[n % 2]) {
      if (!rep.first_counterexample) rep.first_counterexample = n;
      last_bad = n;
    }
  rep.verified_from = last_bad + 1;
  rep.holds = rep.verified_from == 2;
  return rep;
}

std::vector<ShaRow> sha_table(long d, std::uint32_t p, long n_begin,
                              long n_end) {
  if (n_begin > n_end)
    throw InputError("empty level range: n_begin exceeds n_end");
  std::vector<ShaRow> rows;
  for (long n = n_begin; n <= n_end; ++n) {
    ShaRow row;
    row.n = n;
    row.exponent = sha_exponent(d, p, n);
    row.diff = n == 0 ? mpz_class(0)
                      : row.exponent - sha_exponent(d, p, n - 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<DivisorWitness> divisor_form_witness(long d, std::uint32_t p) {
  if (d < 1) throw InputError("d must be positive");
  if (!detail::is_prime(p)) throw InputError("p must be prime");
  long a = 0;
  long dd = d;
  while (dd % p == 0) {
    dd /= static_cast<long>(p);
    ++a;
  }
  // p^l + 1 mod d' is periodic in l with the multiplicative order of p,
  // so one period decides
  long x = 1 % dd;
  for (long l = 0;; ++l) {
    if ((x + 1) % dd == 0) return DivisorWitness{l, a};
    x = static_cast<long>((static_cast<unsigned __int128>(x) * p) % dd);
    if (x == 1 % dd) break;
  }
  return std::nullopt;
}

bool ranks_stabilize(long d, std::uint32_t p) {
  return divisor_form_witness(d, p).has_value();
}

}  // namespace sstower
