#include "sstower/tower.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "detail.hpp"

namespace sstower {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 40) / base)
      throw InputError("cyclotomic depth out of the supported range");
    r *= base;
  }
  return r;
}

}  // namespace

void check_trace(std::uint32_t p, long a_p) {
  if (p > 3) {
    if (a_p != 0)
      throw InputError("a_p must be 0 for p>3 (got " + std::to_string(a_p) +
                       " at p=" + std::to_string(p) + ")");
    return;
  }
  long lp = static_cast<long>(p);
  if (a_p != 0 && a_p != lp && a_p != -lp)
    throw InputError("a_p must be 0 or +-p for p=2,3 (got " +
                     std::to_string(a_p) + " at p=" + std::to_string(p) + ")");
}

UnitsGroup units_group(std::uint32_t p, int m) {
  if (!detail::is_prime(p)) throw InputError("p must be prime");
  if (m < 0) throw InputError("unit groups need cyclotomic depth m >= 0");

  UnitsGroup u;
  u.p_ = p;
  u.m_ = m;
  u.modulus_ = checked_pow(p, static_cast<unsigned>(m) + (p == 2 ? 2 : 1));

  if (p != 2) {
    // cyclic: pick the least primitive root modulo p^{m+1}
    std::uint64_t order = (p - 1) * checked_pow(p, static_cast<unsigned>(m));
    auto factors = prime_factors(order);
    std::uint64_t g = 2;
    for (;; ++g) {
      if (g % p == 0) continue;
      bool primitive = true;
      for (std::uint64_t q : factors)
        if (pow_mod(g, order / q, u.modulus_) == 1) {
          primitive = false;
          break;
        }
      if (primitive) break;
    }
    u.group_ = FiniteAbelianGroup({static_cast<Coord>(order)});
    u.generator_residues_ = {g};
    u.residue_by_rank_.resize(order);
    std::uint64_t r = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      u.residue_by_rank_[k] = r;
      r = mul_mod(r, g, u.modulus_);
    }
  } else {
    // (Z/2^{m+2})^* = <-1> x <5>, the second factor of order 2^m
    std::uint64_t half = checked_pow(2, static_cast<unsigned>(m));
    u.group_ = FiniteAbelianGroup({2, static_cast<Coord>(half)});
    u.generator_residues_ = {u.modulus_ - 1};
    if (half > 1) u.generator_residues_.push_back(5);
    u.residue_by_rank_.resize(2 * half);
    for (std::uint64_t eps = 0; eps < 2; ++eps)
      for (std::uint64_t k = 0; k < half; ++k) {
        std::uint64_t r = pow_mod(5, k, u.modulus_);
        if (eps) r = mul_mod(r, u.modulus_ - 1, u.modulus_);
        u.residue_by_rank_[eps * half + k] = r;
      }
  }

  const auto all = u.group_.elements();
  for (std::uint64_t i = 0; i < u.group_.order(); ++i)
    u.by_residue_.push_back({u.residue_by_rank_[i], all[i]});
  std::sort(u.by_residue_.begin(), u.by_residue_.end());

  for (int n = -1; n <= m; ++n) {
    std::uint64_t step =
        checked_pow(p, static_cast<unsigned>(n) + (p == 2 ? 2 : 1));
    if (n == -1) step = 1;
    std::vector<Element> members;
    for (std::uint64_t i = 0; i < u.group_.order(); ++i)
      if (u.residue_by_rank_[i] % step == 1 % step) members.push_back(all[i]);
    u.filtration_.push_back(Subgroup::from_elements(u.group_, members));
  }
  return u;
}

std::uint64_t UnitsGroup::residue_of(const Element& e) const {
  return residue_by_rank_[group_.index_of(e)];
}

Element UnitsGroup::element_of(std::uint64_t residue) const {
  residue %= modulus_;
  auto it = std::lower_bound(
      by_residue_.begin(), by_residue_.end(), residue,
      [](const auto& entry, std::uint64_t r) { return entry.first < r; });
  if (it == by_residue_.end() || it->first != residue)
    throw InputError("residue " + std::to_string(residue) +
                     " is not a unit modulo " + std::to_string(modulus_));
  return it->second;
}

const Subgroup& UnitsGroup::filtration(int n) const {
  if (n < -1 || n > m_)
    throw InputError("filtration level " + std::to_string(n) +
                     " out of range");
  return filtration_[static_cast<std::size_t>(n + 1)];
}

std::vector<std::pair<Coord, std::uint64_t>> full_cyclotomic_generators(
    std::uint32_t p, int m) {
  std::vector<std::pair<Coord, std::uint64_t>> out;
  for (std::uint64_t r : units_group(p, m).generator_residues())
    out.push_back({0, r});
  return out;
}

const Subgroup& Tower::level(int n) const {
  if (n < -1 || n > max_level())
    throw InputError("tower level " + std::to_string(n) + " out of range");
  return levels[static_cast<std::size_t>(n + 1)];
}

std::uint64_t Tower::degree(int n) const {
  if (n < -1 || n > max_level())
    throw InputError("tower level " + std::to_string(n) + " out of range");
  return degrees[static_cast<std::size_t>(n + 1)];
}

Tower build_tower(const FieldSpec& spec) {
  if (spec.f == 0) throw InputError("f must be positive");
  if (spec.m < -1) throw InputError("m must be at least -1");
  check_trace(spec.p, spec.a_p);

  FieldSpec s = spec;
  if (s.m == -1) {
    // no cyclotomic part: only trivial unit coordinates are meaningful,
    // and the field is unramified by definition
    for (const auto& [a, res] : s.h_generators)
      if (res != 1)
        throw InputError(
            "m = -1 admits no unit-part generators (got residue " +
            std::to_string(res) + ")");
    s.m = 0;
    s.full_cyclotomic = true;
  }

  Tower t;
  UnitsGroup units = units_group(s.p, s.m);

  std::vector<Coord> ambient_orders{s.f};
  for (Coord n : units.group().cyclic_orders()) ambient_orders.push_back(n);
  t.ambient = FiniteAbelianGroup(ambient_orders);

  if (s.full_cyclotomic) {
    for (std::uint64_t r : units.generator_residues())
      s.h_generators.push_back({0, r});
    s.full_cyclotomic = false;
  }
  std::vector<Element> h_gens;
  for (auto& [a, res] : s.h_generators) {
    a = static_cast<Coord>(a % s.f);
    Element unit = units.element_of(res);
    res = units.residue_of(unit);
    Element e{a};
    e.insert(e.end(), unit.begin(), unit.end());
    h_gens.push_back(e);
  }
  t.spec = s;
  t.h = subgroup_generated(t.ambient, h_gens);

  QuotientResult q = quotient(t.ambient, t.h);
  t.galois = q.group;
  t.to_galois = q.projection;

  auto lift = [&](const Element& unit) {
    Element e{0};
    e.insert(e.end(), unit.begin(), unit.end());
    return e;
  };

  for (int n = -1; n <= s.m; ++n) {
    std::vector<Element> image;
    for (const Element& unit : units.filtration(n).elements())
      image.push_back(t.to_galois(lift(unit)));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    Subgroup g_n = Subgroup::from_elements(t.galois, image);
    t.degrees.push_back(t.galois.order() / g_n.order());
    t.levels.push_back(std::move(g_n));
  }
  // the levels decrease and G_m is always trivial, so this terminates
  for (int n = -1;; ++n)
    if (t.levels[static_cast<std::size_t>(n + 1)].is_trivial()) {
      t.m_of_k = n;
      break;
    }

  // c = [K_0(zeta_0) : K_0]: compare H Delta_0 with the full stabilizer
  // (Z/f) x Delta_0 of zeta_0 (Frobenius fixes p-power roots of unity).
  std::vector<Element> b_gens = t.h.elements();
  for (const Element& unit : units.filtration(0).elements())
    b_gens.push_back(lift(unit));
  Subgroup b = subgroup_generated(t.ambient, b_gens);
  std::vector<Element> a_members;
  for (Coord a = 0; a < s.f; ++a)
    for (const Element& unit : units.filtration(0).elements()) {
      Element e{a};
      e.insert(e.end(), unit.begin(), unit.end());
      a_members.push_back(e);
    }
  Subgroup a_sub = Subgroup::from_elements(t.ambient, a_members);
  t.c = b.order() / intersect(b, a_sub).order();

  Element frob = t.ambient.zero();
  frob[0] = static_cast<Coord>(1 % s.f);
  t.frobenius = t.to_galois(frob);
  return t;
}

std::uint64_t layer_degree(const Tower& t, int n) { return t.degree(n); }

}  // namespace sstower
