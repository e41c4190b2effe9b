#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sstower/finite_abelian.hpp"

namespace sstower {

/*
 * A finite abelian extension K of Q_p, encoded by where it sits inside the
 * ambient field L = Q_p^{nr,f}(zeta_m): K is the fixed field of the
 * subgroup H of Gal(L/Q_p) = (Z/f) x U generated by h_generators. Here
 * zeta_m has order p^{m+1} for odd p and 2^{m+2} for p = 2, and U is the
 * corresponding unit group. Every finite abelian extension of Q_p arises
 * this way, so all field arithmetic below reduces to finite abelian group
 * computations.
 */
struct FieldSpec {
  std::uint32_t p = 3;
  std::uint32_t f = 1;  // degree of the unramified part of L
  int m = 0;            // cyclotomic depth of L; -1 means no cyclotomic part
  // Generators of H as (Frobenius coordinate in Z/f, unit residue) pairs.
  std::vector<std::pair<Coord, std::uint64_t>> h_generators;
  // Adds all of {0} x U to H, making K unramified; the keyword form of
  // the same request, used before p and m are known.
  bool full_cyclotomic = false;
  int a_p = 0;  // trace of Frobenius on the supersingular reduction

  bool operator==(const FieldSpec&) const = default;
};

// Supersingularity forces a_p = 0 for p > 3 and a_p in {0, p, -p} for
// p = 2, 3. Throws InputError otherwise.
void check_trace(std::uint32_t p, long a_p);

/*
 * The unit group U = (Z/p^{m+1})^* (odd p) or (Z/2^{m+2})^* (p = 2) as a
 * labeled FiniteAbelianGroup, together with its congruence filtration
 *   Delta_n = { u = 1 mod p^{n+1} }   (odd p; mod 2^{n+2} for p = 2)
 * for 0 <= n <= m, and Delta_{-1} = U. The p = 2 index shift lives
 * entirely here; consumers are index-uniform.
 */
class UnitsGroup {
 public:
  std::uint32_t p() const { return p_; }
  int m() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  const FiniteAbelianGroup& group() const { return group_; }

  std::uint64_t residue_of(const Element& e) const;
  // Inverse label lookup; throws InputError if `residue` is not a unit
  // modulo modulus().
  Element element_of(std::uint64_t residue) const;

  // Delta_n for -1 <= n <= m.
  const Subgroup& filtration(int n) const;

  // Residues generating the whole group (a primitive root for odd p;
  // {-1, 5} for p = 2).
  const std::vector<std::uint64_t>& generator_residues() const {
    return generator_residues_;
  }

 private:
  friend UnitsGroup units_group(std::uint32_t p, int m);
  UnitsGroup() = default;

  std::uint32_t p_ = 0;
  int m_ = 0;
  std::uint64_t modulus_ = 0;
  FiniteAbelianGroup group_;
  std::vector<std::uint64_t> generator_residues_;
  std::vector<std::uint64_t> residue_by_rank_;       // enumeration order
  std::vector<std::pair<std::uint64_t, Element>> by_residue_;  // sorted
  std::vector<Subgroup> filtration_;                 // index n+1, n = -1..m
};

UnitsGroup units_group(std::uint32_t p, int m);

// Generators of the subgroup {0} x U of (Z/f) x U, in FieldSpec pair form.
// With H containing these, K is unramified: the one encoding used for
// m(K) = -1 fields.
std::vector<std::pair<Coord, std::uint64_t>> full_cyclotomic_generators(
    std::uint32_t p, int m);

/*
 * The layer structure of K: K_n = K `intersect` Q_p^{nr}(zeta_n) for
 * n = -1, 0, ..., m, realized through the Galois group G = Gal(K/Q_p) and
 * its subgroups G_n = Gal(K/K_n). Everything is exact group data.
 */
struct Tower {
  FieldSpec spec;              // normalized: m >= 0
  FiniteAbelianGroup ambient;  // (Z/f) x U
  Subgroup h;                  // Gal(L/K), subgroup of ambient
  FiniteAbelianGroup galois;   // G = ambient/H, invariant-factor form
  Projection to_galois;

  // G_n for n = -1 .. m (index n+1). Nested decreasingly; G_{m(K)} is the
  // first trivial one.
  std::vector<Subgroup> levels;
  std::vector<std::uint64_t> degrees;  // [K_n : Q_p] for n = -1 .. m
  int m_of_k = -1;                     // smallest n with K_n = K
  std::uint64_t c = 1;                 // [K_0(zeta_0) : K_0]
  // Image in G of the Frobenius generator of the unramified factor;
  // canonical only modulo G_{-1}.
  Element frobenius;

  int max_level() const { return static_cast<int>(levels.size()) - 2; }
  const Subgroup& level(int n) const;
  std::uint64_t degree(int n) const;
};

Tower build_tower(const FieldSpec& spec);

// [K_n : Q_p] for -1 <= n <= m(K).
std::uint64_t layer_degree(const Tower& t, int n);

}  // namespace sstower
