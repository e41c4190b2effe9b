#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sstower/group_ring.hpp"
#include "sstower/smith.hpp"
#include "sstower/tower.hpp"

namespace sstower {

/*
 * Generators-and-relations presentation of the local points module over
 * the integral group ring Z[G]: one generator e_n per level n = -1 ..
 * m(K), each relation row assigning a group-ring coefficient to each
 * generator.
 */
struct ModulePresentation {
  FiniteAbelianGroup group;           // G
  std::vector<int> generator_levels;  // -1, 0, ..., m(K) in order
  // One coefficient per generator in each row.
  std::vector<std::vector<GroupRingElement>> relations;

  std::size_t generator_count() const { return generator_levels.size(); }

  bool operator==(const ModulePresentation&) const = default;
};

// Deterministic by default. With shuffle_seed set, coset representatives
// and the Frobenius lift are re-chosen pseudo-randomly; module invariants
// must not depend on either choice (the differences act trivially through
// the invariance relations).
struct PresentationOptions {
  std::optional<std::uint64_t> shuffle_seed;
};

// The norm from level n to level n-1 as a ring element: the sum, with
// coefficient 1, of one representative per coset of G_n in G_{n-1}
// (canonically the lexicographically smallest). Requires 0 <= n <= m(K).
GroupRingElement norm_element(const Tower& tower, int n);
GroupRingElement norm_element(const Tower& tower, int n,
                              const PresentationOptions& options);

/*
 * The full relation system of the presented module, writing nu_n for
 * norm_element(tower, n), F for the Frobenius lift and c for
 * [K_0(zeta_0):K_0]:
 *   (i)   (g - 1) e_n = 0 for each minimal generator g of G_n, every n;
 *   (ii)  nu_n e_n - a_p e_{n-1} + e_{n-2} = 0 for 2 <= n <= m(K);
 *   (iii) nu_1 e_1 - a_p e_0 + c e_{-1} = 0 if m(K) >= 1, with c replaced
 *         by c (a_p - F - F^{-1}) when p = 2;
 *   (iv)  nu_0 e_0 - (a_p - F - F^{-1}) e_{-1} = 0 if m(K) >= 0, with
 *         (a_p^2 - a_p F - a_p F^{-1} - 1) as the coefficient when p = 2.
 * Families (ii)-(iv) are truncated to the levels that exist; an
 * unramified K (m(K) = -1) yields the free rank-1 module on e_{-1}.
 */
ModulePresentation build_presentation(const Tower& tower, long a_p);
ModulePresentation build_presentation(const Tower& tower, long a_p,
                                      const PresentationOptions& options);

// Expand every group-ring coefficient to its |G| x |G| regular-
// representation block: (relations * |G|) rows, (generators * |G|)
// columns grouped per generator. The rows span the relation lattice of
// the module's underlying abelian group on the basis {g e_j}.
IntMatrix flatten(const ModulePresentation& pres);

// Invariants of the presented module: Smith normal form of the flattened
// relation matrix, free rank and p-torsion read off the invariant
// factors.
ModuleInvariants analyze_module(const ModulePresentation& pres,
                                const mpz_class& p);

}  // namespace sstower
