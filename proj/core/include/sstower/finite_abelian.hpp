#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sstower/errors.hpp"

namespace sstower {

using Coord = std::uint32_t;

// An element of a finite abelian group written as a product of cyclic
// factors: a residue tuple, coordinate i reduced modulo the i-th factor
// order. Tuples compare lexicographically (std::vector's operator<), which
// is the ordering used for canonical subgroup/coset representatives.
using Element = std::vector<Coord>;

/*
 * A finite abelian group presented as Z/n_1 x ... x Z/n_k with the
 * componentwise operation written additively. Groups here are small (order
 * up to a few thousand); elements are dense residue tuples so that all
 * Galois-theoretic bookkeeping stays directly inspectable.
 */
class FiniteAbelianGroup {
 public:
  // Empty product: the trivial group, whose one element is the empty tuple.
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Coord> cyclic_orders);

  const std::vector<Coord>& cyclic_orders() const { return orders_; }
  std::size_t factor_count() const { return orders_.size(); }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  Element zero() const { return Element(orders_.size(), 0); }
  bool is_valid(const Element& a) const;
  void check(const Element& a) const;  // throws InputError on invalid tuples

  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element scaled(const Element& a, std::uint64_t k) const;
  std::uint64_t element_order(const Element& a) const;

  // All elements in lexicographic order; size() == order().
  std::vector<Element> elements() const;

  // Rank of `a` in the lexicographic enumeration (mixed-radix value), and
  // its inverse. elements()[index_of(a)] == a.
  std::uint64_t index_of(const Element& a) const;
  Element element_at(std::uint64_t index) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<Coord> orders_;
  std::uint64_t order_ = 1;
};

/*
 * A subgroup held as the explicit, lexicographically sorted set of its
 * elements. Construction always verifies closure, so a Subgroup value is
 * a subgroup by construction.
 */
class Subgroup {
 public:
  // The trivial subgroup of the trivial group.
  Subgroup() : elements_{Element{}} {}

  // Verifies that `elements` is closed under the group operation and
  // contains the identity; throws InputError otherwise.
  static Subgroup from_elements(const FiniteAbelianGroup& parent,
                                std::vector<Element> elements);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool contains(const Element& a) const;
  bool contains_subgroup(const Subgroup& other) const;

  // A small generating set, chosen greedily over the sorted element list.
  // Deterministic; empty for the trivial subgroup.
  std::vector<Element> minimal_generators() const;

  bool operator==(const Subgroup&) const = default;

 private:
  friend Subgroup subgroup_generated(const FiniteAbelianGroup&,
                                     const std::vector<Element>&);
  Subgroup(FiniteAbelianGroup parent, std::vector<Element> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {}

  FiniteAbelianGroup parent_;
  std::vector<Element> elements_;  // sorted
};

// Smallest subgroup containing `gens`; empty gens yield the trivial
// subgroup. Out-of-range generator coordinates are an input error.
Subgroup subgroup_generated(const FiniteAbelianGroup& g,
                            const std::vector<Element>& gens);

struct QuotientResult;

// Image description of the canonical projection G -> G/H: x maps to
// (x * V) mod d on the retained invariant-factor coordinates.
class Projection {
 public:
  Element operator()(const Element& a) const;

 private:
  friend struct QuotientResult;
  friend QuotientResult quotient(const FiniteAbelianGroup&, const Subgroup&);
  std::vector<std::vector<mpz_class>> columns_;  // one per retained factor
  std::vector<mpz_class> moduli_;
};

struct QuotientResult {
  // Quotient in canonical invariant-factor form (factors of order 1
  // dropped), so isomorphic quotients compare equal.
  FiniteAbelianGroup group;
  Projection projection;
};

// G/H together with the projection map; kernel of the projection is
// exactly H. Computed from the Smith normal form of the relation lattice
// spanned by the factor orders and the elements of H.
QuotientResult quotient(const FiniteAbelianGroup& g, const Subgroup& h);

// Exactly [G:H] coset representatives, one per coset of H in G: the
// lexicographically smallest tuple of each coset.
std::vector<Element> cosets(const FiniteAbelianGroup& g, const Subgroup& h);

// Representatives of the cosets of `h` inside the subgroup `ambient`
// (h must be contained in ambient); again lexicographically smallest.
std::vector<Element> cosets(const Subgroup& ambient, const Subgroup& h);

// Intersection of two subgroups of the same parent.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Every subgroup of g, sorted by (order, element list). Intended for the
// small groups this library deals in.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g);

}  // namespace sstower
