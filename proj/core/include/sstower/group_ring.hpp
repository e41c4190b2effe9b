#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "sstower/finite_abelian.hpp"

namespace sstower {

/*
 * An element of the integral group ring Z[G] of a finite abelian group,
 * stored sparsely as group element -> coefficient. Coefficients are exact
 * integers throughout; terms with coefficient 0 are never stored. The
 * element does not carry its group: additive operations are group-free,
 * and the convolution product takes the group explicitly.
 */
class GroupRingElement {
 public:
  using Terms = std::map<Element, mpz_class>;

  GroupRingElement() = default;

  static GroupRingElement zero() { return {}; }
  // The ring identity 1*(identity of g).
  static GroupRingElement one(const FiniteAbelianGroup& g);
  // The basis element 1*a.
  static GroupRingElement basis(const Element& a);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  mpz_class coefficient(const Element& a) const;

  // terms_[a] += c, erasing the term if it cancels to 0.
  GroupRingElement& add_term(const Element& a, const mpz_class& c);

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const mpz_class& scalar);

  friend GroupRingElement operator+(GroupRingElement a,
                                    const GroupRingElement& b) {
    a += b;
    return a;
  }
  friend GroupRingElement operator-(GroupRingElement a,
                                    const GroupRingElement& b) {
    a -= b;
    return a;
  }
  GroupRingElement operator-() const;
  friend GroupRingElement operator*(const mpz_class& scalar,
                                    GroupRingElement a) {
    a *= scalar;
    return a;
  }

  bool operator==(const GroupRingElement&) const = default;

 private:
  Terms terms_;
};

// Convolution product in Z[G]; commutative since G is abelian.
GroupRingElement multiply(const FiniteAbelianGroup& g,
                          const GroupRingElement& a,
                          const GroupRingElement& b);

}  // namespace sstower
