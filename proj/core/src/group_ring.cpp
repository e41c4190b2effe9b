#include "sstower/group_ring.hpp"

namespace sstower {

GroupRingElement GroupRingElement::one(const FiniteAbelianGroup& g) {
  return basis(g.zero());
}

GroupRingElement GroupRingElement::basis(const Element& a) {
  GroupRingElement e;
  e.terms_[a] = 1;
  return e;
}

mpz_class GroupRingElement::coefficient(const Element& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

GroupRingElement& GroupRingElement::add_term(const Element& a,
                                             const mpz_class& c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

GroupRingElement multiply(const FiniteAbelianGroup& g,
                          const GroupRingElement& a,
                          const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) r.add_term(g.add(x, y), cx * cy);
  return r;
}

}  // namespace sstower
