#include "sstower/finite_abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "sstower/smith.hpp"

namespace sstower {

namespace {

std::string tuple_string(const Element& a) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s << ", ";
    s << a[i];
  }
  s << ')';
  return s.str();
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Coord> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  for (Coord n : orders_) {
    if (n == 0) throw InputError("cyclic factor orders must be positive");
    order_ *= n;
    if (order_ > (std::uint64_t{1} << 32))
      throw InputError("group order exceeds the supported range");
  }
}

bool FiniteAbelianGroup::is_valid(const Element& a) const {
  if (a.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= orders_[i]) return false;
  return true;
}

void FiniteAbelianGroup::check(const Element& a) const {
  if (!is_valid(a))
    throw InputError("element " + tuple_string(a) +
                     " does not lie in the group");
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<Coord>((std::uint64_t{a[i]} + b[i]) % orders_[i]);
  return r;
}

Element FiniteAbelianGroup::negate(const Element& a) const {
  check(a);
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
  return r;
}

Element FiniteAbelianGroup::sub(const Element& a, const Element& b) const {
  return add(a, negate(b));
}

Element FiniteAbelianGroup::scaled(const Element& a, std::uint64_t k) const {
  check(a);
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<Coord>((k % orders_[i]) * a[i] % orders_[i]);
  return r;
}

std::uint64_t FiniteAbelianGroup::element_order(const Element& a) const {
  check(a);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t ni = orders_[i];
    ord = std::lcm(ord, ni / std::gcd(ni, std::uint64_t{a[i]}));
  }
  return ord;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  Element cur = zero();
  for (std::uint64_t n = 0; n < order_; ++n) {
    out.push_back(cur);
    // increment in mixed radix, least significant coordinate last
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (++cur[i] < orders_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::uint64_t FiniteAbelianGroup::index_of(const Element& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) idx = idx * orders_[i] + a[i];
  return idx;
}

Element FiniteAbelianGroup::element_at(std::uint64_t index) const {
  if (index >= order_)
    throw InputError("element index out of range");
  Element a(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    a[i] = static_cast<Coord>(index % orders_[i]);
    index /= orders_[i];
  }
  return a;
}

Subgroup Subgroup::from_elements(const FiniteAbelianGroup& parent,
                                 std::vector<Element> elements) {
  for (const Element& e : elements) parent.check(e);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (!std::binary_search(elements.begin(), elements.end(), parent.zero()))
    throw InputError("subgroup must contain the identity");
  for (const Element& a : elements)
    for (const Element& b : elements)
      if (!std::binary_search(elements.begin(), elements.end(),
                              parent.add(a, b)))
        throw InputError("element set is not closed under the group law");
  return Subgroup(parent, std::move(elements));
}

bool Subgroup::contains(const Element& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [&](const Element& e) { return contains(e); });
}

std::vector<Element> Subgroup::minimal_generators() const {
  std::vector<Element> gens;
  std::set<Element> span{parent_.zero()};
  for (const Element& e : elements_) {
    if (span.count(e)) continue;
    gens.push_back(e);
    // close the span under addition of the new generator
    std::vector<Element> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const Element& x : frontier) {
        Element y = parent_.add(x, e);
        if (span.insert(y).second) next.push_back(y);
      }
      frontier = std::move(next);
    }
    if (span.size() == elements_.size()) break;
  }
  return gens;
}

Subgroup subgroup_generated(const FiniteAbelianGroup& g,
                            const std::vector<Element>& gens) {
  for (const Element& e : gens) g.check(e);
  std::set<Element> span{g.zero()};
  std::vector<Element> frontier(span.begin(), span.end());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const Element& x : frontier)
      for (const Element& e : gens) {
        Element y = g.add(x, e);
        if (span.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup(g, std::vector<Element>(span.begin(), span.end()));
}

Element Projection::operator()(const Element& a) const {
  Element out(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * columns_[j][i];
    mpz_class r;
    mpz_mod(r.get_mpz_t(), s.get_mpz_t(), moduli_[j].get_mpz_t());
    out[j] = static_cast<Coord>(r.get_ui());
  }
  return out;
}

QuotientResult quotient(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!(h.parent() == g))
    throw InputError("quotient: subgroup belongs to a different group");
  const std::size_t k = g.factor_count();

  // Relation lattice of G/H in Z^k: factor orders plus the elements of H.
  IntMatrix rel(k + h.order(), k);
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = g.cyclic_orders()[i];
  for (std::size_t r = 0; r < h.order(); ++r)
    for (std::size_t j = 0; j < k; ++j) rel(k + r, j) = h.elements()[r][j];

  SmithDecomposition d = smith_normal_form(rel, true);

  // Row space of rel maps under V to the diagonal lattice, so coordinates
  // of x * V taken mod d_j present the quotient; d_j == 1 factors vanish.
  QuotientResult q;
  std::vector<Coord> orders;
  for (std::size_t j = 0; j < k; ++j) {
    const mpz_class& dj = d.invariant_factors[j];
    if (dj == 1) continue;
    orders.push_back(static_cast<Coord>(dj.get_ui()));
    std::vector<mpz_class> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = (*d.v)(i, j);
    q.projection.columns_.push_back(std::move(col));
    q.projection.moduli_.push_back(dj);
  }
  q.group = FiniteAbelianGroup(std::move(orders));
  return q;
}

std::vector<Element> cosets(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!(h.parent() == g))
    throw InputError("cosets: subgroup belongs to a different group");
  std::vector<Element> reps;
  std::set<Element> seen;
  for (const Element& e : g.elements()) {
    if (seen.count(e)) continue;
    reps.push_back(e);  // ascending sweep: first hit is the smallest
    for (const Element& s : h.elements()) seen.insert(g.add(e, s));
  }
  return reps;
}

std::vector<Element> cosets(const Subgroup& ambient, const Subgroup& h) {
  if (!(h.parent() == ambient.parent()))
    throw InputError("cosets: subgroups belong to different groups");
  if (!ambient.contains_subgroup(h))
    throw InputError("cosets: subgroup is not contained in the ambient one");
  const FiniteAbelianGroup& g = ambient.parent();
  std::vector<Element> reps;
  std::set<Element> seen;
  for (const Element& e : ambient.elements()) {
    if (seen.count(e)) continue;
    reps.push_back(e);
    for (const Element& s : h.elements()) seen.insert(g.add(e, s));
  }
  return reps;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!(a.parent() == b.parent()))
    throw InputError("intersect: subgroups belong to different groups");
  std::vector<Element> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return Subgroup::from_elements(a.parent(), std::move(common));
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& g) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> queue;
  const std::vector<Element> trivial{g.zero()};
  seen.insert(trivial);
  queue.push_back(trivial);
  const std::vector<Element> all = g.elements();

  // Grow the lattice one cyclic extension at a time; every subgroup is
  // reached because it is generated by finitely many elements.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<Element> base = queue[head];
    for (const Element& e : all) {
      if (std::binary_search(base.begin(), base.end(), e)) continue;
      std::vector<Element> gens = base;
      gens.push_back(e);
      Subgroup bigger = subgroup_generated(g, gens);
      if (seen.insert(bigger.elements()).second)
        queue.push_back(bigger.elements());
    }
  }

  std::vector<Subgroup> out;
  out.reserve(queue.size());
  for (auto& els : queue)
    out.push_back(Subgroup::from_elements(g, std::move(els)));
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return out;
}

}  // namespace sstower
