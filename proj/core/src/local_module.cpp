#include "sstower/local_module.hpp"

#include <random>
#include <string>

namespace sstower {

namespace {

// Deterministic per (seed, salt); used to re-pick representatives inside
// a fixed coset, which the invariance relations make invisible to the
// module's isomorphism class.
Element shifted(const FiniteAbelianGroup& g, const Element& rep,
                const Subgroup& fuzz, std::uint64_t seed, std::uint64_t salt) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + salt);
  const auto& els = fuzz.elements();
  return g.add(rep, els[rng() % els.size()]);
}

GroupRingElement norm_impl(const Tower& t, int n,
                           const PresentationOptions& opts) {
  if (n < 0 || n > t.m_of_k)
    throw InputError("norm level " + std::to_string(n) +
                     " out of range (0 <= n <= " + std::to_string(t.m_of_k) +
                     ")");
  GroupRingElement nu;
  std::uint64_t salt = 0;
  for (const Element& rep : cosets(t.level(n - 1), t.level(n))) {
    Element chosen = rep;
    if (opts.shuffle_seed)
      chosen = shifted(t.galois, rep, t.level(n), *opts.shuffle_seed,
                       (static_cast<std::uint64_t>(n) << 32) | ++salt);
    nu.add_term(chosen, 1);
  }
  return nu;
}

}  // namespace

GroupRingElement norm_element(const Tower& tower, int n) {
  return norm_impl(tower, n, {});
}

GroupRingElement norm_element(const Tower& tower, int n,
                              const PresentationOptions& options) {
  return norm_impl(tower, n, options);
}

ModulePresentation build_presentation(const Tower& tower, long a_p) {
  return build_presentation(tower, a_p, {});
}

ModulePresentation build_presentation(const Tower& tower, long a_p,
                                      const PresentationOptions& options) {
  check_trace(tower.spec.p, a_p);
  const FiniteAbelianGroup& g = tower.galois;
  const bool two = tower.spec.p == 2;

  ModulePresentation pres;
  pres.group = g;
  for (int n = -1; n <= tower.m_of_k; ++n) pres.generator_levels.push_back(n);
  const auto idx = [](int n) { return static_cast<std::size_t>(n + 1); };
  const std::size_t width = pres.generator_count();

  Element frob = tower.frobenius;
  if (options.shuffle_seed)
    frob = shifted(g, frob, tower.level(-1), *options.shuffle_seed,
                   0xf70b0000ULL);
  Element frob_inv = g.negate(frob);
  const GroupRingElement one = GroupRingElement::one(g);

  // a_p - F - F^{-1}, merging terms when the lifts coincide
  GroupRingElement trace_form;
  trace_form.add_term(g.zero(), a_p);
  trace_form.add_term(frob, -1);
  trace_form.add_term(frob_inv, -1);
  // a_p^2 - a_p F - a_p F^{-1} - 1, the p = 2 variant at level 0
  GroupRingElement trace_form_two;
  trace_form_two.add_term(g.zero(), mpz_class(a_p) * a_p - 1);
  trace_form_two.add_term(frob, -a_p);
  trace_form_two.add_term(frob_inv, -a_p);

  // (i): each level's stabilizer acts trivially on its generator
  for (int n = -1; n <= tower.m_of_k; ++n)
    for (const Element& gen : tower.level(n).minimal_generators()) {
      std::vector<GroupRingElement> row(width);
      row[idx(n)] = GroupRingElement::basis(gen) - one;
      pres.relations.push_back(std::move(row));
    }

  // (iv): nu_0 e_0 = (trace form) e_{-1}
  if (tower.m_of_k >= 0) {
    std::vector<GroupRingElement> row(width);
    row[idx(0)] = norm_element(tower, 0, options);
    row[idx(-1)] = -(two ? trace_form_two : trace_form);
    pres.relations.push_back(std::move(row));
  }

  // (iii): nu_1 e_1 - a_p e_0 + c e_{-1} = 0, c twisted when p = 2
  if (tower.m_of_k >= 1) {
    std::vector<GroupRingElement> row(width);
    row[idx(1)] = norm_element(tower, 1, options);
    row[idx(0)] = mpz_class(-a_p) * one;
    row[idx(-1)] = mpz_class(tower.c) * (two ? trace_form : one);
    pres.relations.push_back(std::move(row));
  }

  // (ii): the recurrence through the remaining layers
  for (int n = 2; n <= tower.m_of_k; ++n) {
    std::vector<GroupRingElement> row(width);
    row[idx(n)] = norm_element(tower, n, options);
    row[idx(n - 1)] = mpz_class(-a_p) * one;
    row[idx(n - 2)] = one;
    pres.relations.push_back(std::move(row));
  }
  return pres;
}

IntMatrix flatten(const ModulePresentation& pres) {
  const FiniteAbelianGroup& g = pres.group;
  const std::size_t n = g.order();
  IntMatrix a(pres.relations.size() * n, pres.generator_count() * n);
  const auto elems = g.elements();
  for (std::size_t r = 0; r < pres.relations.size(); ++r)
    for (std::size_t gi = 0; gi < n; ++gi) {
      const std::size_t row = r * n + gi;
      for (std::size_t j = 0; j < pres.generator_count(); ++j)
        for (const auto& [h, coeff] : pres.relations[r][j].terms())
          a(row, j * n + g.index_of(g.add(elems[gi], h))) += coeff;
    }
  return a;
}

ModuleInvariants analyze_module(const ModulePresentation& pres,
                                const mpz_class& p) {
  return cokernel_invariants(flatten(pres), p);
}

}  // namespace sstower
