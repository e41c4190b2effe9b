#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sstower/growth.hpp"
#include "sstower/tower.hpp"

namespace sstower {

/*
 * Flat `key = value` document, one assignment per line; '#' starts a
 * comment, blank lines are ignored. Keys mirror the FieldSpec /
 * GrowthParams field names, so a saved document doubles as a regression
 * fixture. Duplicate keys are input errors.
 */
class SpecDoc {
 public:
  static SpecDoc parse(const std::string& text);

  bool has(const std::string& key) const;
  // Raw value text; InputError when the key is absent.
  const std::string& raw(const std::string& key) const;
  long integer(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;  // in file order
};

// Overlay the document's assignments onto `spec`. Field keys: p, f, m,
// a_p, subgroup (whitespace-separated "(a,u)" tuples and/or the keyword
// full-cyclotomic). Unknown keys are input errors.
void apply_doc(const SpecDoc& doc, FieldSpec& spec);

// Overlay onto growth parameters. Keys: p, d, r, a_p, rho0, rho1, r_s0,
// r_s1, nu0, nu1, mu_coef0, mu_coef1, delta0, delta1, lambda0, lambda1,
// mu_list (comma-separated, possibly empty).
void apply_doc(const SpecDoc& doc, GrowthParams& params);

// One "(a,u)" pair: a the Frobenius coordinate, u the unit residue.
std::pair<Coord, std::uint64_t> parse_subgroup_token(const std::string& token);

std::string to_document(const FieldSpec& spec);
std::string to_document(const GrowthParams& params);

// Whole file as a string; InputError on unreadable path.
std::string read_text_file(const std::string& path);

}  // namespace sstower
