#include "sstower/spec_doc.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "sstower/errors.hpp"

namespace sstower {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

long parse_long(const std::string& text, const std::string& what) {
  long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || end != last)
    throw InputError(what + " must be an integer (got '" + text + "')");
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || end != last)
    throw InputError(what + " must be a nonnegative integer (got '" + text +
                     "')");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> whitespace_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

}  // namespace

SpecDoc SpecDoc::parse(const std::string& text) {
  SpecDoc doc;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("line " + std::to_string(lineno) +
                       ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw InputError("line " + std::to_string(lineno) + ": empty key");
    if (doc.has(key))
      throw InputError("duplicate key '" + key + "'");
    doc.entries_.push_back({std::move(key), std::move(value)});
  }
  return doc;
}

bool SpecDoc::has(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

const std::string& SpecDoc::raw(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw InputError("missing key '" + key + "'");
}

long SpecDoc::integer(const std::string& key) const {
  return parse_long(raw(key), "value of '" + key + "'");
}

std::pair<Coord, std::uint64_t> parse_subgroup_token(const std::string& token) {
  std::string body = trim(token);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw InputError("unbalanced parentheses in subgroup token '" + token +
                       "'");
    body = body.substr(1, body.size() - 2);
  }
  auto parts = split(body, ',');
  if (parts.size() != 2)
    throw InputError("subgroup token '" + token +
                     "' must be a pair (frobenius, residue)");
  std::uint64_t a = parse_unsigned(trim(parts[0]), "frobenius coordinate");
  std::uint64_t u = parse_unsigned(trim(parts[1]), "unit residue");
  if (a > std::numeric_limits<Coord>::max())
    throw InputError("frobenius coordinate out of range in '" + token + "'");
  return {static_cast<Coord>(a), u};
}

void apply_doc(const SpecDoc& doc, FieldSpec& spec) {
  for (const auto& [key, value] : doc.entries()) {
    if (key == "p") {
      long v = parse_long(value, "p");
      if (v < 1 || v > std::numeric_limits<std::uint32_t>::max())
        throw InputError("p out of range");
      spec.p = static_cast<std::uint32_t>(v);
    } else if (key == "f") {
      long v = parse_long(value, "f");
      if (v < 1 || v > std::numeric_limits<std::uint32_t>::max())
        throw InputError("f out of range");
      spec.f = static_cast<std::uint32_t>(v);
    } else if (key == "m") {
      spec.m = static_cast<int>(parse_long(value, "m"));
    } else if (key == "a_p") {
      spec.a_p = static_cast<int>(parse_long(value, "a_p"));
    } else if (key == "subgroup") {
      spec.h_generators.clear();
      spec.full_cyclotomic = false;
      for (const std::string& token : whitespace_tokens(value)) {
        if (token == "full-cyclotomic")
          spec.full_cyclotomic = true;
        else
          spec.h_generators.push_back(parse_subgroup_token(token));
      }
    } else {
      throw InputError("unknown key '" + key + "' in field spec document");
    }
  }
}

void apply_doc(const SpecDoc& doc, GrowthParams& params) {
  for (const auto& [key, value] : doc.entries()) {
    if (key == "p") {
      long v = parse_long(value, "p");
      if (v < 1 || v > std::numeric_limits<std::uint32_t>::max())
        throw InputError("p out of range");
      params.p = static_cast<std::uint32_t>(v);
    } else if (key == "d") {
      params.d = parse_long(value, "d");
    } else if (key == "r") {
      params.r = parse_long(value, "r");
    } else if (key == "a_p") {
      params.a_p = parse_long(value, "a_p");
    } else if (key == "rho0") {
      params.rho[0] = parse_long(value, "rho0");
    } else if (key == "rho1") {
      params.rho[1] = parse_long(value, "rho1");
    } else if (key == "r_s0") {
      params.r_s[0] = parse_long(value, "r_s0");
    } else if (key == "r_s1") {
      params.r_s[1] = parse_long(value, "r_s1");
    } else if (key == "nu0") {
      params.nu[0] = parse_long(value, "nu0");
    } else if (key == "nu1") {
      params.nu[1] = parse_long(value, "nu1");
    } else if (key == "mu_coef0") {
      params.mu_coef[0] = parse_long(value, "mu_coef0");
    } else if (key == "mu_coef1") {
      params.mu_coef[1] = parse_long(value, "mu_coef1");
    } else if (key == "delta0") {
      params.delta[0] = parse_long(value, "delta0");
    } else if (key == "delta1") {
      params.delta[1] = parse_long(value, "delta1");
    } else if (key == "lambda0") {
      params.lambda[0] = parse_long(value, "lambda0");
    } else if (key == "lambda1") {
      params.lambda[1] = parse_long(value, "lambda1");
    } else if (key == "mu_list") {
      params.mu_list.clear();
      if (!trim(value).empty())
        for (const std::string& part : split(value, ','))
          params.mu_list.push_back(parse_long(trim(part), "mu_list entry"));
    } else {
      throw InputError("unknown key '" + key +
                       "' in growth parameter document");
    }
  }
}

std::string to_document(const FieldSpec& spec) {
  std::ostringstream out;
  out << "p = " << spec.p << "\n";
  out << "f = " << spec.f << "\n";
  out << "m = " << spec.m << "\n";
  out << "a_p = " << spec.a_p << "\n";
  out << "subgroup =";
  for (const auto& [a, u] : spec.h_generators)
    out << " (" << a << "," << u << ")";
  if (spec.full_cyclotomic) out << " full-cyclotomic";
  out << "\n";
  return out.str();
}

std::string to_document(const GrowthParams& params) {
  std::ostringstream out;
  out << "p = " << params.p << "\n";
  out << "d = " << params.d << "\n";
  out << "r = " << params.r << "\n";
  out << "a_p = " << params.a_p << "\n";
  for (int s : {0, 1}) out << "rho" << s << " = " << params.rho[s] << "\n";
  for (int s : {0, 1}) out << "r_s" << s << " = " << params.r_s[s] << "\n";
  for (int s : {0, 1}) out << "nu" << s << " = " << params.nu[s] << "\n";
  for (int s : {0, 1})
    out << "mu_coef" << s << " = " << params.mu_coef[s] << "\n";
  for (int s : {0, 1}) out << "delta" << s << " = " << params.delta[s] << "\n";
  for (int s : {0, 1})
    out << "lambda" << s << " = " << params.lambda[s] << "\n";
  out << "mu_list =";
  for (std::size_t i = 0; i < params.mu_list.size(); ++i)
    out << (i ? "," : " ") << params.mu_list[i];
  out << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read spec document: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace sstower
