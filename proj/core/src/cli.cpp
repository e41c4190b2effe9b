#include "sstower/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sstower/errors.hpp"
#include "sstower/growth.hpp"
#include "sstower/local_module.hpp"
#include "sstower/smith.hpp"
#include "sstower/spec_doc.hpp"
#include "sstower/tower.hpp"

namespace sstower::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

long parse_long(const std::string& text, const std::string& what) {
  long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [end, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || end != last)
    throw InputError(what + " must be an integer (got '" + text + "')");
  return v;
}

// "k" or "a..b" as an inclusive level range
std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = parse_long(text, "level");
    return {v, v};
  }
  return {parse_long(text.substr(0, dots), "level range start"),
          parse_long(text.substr(dots + 2), "level range end")};
}

enum class Format { human, json, csv };

Format parse_format(const std::string& name, bool csv_available) {
  if (name == "human") return Format::human;
  if (name == "json") return Format::json;
  if (name == "csv") {
    if (!csv_available)
      throw InputError("csv output is not available for this command");
    return Format::csv;
  }
  throw InputError("unknown format '" + name + "' (human, json" +
                   (csv_available ? ", csv)" : ")"));
}

/*
 * Flag merging happens through the document layer: the spec file (if any)
 * is applied first, then a synthetic document carrying exactly the flags
 * the user passed, so inline flags override file values with one code
 * path doing all validation.
 */
struct FieldArgs {
  std::string spec_path;
  std::string format = "human";
  std::string output;
  long p = 0, f = 0, m = 0, a_p = 0;
  std::vector<std::string> subgroup;
  CLI::Option *spec_opt = nullptr, *p_opt = nullptr, *f_opt = nullptr,
              *m_opt = nullptr, *a_p_opt = nullptr, *subgroup_opt = nullptr;
};

void add_field_flags(CLI::App* cmd, FieldArgs& fa) {
  fa.spec_opt = cmd->add_option(
      "--spec", fa.spec_path, "key = value document supplying the flags below");
  fa.p_opt = cmd->add_option("--p", fa.p, "residue characteristic (prime)");
  fa.f_opt = cmd->add_option("--f", fa.f, "unramified degree of the ambient field");
  fa.m_opt = cmd->add_option("--m", fa.m, "cyclotomic depth (-1 for none)");
  fa.a_p_opt = cmd->add_option("--a-p", fa.a_p, "trace of Frobenius");
  fa.subgroup_opt = cmd->add_option(
      "--subgroup", fa.subgroup,
      "generator '(a,u)' of the fixing subgroup H, or full-cyclotomic; repeatable");
  cmd->add_option("--format", fa.format, "human | json");
  cmd->add_option("--output", fa.output, "write the report to this file");
}

FieldSpec make_field_spec(const FieldArgs& fa) {
  FieldSpec fs;
  bool have_p = false;
  if (fa.spec_opt->count()) {
    SpecDoc doc = SpecDoc::parse(read_text_file(fa.spec_path));
    have_p = doc.has("p");
    apply_doc(doc, fs);
  }
  std::ostringstream overlay;
  if (fa.p_opt->count()) {
    overlay << "p = " << fa.p << "\n";
    have_p = true;
  }
  if (fa.f_opt->count()) overlay << "f = " << fa.f << "\n";
  if (fa.m_opt->count()) overlay << "m = " << fa.m << "\n";
  if (fa.a_p_opt->count()) overlay << "a_p = " << fa.a_p << "\n";
  if (fa.subgroup_opt->count()) {
    overlay << "subgroup =";
    for (const std::string& token : fa.subgroup) overlay << " " << token;
    overlay << "\n";
  }
  apply_doc(SpecDoc::parse(overlay.str()), fs);
  if (!have_p) throw InputError("p is required (--p or a spec document)");
  return fs;
}

struct GrowthFlag {
  std::string flag;
  std::string key;
  long value = 0;
  CLI::Option* opt = nullptr;
};

struct GrowthArgs {
  std::string spec_path;
  std::string format = "human";
  std::string output;
  std::string mu_list;
  long p = 0;
  std::vector<GrowthFlag> flags{
      {"--d", "d"},           {"--r", "r"},
      {"--a-p", "a_p"},       {"--rho0", "rho0"},
      {"--rho1", "rho1"},     {"--r-s0", "r_s0"},
      {"--r-s1", "r_s1"},     {"--nu0", "nu0"},
      {"--nu1", "nu1"},       {"--mu-coef0", "mu_coef0"},
      {"--mu-coef1", "mu_coef1"}, {"--delta0", "delta0"},
      {"--delta1", "delta1"}, {"--lambda0", "lambda0"},
      {"--lambda1", "lambda1"}};
  CLI::Option *spec_opt = nullptr, *p_opt = nullptr, *mu_list_opt = nullptr;
};

void add_growth_flags(CLI::App* cmd, GrowthArgs& ga, bool csv_available) {
  ga.spec_opt = cmd->add_option(
      "--spec", ga.spec_path, "key = value document supplying the flags below");
  ga.p_opt = cmd->add_option("--p", ga.p, "residue characteristic (odd prime)");
  for (GrowthFlag& f : ga.flags)
    f.opt = cmd->add_option(f.flag, f.value, "growth parameter " + f.key);
  ga.mu_list_opt = cmd->add_option("--mu-list", ga.mu_list,
                                   "comma-separated mu_1,mu_2,...");
  cmd->add_option("--format", ga.format,
                  csv_available ? "human | json | csv" : "human | json");
  cmd->add_option("--output", ga.output, "write the report to this file");
}

GrowthParams make_growth_params(const GrowthArgs& ga, bool require_p) {
  GrowthParams gp;
  bool have_p = false;
  if (ga.spec_opt->count()) {
    SpecDoc doc = SpecDoc::parse(read_text_file(ga.spec_path));
    have_p = doc.has("p");
    apply_doc(doc, gp);
  }
  std::ostringstream overlay;
  if (ga.p_opt->count()) {
    overlay << "p = " << ga.p << "\n";
    have_p = true;
  }
  for (const GrowthFlag& f : ga.flags)
    if (f.opt->count()) overlay << f.key << " = " << f.value << "\n";
  if (ga.mu_list_opt->count()) overlay << "mu_list = " << ga.mu_list << "\n";
  apply_doc(SpecDoc::parse(overlay.str()), gp);
  if (require_p && !have_p)
    throw InputError("p is required (--p or a spec document)");
  return gp;
}

std::string subgroup_tokens(const FieldSpec& fs) {
  std::string s;
  for (const auto& [a, u] : fs.h_generators) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(a) + "," + std::to_string(u) + ")";
  }
  if (fs.full_cyclotomic) s += s.empty() ? "full-cyclotomic" : " full-cyclotomic";
  return s;
}

ordered_json field_input(const FieldSpec& fs) {
  ordered_json in;
  in["p"] = fs.p;
  in["f"] = fs.f;
  in["m"] = fs.m;
  in["a_p"] = fs.a_p;
  in["subgroup"] = subgroup_tokens(fs);
  return in;
}

ordered_json growth_input(const GrowthParams& gp) {
  ordered_json in;
  in["p"] = gp.p;
  in["d"] = gp.d;
  in["r"] = gp.r;
  in["a_p"] = gp.a_p;
  for (int s : {0, 1}) in["rho" + std::to_string(s)] = gp.rho[s];
  for (int s : {0, 1}) in["r_s" + std::to_string(s)] = gp.r_s[s];
  for (int s : {0, 1}) in["nu" + std::to_string(s)] = gp.nu[s];
  for (int s : {0, 1}) in["mu_coef" + std::to_string(s)] = gp.mu_coef[s];
  for (int s : {0, 1}) in["delta" + std::to_string(s)] = gp.delta[s];
  for (int s : {0, 1}) in["lambda" + std::to_string(s)] = gp.lambda[s];
  in["mu_list"] = gp.mu_list;
  return in;
}

ordered_json element_json(const Element& e) {
  ordered_json a = ordered_json::array();
  for (Coord c : e) a.push_back(c);
  return a;
}

std::string element_string(const Element& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string group_string(const FiniteAbelianGroup& g) {
  if (g.is_trivial()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < g.cyclic_orders().size(); ++i) {
    if (g.cyclic_orders()[i] == 1) continue;
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(g.cyclic_orders()[i]);
  }
  return s.empty() ? "trivial" : s;
}

int run_tower(const FieldArgs& fa, std::ostream& out) {
  const Format format = parse_format(fa.format, false);
  Tower t = build_tower(make_field_spec(fa));

  if (format == Format::json) {
    ordered_json doc;
    doc["input"] = field_input(t.spec);
    doc["group"] = t.galois.cyclic_orders();
    doc["order"] = t.galois.order();
    doc["m_of_k"] = t.m_of_k;
    doc["c"] = t.c;
    doc["frobenius"] = element_json(t.frobenius);
    ordered_json levels = ordered_json::array();
    for (int n = -1; n <= t.max_level(); ++n) {
      ordered_json level;
      level["n"] = n;
      level["degree"] = t.degree(n);
      level["subgroup_order"] = t.level(n).order();
      levels.push_back(std::move(level));
    }
    doc["levels"] = std::move(levels);
    out << doc.dump(2) << "\n";
    return 0;
  }

  out << "field: p = " << t.spec.p << ", f = " << t.spec.f
      << ", m = " << t.spec.m << ", |H| = " << t.h.order() << "\n";
  out << "G = " << group_string(t.galois) << " (order " << t.galois.order()
      << ")\n";
  out << "m(K) = " << t.m_of_k << "\n";
  out << "c = " << t.c << "\n";
  out << "frobenius = " << element_string(t.frobenius) << "\n";
  for (int n = -1; n <= t.max_level(); ++n)
    out << "level n = " << n << ": [K_n : Q_p] = " << t.degree(n)
        << ", |G_n| = " << t.level(n).order() << "\n";
  return 0;
}

int run_module(const FieldArgs& fa, std::ostream& out) {
  const Format format = parse_format(fa.format, false);
  Tower t = build_tower(make_field_spec(fa));
  ModulePresentation pres = build_presentation(t, t.spec.a_p);
  IntMatrix rel = flatten(pres);
  SmithDecomposition snf = smith_normal_form(rel);
  ModuleInvariants inv = analyze_module(pres, t.spec.p);

  if (format == Format::json) {
    ordered_json doc;
    doc["input"] = field_input(t.spec);
    doc["group"] = t.galois.cyclic_orders();
    ordered_json gens = ordered_json::array();
    for (int n : pres.generator_levels) gens.push_back("e_" + std::to_string(n));
    doc["generators"] = std::move(gens);
    ordered_json rows = ordered_json::array();
    for (const auto& row : pres.relations) {
      ordered_json jrow = ordered_json::array();
      for (const auto& coeff : row) {
        ordered_json terms = ordered_json::array();
        for (const auto& [g, c] : coeff.terms()) {
          ordered_json term;
          term["g"] = element_json(g);
          term["c"] = c.get_str();
          terms.push_back(std::move(term));
        }
        jrow.push_back(std::move(terms));
      }
      rows.push_back(std::move(jrow));
    }
    doc["relations"] = std::move(rows);
    ordered_json factors = ordered_json::array();
    for (const auto& d : snf.invariant_factors) factors.push_back(d.get_str());
    doc["invariant_factors"] = std::move(factors);
    doc["zp_rank"] = inv.zp_rank;
    doc["p_torsion"] = inv.p_torsion_exponents;
    out << doc.dump(2) << "\n";
    return 0;
  }

  out << "field: p = " << t.spec.p << ", f = " << t.spec.f
      << ", m = " << t.spec.m << ", |H| = " << t.h.order()
      << ", a_p = " << t.spec.a_p << "\n";
  out << "generators:";
  for (int n : pres.generator_levels) out << " e_" << n;
  out << "\n";
  out << "relations: " << pres.relations.size() << " over Z[G], |G| = "
      << t.galois.order() << "\n";
  out << "zp_rank = " << inv.zp_rank << "\n";
  out << "p-torsion:";
  if (inv.p_torsion_exponents.empty()) {
    out << " none";
  } else {
    for (unsigned e : inv.p_torsion_exponents) out << " " << e;
  }
  out << "\n";
  return 0;
}

int run_sha_table(const GrowthArgs& ga, const std::string& range,
                  std::ostream& out) {
  const Format format = parse_format(ga.format, true);
  GrowthParams gp = make_growth_params(ga, true);
  auto [begin, end] = parse_range(range);
  auto rows = sha_table(gp.d, gp.p, begin, end);

  if (format == Format::csv) {
    out << "n,exponent,diff\n";
    for (const auto& r : rows)
      out << r.n << "," << r.exponent.get_str() << "," << r.diff.get_str()
          << "\n";
    return 0;
  }
  if (format == Format::json) {
    ordered_json doc;
    doc["input"] = {{"p", gp.p}, {"d", gp.d}, {"n", range}};
    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json jr;
      jr["n"] = r.n;
      jr["exponent"] = r.exponent.get_str();
      jr["diff"] = r.diff.get_str();
      jrows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(jrows);
    out << doc.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : rows)
    out << "n=" << r.n << ": exponent = " << r.exponent.get_str()
        << ", diff = " << r.diff.get_str() << "\n";
  return 0;
}

int run_growth_diff(const GrowthArgs& ga, const std::string& theorem,
                    const std::string& range, std::ostream& out) {
  const Format format = parse_format(ga.format, true);
  GrowthParams gp = make_growth_params(ga, true);
  bool stable;
  if (theorem == "stable")
    stable = true;
  else if (theorem == "ramified")
    stable = false;
  else
    throw InputError("unknown theorem '" + theorem +
                     "' (expected stable or ramified)");
  auto [begin, end] = parse_range(range);
  if (begin > end)
    throw InputError("empty level range: n_begin exceeds n_end");

  std::vector<std::pair<long, mpz_class>> rows;
  for (long n = begin; n <= end; ++n)
    rows.push_back({n, stable ? sha_diff_stable(gp, n)
                              : sha_diff_ramified(gp, n)});

  if (format == Format::csv) {
    out << "n,diff\n";
    for (const auto& [n, diff] : rows) out << n << "," << diff.get_str() << "\n";
    return 0;
  }
  if (format == Format::json) {
    ordered_json doc;
    doc["input"] = growth_input(gp);
    doc["input"]["theorem"] = stable ? "stable" : "ramified";
    doc["input"]["n"] = range;
    ordered_json jrows = ordered_json::array();
    for (const auto& [n, diff] : rows) {
      ordered_json jr;
      jr["n"] = n;
      jr["diff"] = diff.get_str();
      jrows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(jrows);
    out << doc.dump(2) << "\n";
    return 0;
  }
  for (const auto& [n, diff] : rows)
    out << "n=" << n << ": diff = " << diff.get_str() << "\n";
  return 0;
}

int run_validate(const GrowthArgs& ga, std::ostream& out) {
  const Format format = parse_format(ga.format, false);
  GrowthParams gp = make_growth_params(ga, false);
  auto violations = validate_constraints(gp);

  if (format == Format::json) {
    ordered_json doc;
    doc["input"] = growth_input(gp);
    ordered_json jv = ordered_json::array();
    for (const auto& v : violations)
      jv.push_back({{"constraint", v.constraint}, {"detail", v.detail}});
    doc["violations"] = std::move(jv);
    out << doc.dump(2) << "\n";
  } else if (violations.empty()) {
    out << "ok: all constraints hold\n";
  } else {
    for (const auto& v : violations)
      out << "violation: " << v.constraint << " (" << v.detail << ")\n";
  }
  return violations.empty() ? 0 : 1;
}

int run_consistency(const GrowthArgs& ga, long n_max, std::ostream& out) {
  const Format format = parse_format(ga.format, false);
  GrowthParams gp = make_growth_params(ga, true);
  ConsistencyReport rep = sha_consistency(gp.p, gp.d, n_max);
  auto witness = divisor_form_witness(std::max(gp.d, 1L), gp.p);

  if (format == Format::json) {
    ordered_json doc;
    doc["input"] = {{"p", gp.p}, {"d", gp.d}, {"n_max", n_max}};
    doc["lambda0"] = rep.lambda0;
    doc["lambda1"] = rep.lambda1;
    doc["verified_from"] = rep.verified_from;
    doc["holds"] = rep.holds;
    doc["first_counterexample"] =
        rep.first_counterexample ? ordered_json(*rep.first_counterexample)
                                 : ordered_json(nullptr);
    doc["divisor_form"] =
        witness ? ordered_json{{"l", witness->l}, {"j", witness->j}}
                : ordered_json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "lambda = (" << rep.lambda0 << ", " << rep.lambda1 << ")\n";
    if (rep.holds) {
      out << "difference law holds from n=" << rep.verified_from << " up to n="
          << n_max << "\n";
    } else {
      out << "difference law fails first at n=" << *rep.first_counterexample
          << ", holds from n=" << rep.verified_from << "\n";
    }
    if (witness)
      out << "divisor form: d divides (p^l + 1) p^j with l = " << witness->l
          << ", j = " << witness->j << "\n";
    else
      out << "divisor form: none\n";
  }
  return rep.holds ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact local modules and Sha growth laws for supersingular towers",
               "sstower"};
  app.require_subcommand(1);

  FieldArgs tower_args, module_args;
  add_field_flags(app.add_subcommand("tower", "layer structure of K/Q_p"),
                  tower_args);
  add_field_flags(
      app.add_subcommand("module", "presentation and invariants of E(K)"),
      module_args);

  GrowthArgs table_args, diff_args, validate_args, consistency_args;
  std::string table_range, diff_range, diff_theorem;
  long n_max = 8;

  CLI::App* table_cmd =
      app.add_subcommand("sha-table", "closed-form Sha exponents by level");
  add_growth_flags(table_cmd, table_args, true);
  table_cmd->add_option("--n", table_range, "level or inclusive range a..b")
      ->required();

  CLI::App* diff_cmd =
      app.add_subcommand("growth-diff", "first differences under a growth law");
  add_growth_flags(diff_cmd, diff_args, true);
  diff_cmd->add_option("--theorem", diff_theorem, "stable | ramified")
      ->required();
  diff_cmd->add_option("--n", diff_range, "level or inclusive range a..b")
      ->required();

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check growth parameters for admissibility");
  add_growth_flags(validate_cmd, validate_args, false);

  CLI::App* consistency_cmd = app.add_subcommand(
      "consistency", "cross-check the closed form against the difference law");
  add_growth_flags(consistency_cmd, consistency_args, false);
  consistency_cmd->add_option("--n-max", n_max, "largest level checked");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    // exactly one subcommand is parsed; route to it with its own output
    CLI::App* chosen = app.get_subcommands().at(0);
    const std::string name = chosen->get_name();
    const std::string* output_path = nullptr;
    auto pick_output = [&](const std::string& path) {
      if (!path.empty()) output_path = &path;
    };
    pick_output(tower_args.output);
    pick_output(module_args.output);
    pick_output(table_args.output);
    pick_output(diff_args.output);
    pick_output(validate_args.output);
    pick_output(consistency_args.output);

    std::ofstream file;
    std::ostream* target = &out;
    if (output_path) {
      file.open(*output_path);
      if (!file) throw InputError("cannot write to " + *output_path);
      target = &file;
    }

    if (name == "tower") return run_tower(tower_args, *target);
    if (name == "module") return run_module(module_args, *target);
    if (name == "sha-table")
      return run_sha_table(table_args, table_range, *target);
    if (name == "growth-diff")
      return run_growth_diff(diff_args, diff_theorem, diff_range, *target);
    if (name == "validate") return run_validate(validate_args, *target);
    return run_consistency(consistency_args, n_max, *target);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sstower::cli
