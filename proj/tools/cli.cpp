#include "cli.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quivergrass/dynkin.hpp"
#include "quivergrass/error.hpp"
#include "quivergrass/euler.hpp"
#include "quivergrass/io.hpp"
#include "quivergrass/kronecker.hpp"
#include "quivergrass/sampler.hpp"

namespace quivergrass::cli {

namespace {

using nlohmann::json;

/// --config files are JSON objects; nested objects address subcommands,
/// arrays become comma-separated values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception& e) {
      throw CLI::ConversionError("--config: " + std::string(e.what()));
    }
    if (!j.is_object()) throw CLI::ConversionError("--config must contain a JSON object");
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  static void collect(const json& j, const std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        collect(value, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        std::string joined;
        for (std::size_t i = 0; i < value.size(); ++i) joined += (i ? "," : "") + scalar_text(value[i]);
        item.inputs.push_back(joined);
      } else {
        item.inputs.push_back(scalar_text(value));
      }
      items.push_back(std::move(item));
    }
  }
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw Error(ErrorKind::parse_error, "bad " + what + " '" + text + "'");
    values.push_back(v);
  }
  if (text.back() == ',') throw Error(ErrorKind::parse_error, "bad " + what + " '" + text + "'");
  return values;
}

DimensionVector parse_dim_vector(const std::string& text) {
  auto values = parse_int_list(text, "dimension vector");
  for (int v : values)
    if (v < 0) throw Error(ErrorKind::parse_error, "dimension vector entries must be non-negative");
  return DimensionVector(std::move(values));
}

struct Globals {
  std::string format = "text";
  bool verbose = false;
  std::uint64_t cap = kDefaultCap;
  unsigned threads = 1;

  bool json_output() const { return format == "json"; }
  EnumerationOptions options() const { return {cap, threads}; }
};

struct EulerArgs {
  std::string rep;
  std::string e;
};

struct FpolyArgs {
  std::string rep;
};

struct KroneckerArgs {
  std::string family;
  int m = 1;
  std::string lambda = "0";
  std::string mode = "formula";
};

struct DynkinArgs {
  std::string type;
  std::string coxeter;
  std::string root;
  std::string mode = "both";
  std::uint64_t seed = 1;
};

struct Example4Args {
  std::uint64_t seed = 42;
  std::string primes = "5,7,11";
  long bound = 5;
};

std::string join_primes(const std::vector<std::uint32_t>& primes) {
  std::string s;
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? ", " : "") + std::to_string(primes[i]);
  return s;
}

int cmd_euler(const Globals& g, const EulerArgs& a, std::ostream& out) {
  const Representation rep = read_representation(a.rep);
  const DimensionVector e = parse_dim_vector(a.e);
  if (e.size() != rep.dims().size() || !e.fits_in(rep.dims()))
    throw Error(ErrorKind::out_of_range, "e = " + e.to_string() + " does not fit dim M = " + rep.dims().to_string());
  const EulerResult r = euler_characteristic_detailed(rep, e, g.options());
  std::vector<std::uint32_t> primes;
  for (const auto& s : r.polynomial.samples) primes.push_back(static_cast<std::uint32_t>(s.prime));
  if (g.json_output()) {
    json coeffs = json::array();
    for (const auto& c : r.polynomial.coefficients) coeffs.push_back(integer_to_json(c));
    out << json{{"e", e.entries()},
                {"dim_vector", rep.dims().entries()},
                {"chi", integer_to_json(r.chi)},
                {"counting_polynomial", coeffs},
                {"primes", primes},
                {"skipped_primes", r.skipped_primes}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "chi = " << r.chi.get_str() << '\n';
  if (g.verbose) {
    out << "counting polynomial: " << r.polynomial.to_string() << '\n';
    out << "sample primes: " << join_primes(primes) << '\n';
    if (!r.skipped_primes.empty()) out << "skipped primes: " << join_primes(r.skipped_primes) << '\n';
  }
  return kOk;
}

int cmd_fpoly(const Globals& g, const FpolyArgs& a, std::ostream& out) {
  const Representation rep = read_representation(a.rep);
  const FPolynomial f = f_polynomial(rep, g.options());
  if (g.json_output()) {
    json j = fpolynomial_to_json(f);
    j["text"] = f.to_string();
    out << j.dump(2) << '\n';
  } else {
    out << f.to_string() << '\n';
  }
  return kOk;
}

int cmd_kronecker(const Globals& g, const KroneckerArgs& a, std::ostream& out, std::ostream& err) {
  if (a.m < 1) throw Error(ErrorKind::parse_error, "--m must be at least 1");
  KroneckerKind kind{parse_kronecker_family(a.family), a.m, ProjectivePoint::parse(a.lambda)};
  const bool want_formula = a.mode != "bruteforce";
  const bool want_brute = a.mode != "formula";
  std::optional<PrimeSchedule> schedule;
  if (want_brute) schedule.emplace(build_kronecker(kind));

  bool all_match = true;
  json rows = json::array();
  std::ostringstream table;
  table << kind.to_string() << ", dim M = " << kind.dims().to_string() << '\n';
  for (const auto& e : box(kind.dims())) {
    json row{{"e", e.entries()}};
    table << "  e = " << e.to_string();
    std::optional<Integer> formula, brute;
    if (want_formula) {
      formula = kronecker_chi(kind, e);
      row["formula"] = integer_to_json(*formula);
      table << "  formula " << formula->get_str();
    }
    if (want_brute) {
      brute = euler_characteristic_detailed(*schedule, kind.dims(), e, g.options()).chi;
      row["bruteforce"] = integer_to_json(*brute);
      table << "  bruteforce " << brute->get_str();
    }
    if (formula && brute) {
      const bool match = *formula == *brute;
      all_match = all_match && match;
      row["match"] = match;
      table << (match ? "  match" : "  MISMATCH");
    }
    table << '\n';
    rows.push_back(std::move(row));
  }
  if (g.json_output()) {
    json j{{"kind", kind.to_string()}, {"dims", kind.dims().entries()}, {"mode", a.mode}, {"rows", rows}};
    if (want_formula && want_brute) j["all_match"] = all_match;
    out << j.dump(2) << '\n';
  } else {
    out << table.str();
    if (want_formula && want_brute) out << (all_match ? "all rows match" : "formula and brute force disagree") << '\n';
  }
  if (!all_match) {
    err << "error: closed form and brute force disagree for " << kind.to_string() << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_dynkin(const Globals& g, const DynkinArgs& a, std::ostream& out, std::ostream& err) {
  const RootSystem rs = RootSystem::parse(a.type);
  const CoxeterWord c = CoxeterWord::from_one_based(parse_int_list(a.coxeter, "Coxeter word"));
  const std::vector<int> root = parse_int_list(a.root, "root");
  if (c.size() != rs.rank()) throw Error(ErrorKind::parse_error, "Coxeter word must list each vertex of " + rs.label());
  if (!rs.is_positive_root(root)) throw Error(ErrorKind::out_of_range, "not a positive root of " + rs.label());
  const bool want_minor = a.mode != "bruteforce";
  const bool want_brute = a.mode != "minor";
  if (want_minor && rs.type() != DynkinType::A)
    throw Error(ErrorKind::out_of_scope, "generalized minors: type A only");

  const Quiver q = orientation_from_coxeter(rs, c);
  std::optional<FPolynomial> minor, brute;
  if (want_minor) minor = f_polynomial_via_minor(rs, c, root);
  if (want_brute) brute = f_polynomial(dynkin_indecomposable(q, root, a.seed), g.options());
  const bool match = !(minor && brute) || *minor == *brute;

  if (g.json_output()) {
    json j{{"type", rs.label()}, {"coxeter", c.to_string()}, {"root", root}, {"orientation", q.to_string()}};
    if (minor) j["minor"] = fpolynomial_to_json(*minor);
    if (brute) j["bruteforce"] = fpolynomial_to_json(*brute);
    if (minor && brute) j["match"] = match;
    out << j.dump(2) << '\n';
  } else {
    if (g.verbose) out << "orientation: " << q.to_string() << '\n';
    if (minor && brute && !match) {
      out << "minor:       " << minor->to_string() << '\n';
      out << "brute force: " << brute->to_string() << '\n';
    } else {
      out << (minor ? *minor : *brute).to_string() << '\n';
    }
    if (minor && brute) out << (match ? "match" : "MISMATCH") << '\n';
  }
  if (!match) {
    err << "error: generalized minor and brute force disagree\n";
    return kVerificationFailure;
  }
  return kOk;
}

std::string point_text(const std::array<std::uint32_t, 3>& v) {
  return "(" + std::to_string(v[0]) + ":" + std::to_string(v[1]) + ":" + std::to_string(v[2]) + ")";
}

int cmd_example4(const Globals& g, const Example4Args& a, std::ostream& out, std::ostream& err) {
  std::vector<std::uint32_t> primes;
  for (int p : parse_int_list(a.primes, "prime list")) {
    if (p < 3) throw Error(ErrorKind::parse_error, "primes must be odd primes");
    primes.push_back(static_cast<std::uint32_t>(p));
  }
  for (auto p : primes) ScalarDomain::prime_field(p);
  const Representation rep = sample_general_rep(Quiver::kronecker(4), {3, 4}, a.seed, a.bound);
  const Example4Report report = example4_witnesses(rep, primes, g.options());

  if (g.json_output()) {
    json j = report.to_json();
    j["seed"] = a.seed;
    j["bound"] = a.bound;
    j["representation"] = representation_to_json(rep);
    out << j.dump(2) << '\n';
  } else {
    out << "f = " << report.quartic << '\n';
    for (const auto& w : report.per_prime) {
      out << "p = " << w.prime << ": ";
      if (w.smooth) {
        out << "smooth";
      } else {
        out << "singular at";
        for (const auto& v : w.singular_points) out << ' ' << point_text(v);
      }
      out << ", curve points " << w.curve_points << ", subrepresentations " << w.grassmannian_points.get_str();
      if (!w.rank_deficient_points.empty()) out << ", rank-deficient points " << w.rank_deficient_points.size();
      out << (w.match ? ", counts match" : ", COUNT MISMATCH") << '\n';
    }
    if (g.verbose) out << "interpolation: " << report.interpolation_message << '\n';
    if (report.chi)
      out << "chi = " << *report.chi << '\n';
    else
      out << "chi withheld (" << (primes.empty() ? "no primes checked" : "a gate failed") << ")\n";
  }
  for (const auto& w : report.per_prime) {
    if (!w.smooth) {
      err << "error: quartic is singular mod " << w.prime << " at " << point_text(w.singular_points.front()) << '\n';
      return kVerificationFailure;
    }
    if (!w.match) {
      err << "error: point counts differ mod " << w.prime << '\n';
      return kVerificationFailure;
    }
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_argument:
    case ErrorKind::out_of_range:
    case ErrorKind::shape_mismatch:
    case ErrorKind::mixed_scalar_domains:
      return kParseError;
    case ErrorKind::non_polynomial_count:
      return kNonPolynomial;
    case ErrorKind::search_too_large:
      return kTooLarge;
    case ErrorKind::out_of_scope:
      return kOutOfScope;
    default:
      return kVerificationFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics of quiver Grassmannians", "quivergrass"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with option values (command-line flags win)");
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verbose", g.verbose, "Print intermediate data");
  app.add_option("--cap", g.cap, "Maximum candidate subspaces visited per point count")
      ->envname("QUIVERGRASS_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for point counting")->check(CLI::Range(1U, 256U));

  EulerArgs euler_args;
  auto* euler = app.add_subcommand("euler", "chi(Gr_e(M)) for a representation file");
  euler->add_option("--rep", euler_args.rep, "Representation JSON file")->required();
  euler->add_option("--e", euler_args.e, "Dimension vector, e.g. 0,1")->required();

  FpolyArgs fpoly_args;
  auto* fpoly = app.add_subcommand("fpoly", "F-polynomial of a representation file");
  fpoly->add_option("--rep", fpoly_args.rep, "Representation JSON file")->required();

  KroneckerArgs kron_args;
  auto* kron = app.add_subcommand("kronecker", "Kronecker indecomposables: closed form vs brute force");
  kron->add_option("family", kron_args.family, "pr, inj or reg")->required()->check(CLI::IsMember({"pr", "inj", "reg"}));
  kron->add_option("--m", kron_args.m, "Family parameter")->required();
  kron->add_option("--lambda", kron_args.lambda, "Point of P^1 for reg (rational or inf)");
  kron->add_option("--mode", kron_args.mode, "formula, bruteforce or both")
      ->check(CLI::IsMember({"formula", "bruteforce", "both"}));

  DynkinArgs dyn_args;
  auto* dyn = app.add_subcommand("dynkin", "F-polynomials of Dynkin indecomposables");
  dyn->add_option("--type", dyn_args.type, "Diagram, e.g. A3 or D4")->required();
  dyn->add_option("--coxeter", dyn_args.coxeter, "Coxeter word, e.g. 1,2,3")->required();
  dyn->add_option("--root", dyn_args.root, "Positive root in simple-root coordinates")->required();
  dyn->add_option("--mode", dyn_args.mode, "minor, bruteforce or both")
      ->check(CLI::IsMember({"minor", "bruteforce", "both"}));
  dyn->add_option("--seed", dyn_args.seed, "Seed for sampling the indecomposable");

  Example4Args ex4_args;
  auto* ex4 = app.add_subcommand("example4", "Quartic-curve Grassmannian of a general (3,4) representation");
  ex4->add_option("--seed", ex4_args.seed, "Sampling seed");
  ex4->add_option("--primes", ex4_args.primes, "Comma-separated witness primes (may be empty)");
  ex4->add_option("--bound", ex4_args.bound, "Entry bound for sampling")->check(CLI::Range(2L, 1000000L));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  try {
    if (*euler) return cmd_euler(g, euler_args, out);
    if (*fpoly) return cmd_fpoly(g, fpoly_args, out);
    if (*kron) return cmd_kronecker(g, kron_args, out, err);
    if (*dyn) return cmd_dynkin(g, dyn_args, out, err);
    if (*ex4) return cmd_example4(g, ex4_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::degenerate_form) err << "hint: rerun with a different --seed\n";
    return exit_code_for(e.kind());
  }
  return kParseError;
}

}  // namespace quivergrass::cli
