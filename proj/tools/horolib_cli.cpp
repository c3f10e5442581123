#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "horolib/checks.hpp"
#include "horolib/error.hpp"
#include "horolib/lab.hpp"
#include "horolib/serialize.hpp"
#include "horolib/tables.hpp"

using namespace horolib;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Inline JSON if the argument starts with '{', '[' or '"', otherwise a file path.
json load_json(const std::string& arg, const std::string& what) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[' && arg[first] != '"')) {
    std::ifstream in(arg);
    if (!in) throw InvalidInput(what + ": cannot open \"" + arg + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput(what + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Seed precedence: flag > HOROLIB_SEED > config > default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const json& config) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HOROLIB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("HOROLIB_SEED: \"") + env + "\" is not an unsigned integer");
    }
  }
  if (config.contains("seed")) return config["seed"].get<std::uint64_t>();
  return 42;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

char parse_type(const std::string& t) {
  if (t.size() != 1 || std::string("ABCDEFG").find(t[0]) == std::string::npos)
    throw InvalidInput("type must be one of A, B, C, D, E, F, G");
  return t[0];
}

json theta_json(const ThetaSet& t) { return t.one_based(); }

int cmd_classify(const std::string& type, int rank, const std::string& theta_arg) {
  RootSystem rs = root_system(parse_type(type), rank);
  json out;
  out["type"] = type;
  out["rank"] = rank;
  json rc = json::array();
  for (const auto& t : classify_reflexive_commutative(rs)) rc.push_back(theta_json(t));
  out["reflexive_commutative"] = rc;
  try {
    ThetaSet h = heisenberg_theta(rs, 0);
    out["heisenberg"] = {{"theta", theta_json(h)}, {"sum_check", check_heisenberg_sum(rs, h)}};
  } catch (const PreconditionFailed& e) {
    out["heisenberg"] = {{"theta", nullptr}, {"reason", e.what()}};
  }
  if (!theta_arg.empty()) {
    ThetaSet th = ThetaSet::from_one_based(parse_int_list(theta_arg, "--theta"));
    out["theta"] = {{"theta", theta_json(th)},
                    {"reflexive", is_reflexive(rs, th)},
                    {"reflexive_commutative", is_reflexive_commutative(rs, th)},
                    {"heisenberg", is_heisenberg(rs, th)}};
  }
  emit(out);
  return 0;
}

int cmd_grade(const std::string& type, int rank, const std::string& theta_arg) {
  RootSystem rs = root_system(parse_type(type), rank);
  ThetaSet th = ThetaSet::from_one_based(parse_int_list(theta_arg, "--theta"));
  for (int i : th.indices())
    if (i >= rank) throw InvalidInput("--theta: index " + std::to_string(i + 1) + " exceeds the rank");
  ThetaGrading g = grading(rs, th);
  json levels = json::object();
  for (int j = 1; j <= g.depth(); ++j) {
    json roots = json::array();
    for (const auto& r : g.roots_at(j)) roots.push_back(r.coords);
    levels[std::to_string(j)] = {{"dim", roots.size()}, {"roots", roots}};
  }
  emit({{"type", type},
        {"rank", rank},
        {"theta", theta_json(th)},
        {"depth", g.depth()},
        {"levels", levels},
        {"reflexive", is_reflexive(rs, th)},
        {"reflexive_commutative", is_reflexive_commutative(rs, th)},
        {"heisenberg", is_heisenberg(rs, th)}});
  return 0;
}

int cmd_eval(const std::string& ctx_arg, const std::string& op, const std::string& at_arg, const std::string& y_arg) {
  InvariantContext ctx = context_from_json(load_json(ctx_arg, "--ctx"));
  const auto& alg = ctx.algebra();
  auto need = [](const std::string& arg, const char* flag) {
    if (arg.empty()) throw InvalidInput(std::string(flag) + " is required for this op");
    return arg;
  };
  json out{{"context", to_json(ctx)}, {"op", op}};
  if (op == "M" || op == "phi" || op == "chi") {
    GroupElement g = group_from_json(alg, load_json(need(at_arg, "--at"), "--at"), &ctx);
    if (op == "M") out["value"] = to_json(M(ctx, g));
    if (op == "phi") out["value"] = to_string(phi(ctx, g));
    if (op == "chi") out["value"] = to_string(chi(ctx, g));
  } else if (op == "F") {
    out["value"] = to_string(F(ctx, element_from_json(alg, load_json(need(at_arg, "--at"), "--at"))));
  } else if (op == "G" || op == "G2") {
    AlgElement x = element_from_json(alg, load_json(need(at_arg, "--at"), "--at"));
    AlgElement y = element_from_json(alg, load_json(need(y_arg, "--y"), "--y"));
    out["value"] = to_string(op == "G" ? G(ctx, x, y) : G2(ctx, x, y));
  } else if (op == "dchi") {
    AlgElement h = at_arg.empty() ? ctx.h_theta() : element_from_json(alg, load_json(at_arg, "--at"));
    out["value"] = to_string(dchi(ctx, h));
  } else {
    throw InvalidInput("--op must be one of M, phi, chi, dchi, F, G, G2");
  }
  emit(out);
  return 0;
}

struct VerifyArgs {
  std::optional<std::string> suite;
  std::string scope;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::string structure_fault;
  std::string cartan_fault;
};

int cmd_verify(const VerifyArgs& a) {
  json config = a.config.empty() ? json::object() : load_json(a.config, "--config");
  VerifyOptions opt;
  opt.suite = config.value("suite", opt.suite);
  if (config.contains("scope")) opt.scope = config["scope"].get<std::vector<std::string>>();
  if (config.contains("samples")) opt.semiinvariance_samples = config["samples"].get<int>();
  if (a.suite) opt.suite = *a.suite;
  if (!a.scope.empty()) opt.scope = split_names(a.scope);
  if (a.samples) opt.semiinvariance_samples = *a.samples;
  opt.seed = resolve_seed(a.seed, config);
  if (!a.structure_fault.empty()) {
    auto v = parse_int_list(a.structure_fault, "--inject-structure-fault");
    if (v.size() != 3 && v.size() != 4) throw InvalidInput("--inject-structure-fault expects a,b,c[,delta]");
    opt.structure_fault = StructureFault{v[0] - 1, v[1] - 1, v[2] - 1, v.size() == 4 ? v[3] : 1};
  }
  if (!a.cartan_fault.empty()) {
    auto v = parse_int_list(a.cartan_fault, "--inject-cartan-fault");
    if (v.size() != 2 && v.size() != 3) throw InvalidInput("--inject-cartan-fault expects i,j[,delta]");
    opt.cartan_fault = CartanFault{v[0] - 1, v[1] - 1, v.size() == 3 ? v[2] : 1};
  }
  std::cerr << "verify: suite " << opt.suite << ", seed " << opt.seed << "\n";
  Report r = run_verify(opt);
  json out{{"seed", opt.seed}, {"suite", opt.suite}, {"scope", opt.scope}, {"report", r.to_json()}};
  emit(out);
  auto failures = r.failures();
  for (const auto& f : failures) std::cerr << "FAILED " << f.name << ": " << f.detail << "\n";
  std::cerr << r.checks().size() - failures.size() << "/" << r.checks().size() << " checks passed\n";
  return r.passed() ? 0 : kExitFailure;
}

int cmd_tables(int max_rank) {
  auto rows = classification_tables(max_rank);
  json arr = json::array();
  bool ok = true;
  for (const auto& row : rows) {
    arr.push_back(to_json(row));
    ok = ok && row.matches();
  }
  emit({{"max_rank", max_rank}, {"rows", arr}, {"passed", ok}});
  return ok ? 0 : kExitFailure;
}

int cmd_lab(const std::string& config_arg, const std::optional<std::uint64_t>& seed) {
  json config = load_json(config_arg, "--config");
  config["seed"] = resolve_seed(seed, config);
  std::cerr << "lab: seed " << config["seed"] << "\n";
  json out = run_lab(config);
  bool ok = out["F_on_lattice"]["within_cap"].get<bool>() && out["phi_on_words"]["within_cap"].get<bool>();
  emit(out);
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, split Lie algebras and horospherical invariants"};
  app.require_subcommand(1);

  std::string type, theta, ctx_arg, op, at_arg, y_arg, lab_config;
  int rank = 0, max_rank = 8;
  std::optional<std::uint64_t> lab_seed;
  VerifyArgs va;

  auto* classify = app.add_subcommand("classify", "reflexive commutative and Heisenberg thetas of a simple type");
  classify->add_option("--type", type, "Cartan type A-G")->required();
  classify->add_option("--rank", rank, "rank")->required()->check(CLI::Range(1, 8));
  classify->add_option("--theta", theta, "1-based simple roots to test, e.g. 1,3");

  auto* grade = app.add_subcommand("grade", "grading of the positive roots by n_theta");
  grade->add_option("--type", type, "Cartan type A-G")->required();
  grade->add_option("--rank", rank, "rank")->required()->check(CLI::Range(1, 8));
  grade->add_option("--theta", theta, "1-based simple roots, e.g. 1,3")->required();

  auto* eval = app.add_subcommand("eval", "evaluate M, phi, chi, dchi, F, G or G2");
  eval->add_option("--ctx", ctx_arg, "context JSON or file: {\"algebra\":\"sl3\",\"theta\":[1,2]}")->required();
  eval->add_option("--op", op, "M, phi, chi, dchi, F, G, G2")->required();
  eval->add_option("--at", at_arg, "element or group expression (JSON or file)");
  eval->add_option("--y", y_arg, "second argument of G and G2 (JSON or file)");

  auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 on any failure");
  verify->add_option("--suite", va.suite, "rootsys, structure, invariants, tables, all")
      ->check(CLI::IsMember({"rootsys", "structure", "invariants", "tables", "all"}));
  verify->add_option("--scope", va.scope, "comma-separated algebras, e.g. sl3,sl4,sp6,so7");
  verify->add_option("--config", va.config, "JSON config (suite, scope, samples, seed)");
  verify->add_option("--seed", va.seed, "random seed");
  verify->add_option("--samples", va.samples, "semi-invariance samples per context");
  verify->add_option("--inject-structure-fault", va.structure_fault,
                     "add delta to the coefficient of e_c in [e_a, e_b]: a,b,c[,delta] (1-based basis positions)");
  verify->add_option("--inject-cartan-fault", va.cartan_fault, "add delta to Cartan entry (i,j): i,j[,delta]");

  auto* tables = app.add_subcommand("tables", "computed classification next to the expected table rows");
  tables->add_option("--max-rank", max_rank, "largest rank")->check(CLI::Range(1, 8));

  auto* lab = app.add_subcommand("lab", "discreteness and orbit experiments");
  lab->add_option("--config", lab_config, "JSON config or file")->required();
  lab->add_option("--seed", lab_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(type, rank, theta);
    if (*grade) return cmd_grade(type, rank, theta);
    if (*eval) return cmd_eval(ctx_arg, op, at_arg, y_arg);
    if (*verify) return cmd_verify(va);
    if (*tables) return cmd_tables(max_rank);
    if (*lab) return cmd_lab(lab_config, lab_seed);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
