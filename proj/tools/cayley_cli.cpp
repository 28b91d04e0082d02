// cayley: command-line front end for the Cayley map library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 mathematical precondition failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cayley/catalog.hpp"
#include "cayley/degree.hpp"
#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"
#include "cayley/representation.hpp"
#include "cayley/spin.hpp"
#include "cayley/verify.hpp"

namespace {

using namespace cayley;
using io::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

struct Globals {
  std::uint64_t seed = 0;
  double tol = 1.0;
  std::string format = "json";
  std::string report;
};

struct Selector {
  std::string group;
  int n = 0;
  int m = -1;
  std::string descriptor;
  std::string element;
  std::string sample;
};

void add_selector(CLI::App* cmd, Selector& s) {
  cmd->add_option("--group", s.group, "sl, gl, so or sl2_irrep");
  cmd->add_option("--n", s.n, "Matrix size of the defining representation");
  cmd->add_option("--m", s.m, "Highest weight for sl2_irrep");
  cmd->add_option("--descriptor", s.descriptor, "JSON representation descriptor file");
  auto* element = cmd->add_option("--element", s.element, "Matrix expression or JSON file");
  auto* sample = cmd->add_option("--sample", s.sample, "generic, hyperbolic, elliptic, unipotent, cartan, trace_free");
  element->excludes(sample);
  sample->excludes(element);
}

Representation select_rep(const Selector& s) {
  if (!s.descriptor.empty()) {
    if (!s.group.empty()) throw ParseError("--descriptor and --group are mutually exclusive");
    return io::representation_from_json(io::read_json_file(s.descriptor));
  }
  if (s.group.empty()) throw ParseError("one of --group or --descriptor is required");
  FamilySpec spec;
  spec.family = family_from_string(s.group);
  spec.n = s.n;
  spec.m = s.m;
  if (spec.family == Family::sl2_irrep) {
    if (s.m < 0) throw ParseError("--m is required for sl2_irrep");
  } else if (s.n < 1) {
    throw ParseError("--n must be a positive integer");
  }
  return make_family(spec);
}

ComplexMatrix read_matrix(const std::string& text, int default_n) {
  if (std::filesystem::is_regular_file(text)) return io::matrix_from_json(io::read_json_file(text));
  return io::parse_matrix_expression(text, default_n);
}

GroupElement select_element(const Representation& rep, const Selector& s, std::uint64_t seed) {
  if (!s.sample.empty()) return sample_element(rep, sample_kind_from_string(s.sample), seed);
  if (s.element.empty()) throw ParseError("one of --element or --sample is required");
  GroupElement g;
  g.matrix = read_matrix(s.element, rep.v_dim());
  g.sampler = "explicit";
  if (g.matrix.rows() != rep.v_dim()) {
    throw ParseError("element is " + std::to_string(g.matrix.rows()) + "x" + std::to_string(g.matrix.cols()) +
                     " but the representation acts on dimension " + std::to_string(rep.v_dim()));
  }
  return g;
}

Json element_header(const Representation& rep, const GroupElement& g) {
  Json j;
  j["representation"] = rep.name();
  j["v_dim"] = rep.v_dim();
  j["g_dim"] = rep.g_dim();
  j["element"] = io::matrix_to_json(g.matrix);
  if (!g.sampler.empty()) j["sampler"] = g.sampler;
  return j;
}

void require_json(const Globals& globals, const std::string& command) {
  if (globals.format != "json") throw ParseError("--format csv is only supported by verify, not " + command);
}

void emit(const Globals& globals, const std::string& text) {
  std::cout << text << '\n';
  if (!globals.report.empty()) {
    std::ofstream out(globals.report, std::ios::binary);
    if (!out) throw ParseError("cannot write report '" + globals.report + "'");
    out << text << '\n';
  }
}

void emit(const Globals& globals, const Json& j) { emit(globals, j.dump(2)); }

int run_map(const Globals& globals, const Selector& s) {
  require_json(globals, "map");
  const auto rep = select_rep(s);
  const auto g = select_element(rep, s, globals.seed);
  const auto x = cayley::cayley(rep, g);
  Json j = element_header(rep, g);
  j["phi"] = io::algebra_vector_to_json(x);
  j["phi_matrix"] = io::matrix_to_json(rep.materialize(x));
  emit(globals, j);
  return 0;
}

int run_psi(const Globals& globals, const Selector& s, bool inverse) {
  require_json(globals, "psi");
  const auto rep = select_rep(s);
  auto g = select_element(rep, s, globals.seed);
  if (inverse) g.matrix = solve_linear(g.matrix, identity(g.matrix.rows()));
  Json j = element_header(rep, g);
  j["inverse"] = inverse;
  j["psi"] = io::complex_to_json(psi(rep, g));
  emit(globals, j);
  return 0;
}

int run_jacobian(const Globals& globals, const Selector& s) {
  require_json(globals, "jacobian");
  const auto rep = select_rep(s);
  const auto g = select_element(rep, s, globals.seed);
  const auto jac = cayley_jacobian(rep, g);
  Json j = element_header(rep, g);
  j["jacobian"] = io::matrix_to_json(jac);
  j["psi"] = io::complex_to_json(determinant(jac));
  emit(globals, j);
  return 0;
}

struct FiberOptions {
  std::string family = "sl";
  int n = 0;
  std::string target;
  bool random = false;
  bool no_lift = false;
};

int run_fiber(const Globals& globals, const FiberOptions& f) {
  require_json(globals, "fiber");
  const auto family = fiber_family_from_string(f.family);
  if (f.random == !f.target.empty()) throw ParseError("exactly one of --target or --random is required");
  ComplexMatrix x;
  if (f.random) {
    if (f.n < 1) throw ParseError("--n must be a positive integer");
    Rng rng(derive_seed(globals.seed, "fiber-target", static_cast<std::uint64_t>(f.n)));
    x = family == FiberFamily::sl ? random_trace_free(f.n, rng) : random_skew(f.n, rng);
  } else {
    x = read_matrix(f.target, f.n);
    if (f.n > 0 && x.rows() != f.n) throw ParseError("target size does not match --n");
  }
  const auto report = family == FiberFamily::sl ? sl_fiber(x) : spin_fiber(x, !f.no_lift);
  emit(globals, io::fiber_report_to_json(report));
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  int trials = 50;
  bool list = false;
};

int run_verify(const Globals& globals, const VerifyOptions& v) {
  if (v.list) {
    Json j = Json::object();
    for (const auto& name : suite_names()) j[name] = suite_claims(name);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  const auto result = run_suite(v.suite, v.trials, globals.seed, globals.tol);
  emit(globals, globals.format == "csv" ? to_csv(result) : to_json(result).dump(2));
  std::cerr << "suite " << result.suite << ": " << result.records.size() << " records, " << result.failures
            << " failures, worst residual " << result.worst_residual << '\n';
  return result.failures == 0 ? 0 : kExitFailure;
}

struct SpinOptions {
  int n = 0;
  std::string input;
  bool random = false;
};

CliffordElement read_clifford(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) return io::clifford_from_json(io::read_json_file(text));
  try {
    return io::clifford_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed Clifford element: ") + e.what());
  }
}

SpinElement spin_input(const Globals& globals, const SpinOptions& o, const char* tag) {
  if (o.random == !o.input.empty()) throw ParseError("exactly one of --element or --random is required");
  if (o.random) {
    if (o.n < 2) throw ParseError("--n must be at least 2");
    Rng rng(derive_seed(globals.seed, tag, static_cast<std::uint64_t>(o.n)));
    return sample_spin(o.n, rng);
  }
  return SpinElement::from(read_clifford(o.input));
}

int run_spin_exp(const Globals& globals, const SpinOptions& o) {
  require_json(globals, "spin exp");
  if (o.random == !o.input.empty()) throw ParseError("exactly one of --bivector or --random is required");
  CliffordElement u;
  if (o.random) {
    if (o.n < 2) throw ParseError("--n must be at least 2");
    Rng rng(derive_seed(globals.seed, "spin-exp", static_cast<std::uint64_t>(o.n)));
    u = random_bivector(o.n, rng);
  } else {
    u = read_clifford(o.input);
  }
  const auto g = spin_exp(u);
  Json j;
  j["bivector"] = io::clifford_to_json(u);
  j["spin"] = io::clifford_to_json(g.value());
  j["vector_action"] = io::matrix_to_json(vector_action(g));
  emit(globals, j);
  return 0;
}

int run_spin_action(const Globals& globals, const SpinOptions& o) {
  require_json(globals, "spin action");
  const auto g = spin_input(globals, o, "spin-action");
  Json j;
  j["spin"] = io::clifford_to_json(g.value());
  j["vector_action"] = io::matrix_to_json(vector_action(g));
  emit(globals, j);
  return 0;
}

int run_spin_cayley(const Globals& globals, const SpinOptions& o) {
  require_json(globals, "spin cayley");
  const auto g = spin_input(globals, o, "spin-cayley");
  const auto sc = spin_cayley(g);
  Json j;
  j["spin"] = io::clifford_to_json(g.value());
  j["pr0"] = io::complex_to_json(sc.pr0);
  j["pr2"] = io::clifford_to_json(sc.pr2);
  j["phi_matrix"] = io::matrix_to_json(tau(sc.pr2));
  try {
    const auto closed = spin_cayley_closed_form(g);
    j["closed_form"] = io::clifford_to_json(closed);
    j["closed_form_residual"] = (closed - sc.pr2).norm() / std::max(1.0, sc.pr2.norm());
  } catch (const MathError& e) {
    j["closed_form_error"] = e.what();
  }
  emit(globals, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Cayley map: projections, Jacobians, fibers and property suites"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for sampling and suites");
  app.add_option("--tol", globals.tol, "Multiplier applied to every verification tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", globals.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--report", globals.report, "Also write the output to this file");

  Selector map_sel, psi_sel, jac_sel;
  auto* map_cmd = app.add_subcommand("map", "Cayley map of a group element");
  add_selector(map_cmd, map_sel);
  auto* psi_cmd = app.add_subcommand("psi", "Jacobian determinant of the Cayley map");
  add_selector(psi_cmd, psi_sel);
  bool psi_inverse = false;
  psi_cmd->add_flag("--inverse", psi_inverse, "Evaluate at the inverse element");
  auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian matrix of the Cayley map");
  add_selector(jac_cmd, jac_sel);

  FiberOptions fiber;
  auto* fiber_cmd = app.add_subcommand("fiber", "Preimages of a Lie algebra element");
  fiber_cmd->add_option("--family", fiber.family, "sl or spin");
  fiber_cmd->add_option("--n", fiber.n, "Matrix size");
  fiber_cmd->add_option("--target", fiber.target, "Target matrix expression or JSON file");
  fiber_cmd->add_flag("--random", fiber.random, "Sample a generic target from --seed");
  fiber_cmd->add_flag("--no-lift", fiber.no_lift, "Skip the Spin lifts");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--trials", verify.trials, "Trials per claim")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--list", verify.list, "List suites and their claim ids");

  auto* spin_cmd = app.add_subcommand("spin", "Spin group operations");
  spin_cmd->require_subcommand(1);
  SpinOptions exp_opts, action_opts, cayley_opts;
  auto* exp_cmd = spin_cmd->add_subcommand("exp", "Exponential of a bivector");
  exp_cmd->add_option("--n", exp_opts.n, "Vector space dimension");
  exp_cmd->add_option("--bivector", exp_opts.input, "Clifford JSON literal or file");
  exp_cmd->add_flag("--random", exp_opts.random, "Sample a bivector from --seed");
  auto* action_cmd = spin_cmd->add_subcommand("action", "Vector action T(g)");
  auto* cayley_cmd = spin_cmd->add_subcommand("cayley", "Cayley map of a spin element");
  for (auto [cmd, opts] : {std::pair{action_cmd, &action_opts}, std::pair{cayley_cmd, &cayley_opts}}) {
    cmd->add_option("--n", opts->n, "Vector space dimension");
    cmd->add_option("--element", opts->input, "Clifford JSON literal or file");
    cmd->add_flag("--random", opts->random, "Sample a spin element from --seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (map_cmd->parsed()) return run_map(globals, map_sel);
    if (psi_cmd->parsed()) return run_psi(globals, psi_sel, psi_inverse);
    if (jac_cmd->parsed()) return run_jacobian(globals, jac_sel);
    if (fiber_cmd->parsed()) return run_fiber(globals, fiber);
    if (verify_cmd->parsed()) return run_verify(globals, verify);
    if (exp_cmd->parsed()) return run_spin_exp(globals, exp_opts);
    if (action_cmd->parsed()) return run_spin_action(globals, action_opts);
    if (cayley_cmd->parsed()) return run_spin_cayley(globals, cayley_opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitUsage;
}
