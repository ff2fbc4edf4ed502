#include "qsdiag/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qsdiag/bloch.hpp"
#include "qsdiag/channels.hpp"
#include "qsdiag/composite.hpp"
#include "qsdiag/diagram.hpp"
#include "qsdiag/error.hpp"
#include "qsdiag/json_io.hpp"
#include "qsdiag/purify.hpp"
#include "qsdiag/render.hpp"
#include "qsdiag/scalar_expr.hpp"

namespace qsd {

namespace {

struct Options {
  std::string tol_text;
  std::string out_path;
  std::string format;
  std::string file;
  std::string spec;
  std::string steps = "1";
  std::string grid = "9x16";
  std::string mode = "simplified";
  std::vector<int> qubits;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

double resolve_tolerance(const Options& o, const std::optional<std::string>& env_tol) {
  double tol = kDefaultCliTolerance;
  if (env_tol && !env_tol->empty()) {
    try {
      tol = parse_real(*env_tol);
    } catch (const InputError& e) {
      throw InputError(std::string("QSDIAG_TOL: ") + e.what());
    }
  }
  if (!o.tol_text.empty()) tol = parse_real(o.tol_text);
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  return tol;
}

DensityMatrix load_density(const std::string& path, double tol) {
  return DensityMatrix::from_matrix(parse_matrix_json(read_input(path)), Tolerances{tol, tol});
}

KrausChannel load_channel(const std::string& spec) {
  // A spec naming an existing JSON file is read as an operator list.
  if (spec.size() > 5 && spec.ends_with(".json")) {
    std::ifstream probe(spec);
    if (probe) return channel_from_json(parse_json_text(read_input(spec)));
  }
  return make_channel(parse_channel_spec(spec));
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v < 0)
    throw InputError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  return static_cast<std::size_t>(v);
}

std::string cmd_validate(const Options& o, double tol, bool& passed) {
  const auto m = parse_matrix_json(read_input(o.file));
  const auto r = validate_density(m, tol);
  passed = r.passed;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["hermiticity_defect"] = r.hermiticity_defect;
    j["trace_defect"] = r.trace_defect;
    j["min_eigenvalue"] = r.min_eigenvalue + 0.0;
    j["tolerance"] = tol;
    j["passed"] = r.passed;
    return dump_json(j);
  }
  return "hermiticity_defect " + g17(r.hermiticity_defect) + "\n" +
         "trace_defect       " + g17(r.trace_defect) + "\n" +
         "min_eigenvalue     " + g17(r.min_eigenvalue) + "\n" +
         "tolerance          " + g17(tol) + "\n" +
         "result             " + (r.passed ? "PASS" : "FAIL") + "\n";
}

std::string cmd_evolve(const Options& o, double tol) {
  DensityMatrix rho = load_density(o.file, tol);
  const KrausChannel ch = load_channel(o.spec);
  const std::size_t steps = parse_count(o.steps, "--steps");
  for (std::size_t k = 0; k < steps; ++k) rho = apply_channel(ch, rho, tol);
  return dump_json(matrix_to_json(rho.matrix()));
}

std::string cmd_purify(const Options& o, double tol) {
  const DensityMatrix rho = load_density(o.file, tol);
  const auto p = purify_single_qubit(rho);
  const auto circuit = synthesize_purification_circuit(rho);
  if (o.format == "text") {
    return "theta1 " + g17(p.theta1) + "\ntheta2 " + g17(p.theta2) + "\nphi    " + g17(p.phi) +
           "\n" + to_dsl(circuit);
  }
  auto pair = [](cplx z) { return nlohmann::ordered_json::array({z.real() + 0.0, z.imag() + 0.0}); };
  nlohmann::ordered_json j;
  j["state"] = state_to_json(p.state);
  j["coefficients"] = {{"c00", pair(p.c00)}, {"c01", pair(p.c01)}, {"c10", pair(p.c10)},
                       {"c11", pair(p.c11)}};
  j["angles"] = {{"theta1", p.theta1}, {"theta2", p.theta2}, {"phi", p.phi + 0.0}};
  j["circuit"] = to_dsl(circuit);
  return dump_json(j);
}

std::string cmd_trace(const Options& o, double tol) {
  const DensityMatrix rho = load_density(o.file, tol);
  const auto traced = QubitSubset::of(rho.n_qubits(), o.qubits);
  return dump_json(matrix_to_json(partial_trace(rho, traced).matrix()));
}

std::string cmd_ellipsoid(const Options& o) {
  const auto x = o.grid.find_first_of("xX");
  if (x == std::string::npos) throw InputError("--grid must look like LATxLON, got '" + o.grid + "'");
  const std::size_t n_lat = parse_count(o.grid.substr(0, x), "--grid latitude count");
  const std::size_t n_lon = parse_count(o.grid.substr(x + 1), "--grid longitude count");
  const auto map = affine_map_of_channel(load_channel(o.spec));
  return points_to_csv(ellipsoid_samples(map, n_lat, n_lon));
}

std::string cmd_diagram(const Options& o) {
  const Circuit c = parse_circuit(read_input(o.file));
  const auto d = build_diagram(c, mode_from_name(o.mode));
  return o.format == "svg" ? render_svg(d) : render_text(d);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_tol) {
  CLI::App app{"qsdiag: density matrices, single-qubit channels and diagrams of states"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol_text, "numerical tolerance (default 1e-10, env QSDIAG_TOL)");
  app.add_option("--out", o.out_path, "write output to this file instead of stdout");

  auto* validate = app.add_subcommand("validate", "check a density-matrix JSON file");
  validate->add_option("file", o.file, "matrix JSON")->required();
  validate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* evolve = app.add_subcommand("evolve", "apply a channel to a density matrix");
  evolve->add_option("file", o.file, "density-matrix JSON")->required();
  evolve->add_option("channel", o.spec, "channel spec (kind:theta) or channel JSON file")
      ->required();
  evolve->add_option("--steps", o.steps, "number of applications (default 1)");
  evolve->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

  auto* purify = app.add_subcommand("purify", "purify a single-qubit density matrix");
  purify->add_option("file", o.file, "density-matrix JSON")->required();
  purify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* trace = app.add_subcommand("trace", "trace out qubits");
  trace->add_option("file", o.file, "density-matrix JSON")->required();
  trace->add_option("qubits", o.qubits, "qubits to trace out")->required();
  trace->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

  auto* ellipsoid = app.add_subcommand("ellipsoid", "image of the Bloch sphere as CSV points");
  ellipsoid->add_option("channel", o.spec, "channel spec or channel JSON file")->required();
  ellipsoid->add_option("--grid", o.grid, "LATxLON sample grid (default 9x16)");
  ellipsoid->add_option("--format", o.format)->check(CLI::IsMember({"csv"}));

  auto* diagram = app.add_subcommand("diagram", "diagram of states for a circuit file");
  diagram->add_option("file", o.file, "circuit DSL file, - for stdin")->required();
  diagram->add_option("--mode", o.mode)->check(CLI::IsMember({"complete", "simplified"}));
  diagram->add_option("--format", o.format)->check(CLI::IsMember({"text", "svg"}));

  for (auto* sub : {validate, evolve, purify, trace, ellipsoid, diagram}) {
    sub->add_option("--tol", o.tol_text, "numerical tolerance");
    sub->add_option("--out", o.out_path, "output file");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string result;
  bool domain_fail = false;
  try {
    const double tol = resolve_tolerance(o, env_tol);
    if (validate->parsed()) {
      bool passed = false;
      result = cmd_validate(o, tol, passed);
      domain_fail = !passed;
    } else if (evolve->parsed()) {
      result = cmd_evolve(o, tol);
    } else if (purify->parsed()) {
      result = cmd_purify(o, tol);
    } else if (trace->parsed()) {
      result = cmd_trace(o, tol);
    } else if (ellipsoid->parsed()) {
      result = cmd_ellipsoid(o);
    } else {
      result = cmd_diagram(o);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  if (o.out_path.empty()) {
    out << result;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitInput;
    }
    f << result;
  }
  return domain_fail ? kExitDomain : kExitOk;
}

}  // namespace qsd
