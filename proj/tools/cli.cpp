#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dorder/errors.hpp"
#include "dorder/io.hpp"
#include "dorder/solvers.hpp"
#include "dorder/special_functions.hpp"
#include "dorder/spectrum.hpp"
#include "dorder/verification.hpp"

namespace dorder::cli {

namespace {

struct Globals {
  double beta = kDefaultBeta;
  int k_max = 16;
  double abs_tol = QuadratureConfig{}.abs_tol;
  double rel_tol = QuadratureConfig{}.rel_tol;
  std::string format = "json";
  std::string out_path;

  QuadratureConfig config() const {
    QuadratureConfig c;
    c.abs_tol = abs_tol;
    c.rel_tol = rel_tol;
    c.validate();
    return c;
  }
};

struct EvalHArgs {
  double x = 0.0;
  std::optional<double> lambda_re;
  std::optional<double> lambda_im;
  std::optional<int> k;
};

struct SolveArgs {
  double a = 1.0;
  double b = 2.0;
  double a0 = 1.0;
  double b0 = 0.0;
  std::string phi;
  std::string eval_grid;
  std::string eval_out;
};

struct VerifyArgs {
  std::string suite = "default";
  double target_scale = 1.0;
};

double parse_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw_invalid(what + ": '" + s + "' is not a number");
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw_invalid(what + ": '" + s + "' is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// builtin:mode:K[:re[:im]] | builtin:cosine:K[:amp] | builtin:constant:C | csv:PATH
DataFunction parse_phi(const std::string& spec) {
  if (spec.rfind("csv:", 0) == 0) {
    const std::string path = spec.substr(4);
    std::ifstream in(path);
    if (!in) throw_invalid("cannot open phi file '" + path + "'");
    return io::read_phi_csv(in);
  }
  const auto p = split(spec, ':');
  if (p.size() < 3 || p[0] != "builtin") {
    throw_invalid("--phi must be builtin:<mode|cosine|constant>:... or csv:<path>");
  }
  if (p[1] == "mode" && p.size() <= 5) {
    ModePhi m;
    m.k = parse_int(p[2], "mode index");
    const double re = p.size() > 3 ? parse_real(p[3], "amplitude") : 1.0;
    const double im = p.size() > 4 ? parse_real(p[4], "amplitude") : 0.0;
    m.amplitude = {re, im};
    return m;
  }
  if (p[1] == "cosine" && p.size() <= 4) {
    CosinePhi c;
    c.k = parse_int(p[2], "cosine index");
    c.amplitude = p.size() > 3 ? parse_real(p[3], "amplitude") : 1.0;
    return c;
  }
  if (p[1] == "constant" && p.size() == 3) return ConstantPhi{parse_real(p[2], "constant")};
  throw_invalid("unrecognised --phi '" + spec + "'");
}

// start:stop:count, count >= 1, inclusive of both ends.
std::vector<double> parse_grid(const std::string& spec) {
  const auto p = split(spec, ':');
  if (p.size() != 3) throw_invalid("--eval-grid must be start:stop:count");
  const double lo = parse_real(p[0], "grid start");
  const double hi = parse_real(p[1], "grid stop");
  const int n = parse_int(p[2], "grid count");
  if (n < 1) throw_invalid("grid count must be positive");
  if (!(lo > 0.0) || hi < lo) throw_invalid("--eval-grid requires 0 < start <= stop");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return xs;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw_invalid("cannot write '" + path + "'");
  f << text;
  if (!f) throw_invalid("write to '" + path + "' failed");
}

int cmd_roots(const Globals& g, std::ostream& out) {
  const auto rs = roots(g.beta, g.k_max);
  emit(g.format == "csv" ? io::roots_csv(g.beta, rs) : io::roots_json(g.beta, rs), g.out_path, out);
  return kOk;
}

int cmd_eval_h(const Globals& g, const EvalHArgs& a, std::ostream& out) {
  if (!(a.x > 0.0)) throw_invalid("eval-h requires x > 0");
  const bool by_value = a.lambda_re.has_value() || a.lambda_im.has_value();
  if (by_value == a.k.has_value()) throw_invalid("give either --lambda-re/--lambda-im or --k");
  Eigenvalue lambda = Eigenvalue::from_log(0.0);
  if (a.k) {
    OrderInterval interval(g.beta);
    if (*a.k == 0) throw_invalid("--k must be nonzero");
    lambda = lattice_root(*a.k, interval.beta());
  } else {
    lambda = Eigenvalue::from_value({a.lambda_re.value_or(0.0), a.lambda_im.value_or(0.0)});
  }
  HEvalRequest req;
  req.x = a.x;
  req.lambda = lambda;
  req.config = g.config();
  const HEvalResult r = eval_h_detailed(req);
  const Complex lv = lambda.value();
  std::string text;
  if (g.format == "csv") {
    text = "x,lambda_re,lambda_im,h_re,h_im,error\n" + io::format_double(a.x) + "," +
           io::format_double(lv.real()) + "," + io::format_double(lv.imag()) + "," +
           io::format_double(r.value.real()) + "," + io::format_double(r.value.imag()) + "," +
           io::format_double(r.error) + "\n";
  } else {
    io::JsonWriter w;
    w.begin_object().key("x").value(a.x).key("lambda").value(lv).key("h").value(r.value);
    w.key("error").value(r.error).key("cutoff").value(r.cutoff).end_object();
    text = w.str() + "\n";
  }
  emit(text, g.out_path, out);
  return kOk;
}

std::string coefficients_csv(const SpectralSeries& s) {
  std::string text = "k,re,im\n";
  for (const auto& [k, c] : s.coefficients()) {
    text += std::to_string(k) + "," + io::format_double(c.real()) + "," + io::format_double(c.imag()) + "\n";
  }
  return text;
}

int finish_solve(const Globals& g, const SolveArgs& a, const SpectralSeries& s, std::ostream& out) {
  std::string table;
  if (!a.eval_grid.empty()) {
    const auto xs = parse_grid(a.eval_grid);
    std::vector<Complex> ys;
    ys.reserve(xs.size());
    const QuadratureConfig cfg = g.config();
    for (double x : xs) ys.push_back(evaluate_series(s, x, cfg));
    table = io::evaluation_csv(xs, ys);
  }
  emit(g.format == "csv" ? coefficients_csv(s) : io::series_json(s), g.out_path, out);
  if (!table.empty()) emit(table, a.eval_out, out);
  return kOk;
}

int cmd_solve_cauchy(const Globals& g, const SolveArgs& a, std::ostream& out) {
  CauchyProblem p{.a = a.a,
                  .phi = parse_phi(a.phi),
                  .interval = OrderInterval(g.beta),
                  .k_max = g.k_max,
                  .config = g.config()};
  return finish_solve(g, a, solve_cauchy(p), out);
}

int cmd_solve_bvp(const Globals& g, const SolveArgs& a, std::ostream& out) {
  BoundaryProblem p{.a = a.a,
                    .b = a.b,
                    .a0 = a.a0,
                    .b0 = a.b0,
                    .phi = parse_phi(a.phi),
                    .interval = OrderInterval(g.beta),
                    .k_max = g.k_max,
                    .config = g.config()};
  return finish_solve(g, a, solve_bvp(p), out);
}

std::string report_csv(const VerificationReport& r) {
  std::string text = "name,target,achieved,pass,expected_fail\n";
  for (const CheckResult& c : r.checks()) {
    std::string name = c.name;
    std::replace(name.begin(), name.end(), ',', ';');
    text += name + "," + io::format_double(c.target) + "," + io::format_double(c.achieved) + "," +
            (c.pass ? "1" : "0") + "," + (c.expected_fail ? "1" : "0") + "\n";
  }
  return text;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.target_scale > 0.0)) throw_invalid("--target-scale must be positive");
  const Suite suite = a.suite == "full" ? Suite::Full : Suite::Default;
  const VerificationReport r = run_suite(suite, a.target_scale);
  emit(g.format == "csv" ? report_csv(r) : io::report_json(r), g.out_path, out);
  for (const CheckResult& c : r.checks()) {
    if (!c.pass) err << (c.expected_fail ? "expected failure: " : "FAILED: ") << c.name << "\n";
  }
  return r.ok() ? kOk : kVerifyFailed;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateLattice: return kDegenerateLattice;
    case ErrorKind::NonConvergent:
    case ErrorKind::Overflow: return kNumerical;
    case ErrorKind::DegenerateMode:
    case ErrorKind::NonDegeneracyViolated: return kDegenerateDenominator;
    case ErrorKind::InvalidArgument:
    case ErrorKind::BranchCut:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::GridTooCoarse: return kUsage;
  }
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral solver for the distributed-order equation integral_0^beta D^alpha y d alpha = 0",
               "dorder"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--beta", g.beta, "upper end of the order interval")->capture_default_str();
  app.add_option("--kmax", g.k_max, "series truncation |k| <= kmax")->capture_default_str();
  app.add_option("--abs-tol", g.abs_tol, "quadrature absolute tolerance")->capture_default_str();
  app.add_option("--rel-tol", g.rel_tol, "quadrature relative tolerance")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write the primary output here instead of stdout");

  auto* roots_cmd = app.add_subcommand("roots", "tabulate the characteristic roots");

  EvalHArgs eh;
  auto* eval_cmd = app.add_subcommand("eval-h", "evaluate h(x, lambda)");
  eval_cmd->add_option("--x", eh.x, "abscissa, x > 0")->required();
  eval_cmd->add_option("--lambda-re", eh.lambda_re, "Re lambda");
  eval_cmd->add_option("--lambda-im", eh.lambda_im, "Im lambda");
  eval_cmd->add_option("--k", eh.k, "use the lattice root lambda_k");

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "solve a Cauchy or boundary problem");
  solve_cmd->require_subcommand(1);
  solve_cmd->fallthrough();
  auto* cauchy_cmd = solve_cmd->add_subcommand("cauchy", "D^alpha y(a) = phi(alpha)");
  auto* bvp_cmd = solve_cmd->add_subcommand("bvp", "a0 D^alpha y(a) + b0 D^alpha y(b) = phi(alpha)");
  for (auto* c : {cauchy_cmd, bvp_cmd}) {
    c->add_option("--a", sa.a, "data point a > 0")->required();
    c->add_option("--phi", sa.phi, "builtin:mode:K[:re[:im]], builtin:cosine:K[:amp], builtin:constant:C or csv:PATH")
        ->required();
    c->add_option("--eval-grid", sa.eval_grid, "start:stop:count for a table of y(x)");
    c->add_option("--eval-out", sa.eval_out, "file for the evaluation table (default stdout)");
  }
  bvp_cmd->add_option("--b", sa.b, "second point b > a")->required();
  bvp_cmd->add_option("--a0", sa.a0, "weight at a")->capture_default_str();
  bvp_cmd->add_option("--b0", sa.b0, "weight at b")->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--suite", va.suite, "default or full")
      ->check(CLI::IsMember({"default", "full"}))
      ->capture_default_str();
  verify_cmd->add_option("--target-scale", va.target_scale, "multiply every target (testing only)")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*roots_cmd) return cmd_roots(g, out);
    if (*eval_cmd) return cmd_eval_h(g, eh, out);
    if (*cauchy_cmd) return cmd_solve_cauchy(g, sa, out);
    if (*bvp_cmd) return cmd_solve_bvp(g, sa, out);
    if (*verify_cmd) return cmd_verify(g, va, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}

}  // namespace dorder::cli
