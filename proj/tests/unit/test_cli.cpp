#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "dorder/io.hpp"
#include "dorder/verification.hpp"
#include "json.hpp"
#include "reference_values.hpp"

using namespace dorder;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "dorder_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("roots") {
  const Run r = run({"roots", "--kmax", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["roots"].size() == 6);
  for (const auto& row : j["roots"]) CHECK(row["abs_char_fn"].get<double>() <= 1e-12);

  const Run csv = run({"--format", "csv", "roots", "--kmax", "2"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);

  const Run degenerate = run({"roots", "--beta", "1", "--kmax", "1"});
  CHECK(degenerate.code == 3);
  CHECK(degenerate.err.find("DegenerateLattice") != std::string::npos);

  CHECK(run({"roots", "--kmax", "0"}).code == 2);
  CHECK(run({"roots", "--beta", "3"}).code == 2);
  CHECK(run({"roots", "--kmax", "many"}).code == 2);
  CHECK(run({"--format", "xml", "roots"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eval-h") {
  const Run r = run({"eval-h", "--x", "1", "--lambda-re", "1", "--lambda-im", "0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const double want = reference::kHGrid[6].value.real();  // x = 1, lambda = 1
  CHECK(std::abs(j["h"]["re"].get<double>() - want) <= 1e-9);
  CHECK(j["h"]["im"].get<double>() == 0.0);
  CHECK(j["error"].get<double>() < 1e-10);

  const Run k = run({"eval-h", "--x", "2", "--k", "1"});
  REQUIRE(k.code == 0);
  const json jk = json::parse(k.out);
  CHECK(std::isfinite(jk["h"]["re"].get<double>()));
  CHECK(std::abs(jk["h"]["im"].get<double>() - reference::kHGrid[13].value.imag()) < 1e-12);

  CHECK(run({"eval-h", "--x", "-1", "--k", "1"}).code == 2);
  CHECK(run({"eval-h", "--x", "1"}).code == 2);
  CHECK(run({"eval-h", "--x", "1", "--k", "1", "--lambda-re", "2"}).code == 2);
  CHECK(run({"eval-h", "--x", "1", "--k", "0"}).code == 2);
  CHECK(run({"eval-h", "--x", "1", "--lambda-re", "-1"}).code == 2);  // branch cut
  CHECK(run({"eval-h", "--x", "1000", "--lambda-re", "1"}).code == 4);
}

TEST_CASE("solve") {
  SUBCASE("constant data") {
    const Run r = run({"solve", "cauchy", "--a", "1", "--phi", "builtin:constant:1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["kmax"] == 16);
    for (const auto& c : j["coefficients"]) {
      CHECK(c["re"].get<double>() == 0.0);
      CHECK(c["im"].get<double>() == 0.0);
    }
    CHECK(j["diagnostics"]["zero_projection"] == true);
  }
  SUBCASE("usage errors") {
    CHECK(run({"solve", "bvp", "--a", "1", "--b", "2", "--a0", "0", "--b0", "0", "--phi", "builtin:mode:1"}).code ==
          2);
    CHECK(run({"solve", "cauchy", "--a", "1", "--phi", "builtin:mode:0"}).code == 2);
    CHECK(run({"solve", "cauchy", "--a", "1", "--phi", "builtin:wave:1"}).code == 2);
    CHECK(run({"solve", "cauchy", "--a", "1", "--phi", "csv:/nonexistent/phi.csv"}).code == 2);
    CHECK(run({"solve", "cauchy", "--phi", "builtin:mode:1"}).code == 2);
    CHECK(run({"solve", "cauchy", "--a", "1", "--phi", "builtin:mode:1", "--eval-grid", "0:1:3"}).code == 2);
    CHECK(run({"solve", "--a", "1"}).code == 2);
    CHECK(run({"--beta", "1", "solve", "cauchy", "--a", "1", "--phi", "builtin:mode:1"}).code == 3);
  }
  SUBCASE("coarse sampled data") {
    const auto path = scratch("coarse.csv");
    std::ofstream(path) << "alpha,re\n0,1\n0.8,1\n1.6,1\n";
    CHECK(run({"--beta", "1.6", "--kmax", "2", "solve", "cauchy", "--a", "1", "--phi", "csv:" + path.string()}).code == 2);
  }
  SUBCASE("degenerate boundary pair") {
    const BoundaryPair p = construct_near_degenerate(kDefaultBeta);
    const Run r = run({"solve", "bvp", "--a", io::format_double(p.a), "--b", io::format_double(p.b), "--a0",
                       io::format_double(p.a0), "--b0", io::format_double(p.b0), "--phi", "builtin:mode:1"});
    CHECK(r.code == 5);
    CHECK(r.err.find("lambda_1") != std::string::npos);
  }
  SUBCASE("manufactured round trip through files") {
    const auto want = manufactured_coefficients(3);
    const SampledPhi phi = manufacture_cauchy_phi(1.0, want, kDefaultBeta, 513);
    const auto phi_path = scratch("phi.csv");
    {
      std::ofstream f(phi_path);
      f << "alpha,re,im\n";
      for (std::size_t j = 0; j < phi.values.size(); ++j) {
        f << io::format_double(phi.alphas[j]) << "," << io::format_double(phi.values[j].real()) << ","
          << io::format_double(phi.values[j].imag()) << "\n";
      }
    }
    const auto out_path = scratch("result.json");
    const auto table_path = scratch("table.csv");
    const std::vector<std::string> args{"--kmax", "8", "--out", out_path.string(), "solve", "cauchy", "--a", "1",
                                        "--phi", "csv:" + phi_path.string(), "--eval-grid", "1:4:7",
                                        "--eval-out", table_path.string()};
    const Run r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const std::string first = slurp(out_path);
    const json j = json::parse(first);
    double worst = 0.0;
    for (const auto& c : j["coefficients"]) {
      const int k = c["k"];
      const Complex got{c["re"].get<double>(), c["im"].get<double>()};
      const auto it = want.find(k);
      worst = std::max(worst, std::abs(got - (it == want.end() ? Complex{} : it->second)));
    }
    CHECK(worst <= 1e-8);
    const std::string table = slurp(table_path);
    CHECK(table.rfind("x,y_re,y_im\n1,", 0) == 0);
    CHECK(std::count(table.begin(), table.end(), '\n') == 8);

    // byte-identical on a rerun
    REQUIRE(run(args).code == 0);
    CHECK(slurp(out_path) == first);
  }
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--suite", "default"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ok"] == true);
  bool constant_listed = false;
  for (const auto& c : j["checks"]) {
    if (c["expected_fail"] == true && c["name"].get<std::string>().find("initial residual") != std::string::npos) {
      constant_listed = true;
    }
  }
  CHECK(constant_listed);
  CHECK(run({"verify", "--target-scale", "1e-30"}).code == 1);
  CHECK(run({"verify", "--suite", "quick"}).code == 2);
  CHECK(run({"verify"}).out == r.out);
}

}  // TEST_SUITE
