#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "phardy/io.hpp"

namespace fs = std::filesystem;
using phardy::io::Json;

namespace {

const std::string kCli = PHARDY_CLI;
const std::string kData = PHARDY_DATA_DIR;

std::string scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "phardy_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

int run(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  if (out != nullptr) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify suite exits cleanly") {
  std::string out;
  CHECK(run("verify --suite kernels --seed 7", &out) == 0);
  CHECK(out.find("[PASS]  3") != std::string::npos);
  CHECK(out.find("[PASS]  4") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("verify --suite nonsense") == 2);
  CHECK(run("cubature --no-such-flag") == 2);
  CHECK(run("decompose --input " + scratch("missing.json") + " --output " +
            scratch("never.json")) == 2);
  const std::string bad = scratch("bad.json");
  std::ofstream(bad) << "{\"d\": 3, \"terms\": [{\"alpha\": [1, 0], \"c\": [1, 0]}]";
  CHECK(run("decompose --input " + bad + " --output " + scratch("never.json")) == 2);
}

TEST_CASE("cubature of the unit function gives the ball volume") {
  std::string out;
  REQUIRE(run("cubature --measure " + kData + "/lebesgue_ball_d3.json --input " + kData +
                  "/one_d3.json --nodes " + kData + "/nodes_n4.json --N 4 --kmax 0",
              &out) == 0);
  const Json j = Json::parse(out);
  const double value = j.at("value")[0].get<double>();
  CHECK(std::abs(value - 4.0 * std::numbers::pi / 3.0) < 1e-10);
  CHECK(j.at("pseudo_positive").get<bool>());
  CHECK(run("cubature --measure " + kData + "/lebesgue_ball_d3.json --input " + kData +
            "/one_d3.json --nodes " + kData + "/nodes_n4.json --N 3 --kmax 0") == 2);
}

TEST_CASE("decompose is deterministic and eval reproduces the grid") {
  const std::string a = scratch("a.json"), b = scratch("b.json"), grid = scratch("grid.csv");
  const std::string input = " --input " + kData + "/poly_d3.json";
  REQUIRE(run("decompose" + input + " --output " + a + " --grid " + grid + " --seed 3") == 0);
  REQUIRE(run("decompose" + input + " --output " + b + " --seed 3") == 0);
  CHECK(slurp(a) == slurp(b));

  const double residual = phardy::io::read_json(a).at("residual").get<double>();
  CHECK(residual < 1e-12);
  const std::string evaluated = scratch("eval.csv");
  REQUIRE(run("eval --table " + a + " --grid " + grid + " --output " + evaluated) == 0);
  const auto expected = phardy::io::read_csv(grid);
  const auto got = phardy::io::read_csv(evaluated);
  REQUIRE(got.size() == expected.size());
  REQUIRE_FALSE(got.empty());
  for (std::size_t i = 0; i < got.size(); ++i) {
    const std::size_t n = got[i].size();
    REQUIRE(n == expected[i].size());
    const double err = std::hypot(got[i][n - 2] - expected[i][n - 2], got[i][n - 1] - expected[i][n - 1]);
    CHECK(err <= 10 * residual + 1e-15);
  }
}

TEST_CASE("kernel evaluation agrees with its series") {
  const std::string out = scratch("kernels.csv");
  REQUIRE(run("kernel --input " + kData + "/kernel_points.json --output " + out) == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kernel,d,zeta_re,zeta_im,z_re,z_im,c,re,im,series_residual");
  int count = 0;
  while (std::getline(in, line)) {
    const double residual = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(residual < 1e-9);
    ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("bvp solve and forward round trip") {
  std::string solved;
  REQUIRE(run("bvp solve --input " + kData + "/boundary_d2.json", &solved) == 0);
  const auto table = phardy::io::almansi_from_json(Json::parse(solved));
  CHECK(table.coefficient({0, 1}, 1) == phardy::Complex(1.0));
  CHECK(std::abs(table.coefficient({3, 2}, 0) - phardy::Complex(0.375, -0.5)) < 1e-15);
  CHECK(std::abs(table.coefficient({3, 2}, 1) - 0.125) < 1e-15);

  const std::string path = scratch("solved.json");
  std::ofstream(path) << solved;
  std::string forward;
  REQUIRE(run("bvp forward --N 2 --input " + path, &forward) == 0);
  const auto data = phardy::io::boundary_data_from_json(Json::parse(forward));
  const auto original =
      phardy::io::boundary_data_from_json(phardy::io::read_json(kData + "/boundary_d2.json"));
  for (int m = 0; m < 2; ++m) {
    for (const auto& mode : original.support()) {
      CHECK(std::abs(data.value(m, mode) - original.value(m, mode)) < 1e-14);
    }
  }
}

TEST_CASE("interp writes a table and a report") {
  const std::string table = scratch("poly_table.json"), out = scratch("interp.json");
  REQUIRE(run("decompose --input " + kData + "/poly_d3.json --output " + table) == 0);
  std::string report;
  REQUIRE(run("interp --nodes " + kData + "/nodes_n4.json --input " + table +
                  " --N 4 --b 0.9 --output " + out,
              &report) == 0);
  const Json r = Json::parse(report);
  CHECK(r.at("max_residual").get<double>() < 1e-12);
  CHECK(std::abs(r.at("output_norm").get<double>() - r.at("input_norm").get<double>()) < 1e-12);
  const auto p = phardy::io::almansi_from_json(phardy::io::read_json(out));
  const auto f = phardy::io::almansi_from_json(phardy::io::read_json(table));
  for (const auto& [mode, c] : f.entries()) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      CHECK(std::abs(p.coefficient(mode, static_cast<int>(j)) - c[j]) < 1e-10);
    }
  }
  CHECK(run("interp --nodes " + kData + "/nodes_n4.json --input " + table +
            " --N 2 --b 0.9 --output " + out) == 2);
}
