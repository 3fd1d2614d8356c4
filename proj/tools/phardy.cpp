// phardy: command-line front end for the polyharmonic Hardy space library.
//
// Exit codes: 0 success, 1 failed verification, 2 bad configuration or
// input, 3 numerical precondition or domain error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phardy/almansi.hpp"
#include "phardy/bvp.hpp"
#include "phardy/cubature.hpp"
#include "phardy/errors.hpp"
#include "phardy/hardy.hpp"
#include "phardy/interp.hpp"
#include "phardy/io.hpp"
#include "phardy/kernels.hpp"
#include "phardy/random.hpp"
#include "phardy/verify.hpp"

namespace {

using phardy::Complex;
using phardy::io::InputError;
using phardy::io::Json;
using phardy::io::format_double;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    phardy::io::write_json(path, j);
  }
}

// decompose ---------------------------------------------------------------

struct DecomposeOptions {
  std::string input, output, grid;
  int samples = 64;
  int grid_points = 32;
  unsigned long long seed = 1;
};

int run_decompose(const DecomposeOptions& o) {
  const phardy::MultiPoly p =
      phardy::io::multipoly_from_json(phardy::io::read_json(o.input));
  const phardy::AlmansiTable table = phardy::gauss_decompose(p);
  Json out = phardy::io::to_json(table);
  out["residual"] = phardy::decomposition_residual(p, table, o.samples, o.seed);
  phardy::io::write_json(o.output, out);
  if (!o.grid.empty()) {
    // Sample points of the real ball with the polynomial's values, in the
    // column layout `eval` reads.
    phardy::Rng rng(o.seed);
    auto csv = open_output(o.grid);
    const int d = p.dimension();
    csv << "r";
    for (int a = 0; a < d; ++a) csv << ",theta_" << a + 1;
    csv << ",re,im\n";
    for (int i = 0; i < o.grid_points; ++i) {
      const double r = rng.uniform();
      const auto theta = rng.unit_vector(d);
      std::vector<double> x(d);
      for (int a = 0; a < d; ++a) x[a] = r * theta[a];
      const Complex v = p(x);
      csv << format_double(r);
      for (double t : theta) csv << ',' << format_double(t);
      csv << ',' << format_double(v.real()) << ',' << format_double(v.imag())
          << '\n';
    }
  }
  return 0;
}

// eval --------------------------------------------------------------------

int run_eval(const std::string& table_path, const std::string& grid_path,
             const std::string& output) {
  const auto table = phardy::io::almansi_from_json(phardy::io::read_json(table_path));
  const int d = table.dimension();
  const auto rows = phardy::io::read_csv(grid_path);
  auto csv = open_output(output);
  csv << "r";
  for (int a = 0; a < d; ++a) csv << ",theta_" << a + 1;
  csv << ",re,im\n";
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) < d + 1) {
      throw InputError("grid row needs r and " + std::to_string(d) +
                       " direction components");
    }
    const double r = row[0];
    std::vector<double> theta(row.begin() + 1, row.begin() + 1 + d);
    const Complex v = phardy::evaluate(table, r, theta);
    csv << format_double(r);
    for (double t : theta) csv << ',' << format_double(t);
    csv << ',' << format_double(v.real()) << ',' << format_double(v.imag())
        << '\n';
  }
  return 0;
}

// kernel ------------------------------------------------------------------

int run_kernel(const std::string& input, const std::string& output, int k_max,
               int j_max) {
  const Json points = phardy::io::read_json(input);
  if (!points.is_array()) throw InputError("kernel input must be a JSON list");
  auto csv = open_output(output);
  csv << "kernel,d,zeta_re,zeta_im,z_re,z_im,c,re,im,series_residual\n";
  for (const auto& pt : points) {
    const std::string kind = pt.at("kernel").get<std::string>();
    const int d = pt.at("d").get<int>();
    Complex zeta, z(1.0, 0.0), value, series;
    double c = 0.0;
    if (kind == "poisson") {
      zeta = complex_from(pt.at("w"));
      c = pt.at("c").get<double>();
      value = phardy::poisson_kernel_c(d, zeta, c);
      series = phardy::poisson_kernel_series(d, zeta, c, k_max);
    } else {
      phardy::KernelPoint p{complex_from(pt.at("zeta")),
                            pt.at("theta_prime").get<std::vector<double>>(),
                            complex_from(pt.at("z")),
                            pt.at("theta").get<std::vector<double>>()};
      zeta = p.zeta;
      z = p.z;
      c = phardy::cosine_between(p.theta, p.theta_prime);
      if (kind == "cauchy") {
        value = phardy::cauchy_kernel(d, p);
        series = phardy::cauchy_kernel_series(d, p, k_max, j_max);
      } else if (kind == "hua_aronszajn") {
        value = phardy::hua_aronszajn_kernel(d, p);
        series = phardy::hua_aronszajn_series(d, p, k_max, j_max);
      } else {
        throw InputError("unknown kernel \"" + kind +
                         "\" (cauchy, poisson, hua_aronszajn)");
      }
    }
    csv << kind << ',' << d << ',' << format_double(zeta.real()) << ','
        << format_double(zeta.imag()) << ',' << format_double(z.real()) << ','
        << format_double(z.imag()) << ',' << format_double(c) << ','
        << format_double(value.real()) << ',' << format_double(value.imag())
        << ',' << format_double(std::abs(value - series)) << '\n';
  }
  return 0;
}

// bvp ---------------------------------------------------------------------

int run_bvp(const std::string& mode, const std::string& input,
            const std::string& output, int N) {
  const Json in = phardy::io::read_json(input);
  if (mode == "solve") {
    const auto data = phardy::io::boundary_data_from_json(in);
    emit(phardy::io::to_json(phardy::solve_dirichlet(data)), output);
  } else if (mode == "forward") {
    if (N < 1) throw ConfigError("bvp forward needs --N >= 1");
    const auto table = phardy::io::almansi_from_json(in);
    emit(phardy::io::to_json(phardy::forward_boundary(table, N)), output);
  } else {
    const auto data = phardy::io::boundary_data_from_json(in);
    const auto diag = phardy::sobolev_diagnostic(data);
    Json out = {{"d", data.d},
                {"N", data.N},
                {"weight", "(1 + k(k+d-2))^(-m)"},
                {"totals", diag.totals},
                {"partial_sums", diag.partial_sums}};
    emit(out, output);
  }
  return 0;
}

// interp ------------------------------------------------------------------

phardy::NodeSet load_nodes(const std::string& path, int N, double b) {
  phardy::NodeSet ns = phardy::io::nodeset_from_json(phardy::io::read_json(path));
  if (b >= 0.0) ns.b = b;
  if (ns.order() != N) {
    throw ConfigError("--N " + std::to_string(N) + " does not match the " +
                      std::to_string(ns.order() + 1) + " nodes per mode in " +
                      path);
  }
  return ns;
}

int run_interp(const std::string& nodes, const std::string& input, int N,
               double b, int k_max, const std::string& output) {
  const phardy::NodeSet ns = load_nodes(nodes, N, b);
  const auto f = phardy::io::almansi_from_json(phardy::io::read_json(input));
  if (k_max < 0) k_max = f.max_k();
  const auto result = phardy::polyharmonic_interpolant(f, ns, k_max);
  const auto norms = phardy::mode_norms(f);
  const double f_norm = phardy::hardy_norm(f);
  Json report = {
      {"N", N},
      {"b", ns.b},
      {"k_max", k_max},
      {"input_norm", f_norm},
      {"output_norm", phardy::hardy_norm(result.table)},
      {"stability_constant", result.stability_constant},
      {"norm_bound", result.stability_constant * f_norm},
      {"error_bound", phardy::interpolation_error_bound(norms, ns, f.dimension())},
      {"error_bound_nodal",
       phardy::interpolation_error_bound_nodal(norms, ns, f.dimension(), k_max)},
      {"max_residual", result.max_residual}};
  phardy::io::write_json(output, phardy::io::to_json(result.table));
  std::cout << report.dump(2) << '\n';
  return 0;
}

// cubature ----------------------------------------------------------------

int run_cubature(const std::string& measure, const std::string& input,
                 const std::string& nodes, int N, int k_max,
                 const std::string& output) {
  const auto mu = phardy::io::measure_from_json(phardy::io::read_json(measure));
  const auto f = phardy::io::almansi_from_json(phardy::io::read_json(input));
  if (f.dimension() != mu.d) throw ConfigError("measure and input differ in d");
  const phardy::NodeSet ns = load_nodes(nodes, N, -1.0);
  const auto positivity = phardy::pseudo_positivity_report(mu, k_max);
  const auto result = phardy::cubature(f, mu, ns, k_max);
  const double bound =
      phardy::cubature_error_bound(phardy::mode_norms(f), mu, ns, k_max);
  Json violations = Json::array();
  for (const auto& m : positivity.violations) {
    violations.push_back({{"k", m.k}, {"l", m.l}});
  }
  Json out = {{"value", {result.value.real(), result.value.imag()}},
              {"error_bound", bound},
              {"dropped_bound", result.dropped_bound},
              {"pseudo_positive", positivity.passed},
              {"violations", violations}};
  emit(out, output);
  return 0;
}

// verify ------------------------------------------------------------------

int run_verify(const std::string& suite, unsigned long long seed) {
  int failures = 0;
  for (const auto& r : phardy::verify::run_suite(suite, seed)) {
    std::cout << phardy::verify::format(r) << '\n';
    if (!r.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all checks passed" : "some checks failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyharmonic Hardy space tools"};
  app.require_subcommand(1);

  DecomposeOptions dec;
  auto* decompose = app.add_subcommand("decompose", "Gauss decomposition of a polynomial");
  decompose->add_option("--input", dec.input, "polynomial JSON")->required();
  decompose->add_option("--output", dec.output, "Almansi table JSON")->required();
  decompose->add_option("--grid", dec.grid, "also write sample points of p as CSV");
  decompose->add_option("--grid-points", dec.grid_points)->check(CLI::PositiveNumber);
  decompose->add_option("--samples", dec.samples, "residual sample count")
      ->check(CLI::PositiveNumber);
  decompose->add_option("--seed", dec.seed);

  std::string table_path, grid_path, output, input, nodes_path, measure_path;
  auto* eval = app.add_subcommand("eval", "evaluate a table at grid points");
  eval->add_option("--table", table_path)->required();
  eval->add_option("--grid", grid_path, "CSV rows r,theta_1..theta_d[,re,im]")
      ->required();
  eval->add_option("--output", output)->required();

  int k_max = 60;
  int j_max = 30;
  auto* kernel = app.add_subcommand("kernel", "evaluate kernels at listed points");
  kernel->add_option("--input", input, "JSON list of points")->required();
  kernel->add_option("--output", output)->required();
  kernel->add_option("--kmax", k_max, "series truncation in k")->check(CLI::NonNegativeNumber);
  kernel->add_option("--jmax", j_max, "series truncation in j")->check(CLI::NonNegativeNumber);

  std::string bvp_mode;
  int N = 0;
  auto* bvp = app.add_subcommand("bvp", "polyharmonic Dirichlet problem");
  bvp->add_option("mode", bvp_mode, "solve | forward | diagnose")
      ->required()
      ->check(CLI::IsMember({"solve", "forward", "diagnose"}));
  bvp->add_option("--input", input)->required();
  bvp->add_option("--output", output, "defaults to standard output");
  bvp->add_option("--N", N, "order for forward");

  double b = -1.0;
  int interp_kmax = -1;
  auto* interp = app.add_subcommand("interp", "polyharmonic interpolation");
  interp->add_option("--nodes", nodes_path)->required();
  interp->add_option("--input", input)->required();
  interp->add_option("--N", N)->required()->check(CLI::NonNegativeNumber);
  interp->add_option("--b", b, "outer node radius")->required()->check(CLI::Range(0.0, 1.0));
  interp->add_option("--kmax", interp_kmax);
  interp->add_option("--output", output)->required();

  auto* cub = app.add_subcommand("cubature", "polyharmonic cubature");
  cub->add_option("--measure", measure_path)->required();
  cub->add_option("--input", input)->required();
  cub->add_option("--nodes", nodes_path)->required();
  cub->add_option("--N", N)->required()->check(CLI::NonNegativeNumber);
  cub->add_option("--kmax", k_max)->required()->check(CLI::NonNegativeNumber);
  cub->add_option("--output", output, "defaults to standard output");

  std::string suite = "all";
  unsigned long long seed = 1;
  auto* verify = app.add_subcommand("verify", "run acceptance checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember(phardy::verify::suite_names()));
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*decompose) return run_decompose(dec);
    if (*eval) return run_eval(table_path, grid_path, output);
    if (*kernel) return run_kernel(input, output, k_max, j_max);
    if (*bvp) return run_bvp(bvp_mode, input, output, N);
    if (*interp) return run_interp(nodes_path, input, N, b, interp_kmax, output);
    if (*cub) return run_cubature(measure_path, input, nodes_path, N, k_max, output);
    if (*verify) return run_verify(suite, seed);
  } catch (const InputError& e) {
    std::cerr << "error: input: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: numerical: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
