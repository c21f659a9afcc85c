// Batch front door: parse symbol/function JSON, dispatch to the library,
// emit JSON or CSV reports. Exit codes: 0 success, 2 verdict undecided,
// 1 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mabar/decay.hpp"
#include "mabar/mate.hpp"
#include "mabar/multipliers.hpp"
#include "mabar/random.hpp"
#include "mabar/rangespace.hpp"
#include "mabar/selftest.hpp"
#include "mabar/serialize.hpp"
#include "mabar/shiftop.hpp"
#include "mabar/version.hpp"

namespace {

using mabar::Json;

// Inline JSON, or @path to read a file.
Json parse_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::runtime_error("cannot open " + text.substr(1));
    return Json::parse(in);
  }
  return Json::parse(text);
}

mabar::CircleZeroPolynomial parse_class_a(const std::string& text) {
  if (text == "1") return mabar::CircleZeroPolynomial::one();
  return mabar::class_a_from_json(parse_arg(text));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// "lo:hi" -> lo, then powers of two up to hi.
std::vector<int> parse_sweep(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return parse_int_list(text);
  const int lo = std::stoi(text.substr(0, colon));
  const int hi = std::stoi(text.substr(colon + 1));
  std::vector<int> out;
  for (int n = lo; n < hi; n = (n == 0) ? 1 : 2 * n) out.push_back(n);
  if (out.empty() || out.back() != hi) out.push_back(hi);
  return out;
}

struct RunConfig {
  std::string path;    // empty: stdout
  std::string format = "json";
  Json config = Json::object();

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream out(path);
      out << text;
    }
  }
  void emit_json(Json body) const {
    Json report{{"version", mabar::kVersion}, {"config", config}};
    report.update(body);
    write(report.dump(2));
  }
  void emit_csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) const {
    write(mabar::csv_report({{"version", mabar::kVersion}, {"config", config.dump()}}, header,
                            rows));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"range spaces of co-analytic Toeplitz operators with circle-zero symbols"};
  app.require_subcommand(1);

  std::string arg_a = "1", arg_a1 = "1", arg_a2 = "1";
  std::string arg_rational, arg_phi, arg_f, arg_coeffs, arg_symbols, arg_psi;
  std::string arg_lambda = "[0,0]";
  std::string arg_out, arg_format = "json", arg_sweep = "0:1024", arg_window, arg_nlist = "64,256,1024";
  std::string arg_only;
  int arg_n = 64, arg_grid = 4096, arg_trials = 20;
  double arg_tol = 1e-8, arg_class_f = 0.0;
  std::uint64_t arg_seed = 20260809;
  int exit_code = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", arg_out, "write the report to a file instead of stdout");
    cmd->add_option("--format", arg_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", arg_tol, "numeric tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", arg_seed, "seed for random corpora");
  };
  auto make_output = [&](const CLI::App* cmd) {
    RunConfig out;
    out.path = arg_out;
    out.format = arg_format;
    for (const CLI::Option* opt : cmd->get_options()) {
      if (opt->count() && opt->get_name() != "--out")
        out.config[opt->get_name().substr(2)] = opt->results().front();
    }
    out.config["seed"] = arg_seed;
    return out;
  };

  // reduce: rational symbol -> circle-zero part
  auto* cmd_reduce = app.add_subcommand("reduce", "circle-zero part of a rational symbol");
  cmd_reduce->add_option("--rational", arg_rational, "rational symbol JSON or @file")->required();
  add_common(cmd_reduce);
  cmd_reduce->callback([&] {
    const auto a = mabar::rational_from_json(parse_arg(arg_rational));
    make_output(cmd_reduce).emit_json(mabar::to_json(mabar::reduce(a, arg_tol)));
  });

  // decompose: f = a fTilde + p
  auto* cmd_dec = app.add_subcommand("decompose", "split f into a*fTilde + p");
  cmd_dec->add_option("--a", arg_a, "class-A symbol: [[theta,mult],...] or \"1\"")->required();
  cmd_dec->add_option("--f", arg_f, "polynomial coefficients [[re,im],...]")->required();
  add_common(cmd_dec);
  cmd_dec->callback([&] {
    const auto a = parse_class_a(arg_a);
    const auto f = mabar::series_from_json(parse_arg(arg_f));
    Json body = mabar::to_json(mabar::decompose(a, f));
    // the sum is direct but not orthogonal; report the principal angle
    body["direct_sum_angle"] = mabar::direct_sum_angle(a, std::max(8, f.degree()));
    make_output(cmd_dec).emit_json(body);
  });

  // norm: range element with preimage
  auto* cmd_norm = app.add_subcommand("norm", "range norm and preimage of a polynomial");
  cmd_norm->add_option("--a", arg_a)->required();
  cmd_norm->add_option("--f", arg_f)->required();
  add_common(cmd_norm);
  cmd_norm->callback([&] {
    const auto a = parse_class_a(arg_a);
    const auto f = mabar::series_from_json(parse_arg(arg_f));
    make_output(cmd_norm).emit_json(mabar::to_json(mabar::make_range_element(a, f)));
  });

  // kernel-check: reproducing property residual
  auto* cmd_kernel = app.add_subcommand("kernel-check", "reproducing-kernel residual");
  cmd_kernel->add_option("--a", arg_a)->required();
  cmd_kernel->add_option("--f", arg_f)->required();
  cmd_kernel->add_option("--lambda", arg_lambda, "[re,im], |lambda| < 1");
  cmd_kernel->add_option("--n", arg_n, "kernel truncation degree (-1: auto)");
  add_common(cmd_kernel);
  cmd_kernel->callback([&] {
    const auto a = parse_class_a(arg_a);
    const auto f = mabar::series_from_json(parse_arg(arg_f));
    const auto lambda = mabar::complex_from_json(parse_arg(arg_lambda));
    const int n = cmd_kernel->count("--n") ? arg_n
                                           : mabar::kernel_truncation_degree(a, lambda, 1e-9);
    const double res = mabar::reproducing_residual(a, f, lambda, n);
    make_output(cmd_kernel)
        .emit_json(Json{{"residual", res},
                        {"n", n},
                        {"value_at_lambda", mabar::to_json(f.evaluate(lambda))}});
  });

  // mult-check
  auto* cmd_mult = app.add_subcommand("mult-check", "multiplier verdict between two range spaces");
  cmd_mult->add_option("--a1", arg_a1)->required();
  cmd_mult->add_option("--a2", arg_a2)->required();
  cmd_mult->add_option("--phi", arg_phi, "singular-factor function JSON or @file")->required();
  add_common(cmd_mult);
  cmd_mult->callback([&] {
    const auto a1 = parse_class_a(arg_a1);
    const auto a2 = parse_class_a(arg_a2);
    const auto phi = mabar::singular_from_json(parse_arg(arg_phi));
    const auto verdict = mabar::mult_check(a1, a2, phi);
    make_output(cmd_mult).emit_json(mabar::to_json(verdict));
    if (verdict.decision == mabar::Decision::Unknown) exit_code = 2;
  });

  // onto-check
  auto* cmd_onto = app.add_subcommand("onto-check", "existence of onto multipliers");
  cmd_onto->add_option("--a1", arg_a1)->required();
  cmd_onto->add_option("--a2", arg_a2)->required();
  add_common(cmd_onto);
  cmd_onto->callback([&] {
    const auto verdict = mabar::onto_check(parse_class_a(arg_a1), parse_class_a(arg_a2));
    make_output(cmd_onto).emit_json(mabar::to_json(verdict));
    if (verdict.decision == mabar::Decision::Unknown) exit_code = 2;
  });

  // shift-norm sweep
  auto* cmd_shift = app.add_subcommand("shift-norm", "finite-section norms of the shift");
  cmd_shift->add_option("--a", arg_a)->required();
  cmd_shift->add_option("--sweep", arg_sweep, "lo:hi (doubling) or comma list");
  add_common(cmd_shift);
  cmd_shift->callback([&] {
    const auto a = parse_class_a(arg_a);
    const auto rep = mabar::shift_norm_sections(a, parse_sweep(arg_sweep));
    const RunConfig out = make_output(cmd_shift);
    if (out.format == "csv") {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [n, sigma] : rep.section_values)
        rows.push_back({std::to_string(n), mabar::format_double(sigma),
                        mabar::format_double(rep.closed_form),
                        mabar::format_double(rep.closed_form - sigma)});
      out.emit_csv({"n", "sigma_max", "closed_form", "gap"}, rows);
    } else {
      out.emit_json(mabar::to_json(rep));
    }
  });

  // adjoint-check
  auto* cmd_adj = app.add_subcommand("adjoint-check", "interior-block adjoint residual");
  cmd_adj->add_option("--a", arg_a)->required();
  cmd_adj->add_option("--n", arg_n);
  add_common(cmd_adj);
  cmd_adj->callback([&] {
    const auto a = parse_class_a(arg_a);
    make_output(cmd_adj).emit_json(Json{{"residual", mabar::adjoint_residual(a, arg_n)}});
  });

  // mate
  auto* cmd_mate = app.add_subcommand("mate", "Pythagorean mate of a symbol in the ball");
  cmd_mate->add_option("--rational", arg_rational, "rational symbol JSON or @file")->required();
  cmd_mate->add_option("--grid", arg_grid, "grid size (power of two)");
  cmd_mate->add_flag("--normalize", "scale the symbol by 1/(2||a||_inf) first");
  add_common(cmd_mate);
  cmd_mate->callback([&] {
    auto a = mabar::rational_from_json(parse_arg(arg_rational));
    Json extra = Json::object();
    if (cmd_mate->count("--normalize")) {
      const auto scaled = mabar::normalize_nonextreme(a, arg_grid);
      a = scaled.symbol;
      extra["scale"] = scaled.scale;
    }
    const auto m = mabar::pythagorean_mate_full(a, arg_grid);
    const auto res = mabar::mate_residual(a, m.b, arg_grid);
    Json body = mabar::to_json(m, res);
    body.update(extra);
    make_output(cmd_mate).emit_json(body);
  });

  // decay-fit
  auto* cmd_decay = app.add_subcommand("decay-fit", "sqrt-exponential decay fit of coefficients");
  cmd_decay->add_option("--coeffs", arg_coeffs, "coefficients JSON or @file")->required();
  cmd_decay->add_option("--window", arg_window, "n0:n1 (default 0:deg)");
  add_common(cmd_decay);
  cmd_decay->callback([&] {
    const auto psi = mabar::series_from_json(parse_arg(arg_coeffs));
    mabar::DecayWindow w{0, psi.degree()};
    if (!arg_window.empty()) {
      const auto v = parse_sweep(arg_window);
      w.n0 = v.front();
      w.n1 = v.back();
    }
    const auto fit = mabar::decay_fit(psi, w);
    Json body = mabar::to_json(fit);
    body["in_class"] = mabar::in_decay_class(fit);
    make_output(cmd_decay).emit_json(body);
  });

  // probe
  auto* cmd_probe = app.add_subcommand("probe", "universal multiplier probe table");
  cmd_probe->add_option("--psi", arg_psi, "coefficients JSON or @file");
  cmd_probe->add_option("--class-f", arg_class_f, "use the sample e^{-c sqrt(k)} with this c");
  cmd_probe->add_option("--psi-n", arg_n, "sample length for --class-f");
  cmd_probe->add_option("--symbols", arg_symbols, "JSON array of class-A angle lists")->required();
  cmd_probe->add_option("--n-list", arg_nlist, "comma-separated truncations");
  add_common(cmd_probe);
  cmd_probe->callback([&] {
    mabar::CoefficientSeries psi;
    if (arg_class_f > 0.0)
      psi = mabar::sample_class_F(arg_class_f, arg_n);
    else if (!arg_psi.empty())
      psi = mabar::series_from_json(parse_arg(arg_psi));
    else
      throw std::runtime_error("probe: provide --psi or --class-f");
    std::vector<mabar::CircleZeroPolynomial> symbols;
    for (const Json& s : parse_arg(arg_symbols)) symbols.push_back(mabar::class_a_from_json(s));
    const auto rows = mabar::universal_mult_probe(psi, symbols, parse_int_list(arg_nlist));
    const RunConfig out = make_output(cmd_probe);
    if (out.format == "csv") {
      std::vector<std::vector<std::string>> body;
      for (const auto& row : rows)
        body.push_back({row.symbol, std::to_string(row.n), mabar::format_double(row.sigma),
                        mabar::format_double(row.growth), row.flagged ? "1" : "0"});
      out.emit_csv({"symbol", "n", "sigma_max", "growth_ratio", "flagged"}, body);
    } else {
      Json arr = Json::array();
      for (const auto& row : rows)
        arr.push_back({{"symbol", row.symbol},
                       {"n", row.n},
                       {"sigma_max", row.sigma},
                       {"growth_ratio", row.growth},
                       {"flagged", row.flagged}});
      out.emit_json(Json{{"probe", arr}});
    }
  });

  // convergence study: kernel residual against truncation degree
  auto* cmd_conv = app.add_subcommand("convergence", "kernel residual sweep in the truncation");
  cmd_conv->add_option("--a", arg_a)->required();
  cmd_conv->add_option("--f", arg_f)->required();
  cmd_conv->add_option("--lambda", arg_lambda);
  cmd_conv->add_option("--sweep", arg_sweep, "lo:hi (doubling) or comma list");
  add_common(cmd_conv);
  cmd_conv->callback([&] {
    const auto a = parse_class_a(arg_a);
    const auto f = mabar::series_from_json(parse_arg(arg_f));
    const auto lambda = mabar::complex_from_json(parse_arg(arg_lambda));
    const RunConfig out = make_output(cmd_conv);
    std::vector<std::vector<std::string>> rows;
    for (int n : parse_sweep(arg_sweep)) {
      if (n < a.degree()) continue;
      const auto k = mabar::kernel(a, lambda, n);
      const auto value = mabar::abar_inner(a, f, k);
      const double residual = std::abs(value - f.evaluate(lambda));
      rows.push_back({std::to_string(n), mabar::format_double(value.real()),
                      mabar::format_double(value.imag()), mabar::format_double(residual)});
    }
    out.emit_csv({"n", "value_re", "value_im", "residual"}, rows);
  });

  // selftest: the acceptance suite
  auto* cmd_self = app.add_subcommand("selftest", "run the acceptance suite");
  cmd_self->add_option("--only", arg_only, "run criteria whose name contains this substring");
  double arg_tol_scale = 1.0;
  cmd_self->add_option("--tolerance-scale", arg_tol_scale,
                       "multiply every residual threshold (tampering demonstrates the guards)");
  add_common(cmd_self);
  cmd_self->callback([&] {
    const auto results = mabar::run_acceptance(arg_seed, arg_only, arg_tol_scale);
    bool all = true;
    for (const auto& r : results) {
      // timings go to stderr so the report itself is byte-identical per seed
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.index << " " << r.name << "\n";
      std::cerr << "# " << r.name << " " << r.seconds << " s\n";
      if (!r.pass) {
        std::cout << "     " << r.detail << "\n";
        all = false;
      }
    }
    if (!all) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
