// Command-line front end: file-based polynomial / program / matrix inputs,
// machine-readable result lines on stdout, human summary on stderr.
//
// Exit codes: 0 success, 2 usage or parse error, 3 numerical error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rootsum/extremal.hpp"
#include "rootsum/io.hpp"
#include "rootsum/oracle.hpp"
#include "rootsum/powersums.hpp"
#include "rootsum/radii.hpp"
#include "rootsum/solver.hpp"
#include "rootsum/squaring.hpp"
#include "rootsum/threads.hpp"

namespace {

using namespace rootsum;

struct CommonOpts {
  std::string input;
  std::string format = "poly";
  int degree = 0;  // required for program inputs
  int eps_bits = 20;
  int b0 = 24;
  int q_cap = 1 << 20;
  unsigned long long seed = 0;
  bool seeded = false;
  int threads = 0;
  bool report = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  // long-form help only: the default -h short flag collides with --h
  cmd->set_help_flag("--help", "print help");
  if (needs_input)
    cmd->add_option("input", o.input, "input file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"poly", "slp", "matrix"}));
  cmd->add_option("--degree", o.degree, "polynomial degree (required for slp inputs)");
  cmd->add_option("--eps-bits", o.eps_bits, "target accuracy bits (eps = 2^-bits)");
  cmd->add_option("--b0", o.b0, "power-sum tolerance bits");
  cmd->add_option("--q-cap", o.q_cap, "max nodes per circle sum");
  cmd->add_option("--seed", o.seed, "seed for the random node rotation phase")
      ->each([&o](const std::string&) { o.seeded = true; });
  cmd->add_option("--threads", o.threads, "max worker threads (0 = hardware)");
  cmd->add_flag("--report", o.report, "print eval counts and bounds to stderr");
}

NewtonOracle make_oracle(const CommonOpts& o) {
  if (o.format == "poly") return oracle_from_coeffs(load_poly(o.input));
  if (o.format == "matrix") return matrix_oracle(load_matrix(o.input));
  if (o.degree < 1)
    throw UsageError("--degree is required for slp inputs");
  return oracle_from_slp(load_slp(o.input), o.degree);
}

Poly require_poly(const CommonOpts& o) {
  if (o.format != "poly")
    throw UsageError("this command needs coefficient input (--format poly)");
  return load_poly(o.input);
}

SolverConfig make_config(const CommonOpts& o) {
  SolverConfig cfg;
  cfg.eps_bits = o.eps_bits;
  cfg.b0 = o.b0;
  cfg.q_cap = o.q_cap;
  if (o.seeded) {
    std::mt19937_64 rng(o.seed);
    cfg.rotation = std::uniform_real_distribution<double>(0.0, 6.283185307179586)(rng);
  }
  return cfg;
}

void apply_threads(const CommonOpts& o) {
  int n = o.threads;
  if (n == 0) {
    if (const char* env = std::getenv("ROOTS_THREADS")) n = std::atoi(env);
  }
  if (n > 0) set_max_threads(n);
}

std::string root_line(const RootApproximation& r) {
  std::ostringstream s;
  s << format_complex(r.z) << " " << format_real(r.residual) << " "
    << (r.error_bound ? format_real(*r.error_bound) : std::string("-")) << " "
    << r.eval_count;
  return s.str();
}

void summarize(const CommonOpts& o, const NewtonOracle& oracle) {
  if (o.report)
    std::cerr << "total oracle evaluations: " << oracle.eval_count() << "\n";
}

Complex parse_complex_flag(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0;
  if (!(in >> re >> im)) throw UsageError("expected 're im': '" + s + "'");
  return {re, im};
}

Disc parse_disc_flag(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0, rho = 0;
  if (!(in >> re >> im >> rho)) throw UsageError("expected 're im rho': '" + s + "'");
  return Disc(Complex(re, im), rho);
}

int run(int argc, char** argv) {
  CLI::App app{"black-box polynomial root estimation via power sums of zeros"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  CommonOpts o;
  std::string centers_path, disc_flag, method = "cauchy", center_flag = "0 0";
  int n_roots = 1, h_flag = 0, q_flag = 0, steps = 1, j_flag = 1, tol_bits = 12;
  double theta = 2.0, rotation = 0.0, lo = 0.0, hi = 0.0;
  bool fg = false, normalize = false;

  auto* c_roots = app.add_subcommand("roots", "n absolutely smallest zeros (implicit deflation)");
  add_common(c_roots, o);
  c_roots->add_option("--n", n_roots, "number of zeros")->required();

  auto* c_smallest = app.add_subcommand("smallest", "absolutely smallest zero");
  add_common(c_smallest, o);
  auto* c_largest = app.add_subcommand("largest", "absolutely largest zero");
  add_common(c_largest, o);
  auto* c_lehmer = app.add_subcommand("lehmer", "global search for some zero");
  add_common(c_lehmer, o);

  auto* c_near = app.add_subcommand("near", "zero nearest each listed center");
  add_common(c_near, o);
  c_near->add_option("--centers", centers_path, "centers file ('re im' per line)")
      ->required()
      ->check(CLI::ExistingFile);

  auto* c_radii = app.add_subcommand("radii", "extremal zero-modulus bounds");
  add_common(c_radii, o);
  c_radii->add_option("--method", method, "coeff|newton|dlg|bisect");
  c_radii->add_option("--center", center_flag, "probe center 're im'");
  c_radii->add_option("--j", j_flag, "radius order for bisect (1 = nearest)");
  c_radii->add_option("--tol-bits", tol_bits, "bisect relative tolerance bits");
  c_radii->add_option("--steps", steps, "squaring depth for --method dlg");
  c_radii->add_option("--lo", lo, "bisect bracket: inner radius");
  c_radii->add_option("--hi", hi, "bisect bracket: outer radius");

  auto* c_power = app.add_subcommand("powersums", "power sums of the zeros");
  add_common(c_power, o);
  c_power->add_option("--method", method, "newton|cauchy");
  c_power->add_option("--h", h_flag, "power index (cauchy) or max index (newton)");
  c_power->add_option("--q", q_flag, "node count (0 = derive from --theta/--b0)");
  c_power->add_option("--theta", theta, "assumed circle isolation");
  c_power->add_option("--disc", disc_flag, "'re im rho' (default unit disc)");
  c_power->add_option("--rotation", rotation, "node phase offset");

  auto* c_dlg = app.add_subcommand("dlg", "root-squaring iteration on the coefficients");
  add_common(c_dlg, o);
  c_dlg->add_option("--steps", steps, "number of squaring steps");
  c_dlg->add_flag("--fg", fg, "carry the companion polynomial x*p'(x)");
  c_dlg->add_flag("--normalize", normalize, "normalize coefficients each step");

  auto* c_count = app.add_subcommand("count", "number of zeros inside a disc");
  add_common(c_count, o);
  c_count->add_option("--disc", disc_flag, "'re im rho'")->required();
  c_count->add_option("--q", q_flag, "node count (0 = automatic)");

  auto* c_eigen = app.add_subcommand("eigen", "matrix eigenvalues via the resolvent trace");
  add_common(c_eigen, o, false);
  c_eigen->add_option("--matrix", o.input, "matrix file")->required()->check(CLI::ExistingFile);
  c_eigen->add_option("--n", n_roots, "number of eigenvalues (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // 0 is the --help path
  }
  apply_threads(o);

  if (c_roots->parsed() || c_smallest->parsed() || c_largest->parsed() ||
      c_lehmer->parsed() || c_near->parsed() || c_eigen->parsed()) {
    if (c_eigen->parsed()) o.format = "matrix";
    NewtonOracle oracle = make_oracle(o);
    SolverConfig cfg = make_config(o);
    if (c_smallest->parsed()) {
      std::cout << root_line(smallest_root(oracle, cfg)) << "\n";
    } else if (c_largest->parsed()) {
      std::cout << root_line(largest_root(oracle, cfg)) << "\n";
    } else if (c_lehmer->parsed()) {
      RootApproximation r = lehmer_newton(oracle, cfg);
      std::cout << root_line(r) << "\n";
      if (!r.converged) {
        std::cerr << "not converged: " << r.note << "\n";
        summarize(o, oracle);
        return 3;
      }
    } else if (c_near->parsed()) {
      auto rs = roots_near(oracle, load_centers(centers_path), cfg);
      for (const auto& r : rs) {
        if (r.note.empty())
          std::cout << root_line(r) << "\n";
        else
          std::cout << "# failed: " << r.note << "\n";
      }
    } else {  // roots / eigen
      int n = c_eigen->parsed() && n_roots == 0 ? oracle.degree() : n_roots;
      RootSequenceResult rs = root_sequence(oracle, n, cfg);
      for (const auto& r : rs.roots) std::cout << root_line(r) << "\n";
      if (rs.failed_index) {
        std::cerr << "stopped at zero " << *rs.failed_index << ": " << rs.error << "\n";
        summarize(o, oracle);
        return 3;
      }
    }
    summarize(o, oracle);
    return 0;
  }

  if (c_radii->parsed()) {
    if (method == "cauchy") method = "coeff";  // shared flag default; radii defaults to coeff
    if (method == "coeff" || method == "dlg") {
      Poly p = require_poly(o);
      auto bounds = method == "coeff" ? coeff_radii_bounds(p)
                                      : dlg_sharpened_bounds(p, steps);
      std::cout << "smallest " << format_real(bounds.first.lower) << " "
                << format_real(bounds.first.upper) << "\n";
      std::cout << "largest " << format_real(bounds.second.lower) << " "
                << format_real(bounds.second.upper) << "\n";
      return 0;
    }
    NewtonOracle oracle = make_oracle(o);
    Complex c = parse_complex_flag(center_flag);
    if (method == "newton") {
      RadiusBounds b = newton_smallest_bound(oracle, c);
      std::cout << "smallest " << format_real(b.lower) << " " << format_real(b.upper) << "\n";
    } else if (method == "bisect") {
      if (!(lo > 0.0 && hi > lo)) throw UsageError("--method bisect needs --lo and --hi");
      double r = radius_bisect(oracle, c, j_flag, lo, hi, tol_bits);
      std::cout << format_real(r) << "\n";
    } else {
      throw UsageError("unknown radii method '" + method + "'");
    }
    summarize(o, oracle);
    return 0;
  }

  if (c_power->parsed()) {
    if (method == "newton") {
      Poly p = require_poly(o);
      if (p.at(0) == Complex(0.0)) throw DomainError("newton method needs p(0) != 0");
      std::vector<Complex> trailing;
      for (int i = 0; i <= h_flag + 1 && i <= p.degree(); ++i)
        trailing.push_back(p.at(i) / p.at(0));
      while (static_cast<int>(trailing.size()) < h_flag + 2) trailing.push_back(Complex(0.0));
      auto sums = newton_power_sums(trailing, h_flag);
      for (const auto& s : sums)
        std::cout << s.h << " " << format_complex(s.value) << "\n";
      return 0;
    }
    NewtonOracle oracle = make_oracle(o);
    Disc disc = disc_flag.empty() ? Disc(Complex(0.0), 1.0) : parse_disc_flag(disc_flag);
    CauchyParams params;
    params.theta = theta;
    params.rotation = rotation;
    params.eps0_bits = o.b0;
    params.q = q_flag > 0 ? q_flag
                          : choose_q(oracle.degree(), theta, h_flag, o.b0, disc.radius);
    PowerSumEstimate e = cauchy_sum_disc(oracle, disc, h_flag, params);
    std::cout << format_complex(e.value) << " "
              << (e.bound ? format_real(*e.bound) : std::string("-")) << " "
              << oracle.eval_count() << "\n";
    summarize(o, oracle);
    return 0;
  }

  if (c_dlg->parsed()) {
    Poly p = require_poly(o);
    SquaringState s = fg ? init_fg(p) : init_dlg(p);
    for (int i = 0; i < steps; ++i) s = fg ? fg_step(s, normalize) : dlg_step(s, normalize);
    print_poly(std::cout, s.p);
    if (fg) {
      std::cerr << "companion estimate: " << format_complex(gemignani_estimate(s)) << "\n";
    }
    return 0;
  }

  if (c_count->parsed()) {
    NewtonOracle oracle = make_oracle(o);
    Disc disc = parse_disc_flag(disc_flag);
    int q = q_flag > 0 ? q_flag : choose_q(oracle.degree(), 1.2, 0, 3, disc.radius);
    RootCount rc = root_count(oracle, disc, q, rotation);
    std::cout << rc.count << "\n";
    if (rc.low_confidence) std::cerr << "low confidence (raw " << rc.raw << ")\n";
    summarize(o, oracle);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
