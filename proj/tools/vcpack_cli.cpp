// Command-line front end for the packing-bound library: closed-form bounds,
// exact combinatorial oracles, explicit constructions, and verification
// sweeps, with reproducible seeded output.
//
// Exit codes: 0 success/Verified; 1 usage error; 2 precondition violation;
// 3 budget exceeded; 4 theorem-backed invariant failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcpack/bounds.hpp"
#include "vcpack/constructions.hpp"
#include "vcpack/entropy.hpp"
#include "vcpack/errors.hpp"
#include "vcpack/experiments.hpp"
#include "vcpack/family.hpp"
#include "vcpack/interval.hpp"

namespace {

using json = nlohmann::json;

struct CliConfig {
  long precision_bits = 128;
  std::uint64_t seed = 0;
  std::string format = "plain";  // csv | json | plain
  long long budget = 100000000LL;
};

template <typename T>
std::string str_of(const T& v) {
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

vcpack::FunctionClass load_family(const std::string& path) {
  if (path == "-") return vcpack::read_family(std::cin);
  std::ifstream in(path);
  if (!in) throw vcpack::domain_error("cannot open family file: " + path);
  return vcpack::read_family(in);
}

std::vector<double> parse_grid(const std::string& spec) {
  // a:step:b, mirroring the figure scripts.
  double a, step, b;
  char c1, c2;
  std::istringstream ss(spec);
  if (!(ss >> a >> c1 >> step >> c2 >> b) || c1 != ':' || c2 != ':' ||
      step <= 0.0) {
    throw CLI::ValidationError("grid", "expected a:step:b with step > 0");
  }
  std::vector<double> grid;
  const long count = static_cast<long>((b - a) / step + 0.5);
  for (long i = 0; i <= count; ++i) grid.push_back(a + i * step);
  return grid;
}

vcpack::Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long num = std::stol(text.substr(0, slash));
    const long den = std::stol(text.substr(slash + 1));
    return vcpack::Rational(num, den);
  }
  return vcpack::Rational(std::stod(text));
}

void print_report(const vcpack::BoundReport& r, const CliConfig& cfg,
                  std::ostream& out) {
  const std::string value =
      r.exact_value ? r.exact_value->str() : str_of(r.value);
  if (cfg.format == "json") {
    json j{{"name", vcpack::to_string(r.name)},
           {"inputs", r.inputs},
           {"preconditions_met", r.preconditions_met},
           {"notes", r.notes}};
    if (r.preconditions_met) j["value"] = value;
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << vcpack::to_string(r.name) << ","
        << (r.preconditions_met ? value : "n/a") << ","
        << (r.preconditions_met ? "ok" : "precondition-failed") << ","
        << r.notes << "\n";
  } else {
    out << vcpack::to_string(r.name) << ": ";
    if (r.preconditions_met) {
      out << value;
      if (!r.notes.empty()) out << "  (" << r.notes << ")";
    } else {
      out << "n/a: " << r.notes;
    }
    out << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Packing/cardinality bounds for nearly orthogonal function "
               "classes: bounds, exact oracles, constructions, experiments"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env = std::getenv("VCPACK_PRECISION_BITS")) {
    cfg.precision_bits = std::atol(env);
  }
  app.add_option("--precision-bits", cfg.precision_bits,
                 "Interval arithmetic precision (bits)");
  app.add_option("--format", cfg.format, "Output format: plain|csv|json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--budget", cfg.budget,
                 "Elementary comparison cap for exhaustive enumerations");

  // --- bounds -------------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "Closed-form upper/lower bound table at (gamma, d)");
  double b_gamma = 0.0;
  long b_d = 1;
  std::optional<long> b_n;
  std::optional<long> b_k;
  cmd_bounds->add_option("--gamma", b_gamma, "Orthogonality accuracy gamma")
      ->required();
  cmd_bounds->add_option("--d", b_d, "Combinatorial dimension d")->required();
  cmd_bounds->add_option("--n", b_n, "Coordinate dimension n");
  cmd_bounds->add_option("--k", b_k, "Alphabet size for the k-ary bound");

  // --- beta / delta -------------------------------------------------------
  auto* cmd_beta =
      app.add_subcommand("beta", "Exponent rate beta(gamma) of the "
                                 "100*2^{d beta} upper bound");
  double beta_gamma = 0.0;
  cmd_beta->add_option("--gamma", beta_gamma)->required();

  auto* cmd_delta = app.add_subcommand(
      "delta", "Exponent control delta(gamma,k) of the k-ary upper bound");
  double delta_gamma = 0.0;
  long delta_k = 2;
  bool delta_theorem_domain = false;
  cmd_delta->add_option("--gamma", delta_gamma)->required();
  cmd_delta->add_option("--k", delta_k)->required();
  cmd_delta->add_flag("--theorem-domain", delta_theorem_domain,
                      "Search on [0, k/(k+1)] instead of [0, k/(k+1.6)]");

  // --- verify-lemmas ------------------------------------------------------
  auto* cmd_verify = app.add_subcommand(
      "verify-lemmas", "Rigorous sweep of the binomial-sum entropy bounds "
                       "(0.98 binary / 0.94 k-ary constants)");
  long v_nmax = 200;
  std::vector<long> v_kset;
  cmd_verify->add_option("--n-max", v_nmax, "Largest n to check");
  cmd_verify->add_option("--k", v_kset, "Alphabet sizes for the k-ary lemma");

  // --- family -------------------------------------------------------------
  auto* cmd_family = app.add_subcommand(
      "family", "Exact oracles on a family file ('-' for stdin)");
  cmd_family->require_subcommand(1);
  std::string fam_file = "-";
  std::string fam_eps = "1/2";
  auto* fam_stats = cmd_family->add_subcommand(
      "stats", "Size, gamma_orth, and combinatorial dimensions");
  fam_stats->add_option("file", fam_file);
  auto* fam_vcdim =
      cmd_family->add_subcommand("vcdim", "Exact VC dimension");
  fam_vcdim->add_option("file", fam_file);
  auto* fam_gamma = cmd_family->add_subcommand(
      "gamma", "Exact orthogonality accuracy gamma_orth");
  fam_gamma->add_option("file", fam_file);
  auto* fam_packing = cmd_family->add_subcommand(
      "packing", "Exact packing number M(eps) with witness");
  fam_packing->add_option("--eps", fam_eps, "Separation threshold (p/q or decimal)");
  fam_packing->add_option("file", fam_file);

  // --- construct ----------------------------------------------------------
  auto* cmd_construct =
      app.add_subcommand("construct", "Explicit family constructions");
  cmd_construct->require_subcommand(1);
  std::string construct_out = "-";
  auto* con_had = cmd_construct->add_subcommand(
      "hadamard", "Rows of the Sylvester matrix H_{2^n}");
  long had_n = 2;
  con_had->add_option("--n", had_n, "Order exponent")->required();
  con_had->add_option("--out", construct_out, "Output file ('-' = stdout)");
  auto* con_rand = cmd_construct->add_subcommand(
      "random", "Random Bernoulli near-orthogonal family");
  vcpack::RandomFamilySpec rspec;
  con_rand->add_option("--n", rspec.n, "Coordinate dimension")->required();
  con_rand->add_option("--gamma", rspec.gamma, "Target orthogonality")
      ->required();
  con_rand->add_option("--m", rspec.m_target,
                       "Target size (default floor(exp(n gamma^2/4)))");
  con_rand->add_option("--seed", rspec.seed, "Generator seed")->required();
  con_rand->add_option("--max-attempts", rspec.max_attempts);
  con_rand->add_option("--out", construct_out, "Output file ('-' = stdout)");

  // --- experiment ---------------------------------------------------------
  auto* cmd_exp = app.add_subcommand(
      "experiment", "Executable pieces of the projection proof");
  cmd_exp->require_subcommand(1);
  auto* exp_proj = cmd_exp->add_subcommand(
      "projection",
      "Collision probability P(A) of random size-r projections");
  int proj_r = 2;
  bool proj_exhaustive = false;
  long proj_trials = 100000;
  std::string exp_file = "-";
  exp_proj->add_option("--r", proj_r, "Projection size")->required();
  exp_proj->add_flag("--exhaustive", proj_exhaustive, "Exact enumeration");
  exp_proj->add_option("--trials", proj_trials, "Monte Carlo trials");
  exp_proj->add_option("--seed", cfg.seed, "Sampling seed");
  exp_proj->add_option("file", exp_file);
  auto* exp_key = cmd_exp->add_subcommand(
      "key-inequality",
      "1.02*2^{-rH(d/r)} < 1/|F| + ((1+gamma)/2)^r at interval precision");
  int key_r = 2;
  exp_key->add_option("--r", key_r, "Projection size")->required();
  exp_key->add_option("file", exp_file);

  // --- figures ------------------------------------------------------------
  auto* cmd_fig = app.add_subcommand(
      "figures", "CSV data for the bound-comparison and beta curves");
  int fig_which = 1;
  std::string fig_grid;
  cmd_fig->add_option("--which", fig_which, "1 = log|F|/d comparison, 2 = beta")
      ->check(CLI::IsMember({1, 2}));
  cmd_fig->add_option("--grid", fig_grid, "Gamma grid as a:step:b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::ostream& out = std::cout;
  out.precision(12);

  if (*cmd_bounds) {
    const double eps = vcpack::eps_from_gamma(b_gamma);
    if (cfg.format == "csv") out << "name,value,status,notes\n";
    {
      vcpack::BoundReport r;
      r.name = vcpack::BoundName::HausslerUpper;
      r.inputs = {{"eps", eps}, {"d", static_cast<double>(b_d)}};
      if (eps > 0.0 && b_d >= 1) {
        r.value = vcpack::haussler_upper(eps, b_d);
        r.preconditions_met = true;
      } else {
        r.notes = "need eps > 0 and d >= 1";
      }
      print_report(r, cfg, out);
    }
    print_report(vcpack::gkm_upper_report(b_gamma, b_d, b_n), cfg, out);
    if (b_n) {
      vcpack::BoundReport r;
      r.name = vcpack::BoundName::SauerUpper;
      r.inputs = {{"n", static_cast<double>(*b_n)},
                  {"d", static_cast<double>(b_d)}};
      if (b_d <= *b_n) {
        r.exact_value = vcpack::binom_sum(*b_n, b_d);
        r.preconditions_met = true;
      } else {
        r.notes = "need d <= n";
      }
      print_report(r, cfg, out);
      print_report(vcpack::roth_seroussi(*b_n, b_gamma), cfg, out);
      vcpack::BoundReport lower;
      lower.name = vcpack::BoundName::HausslerLower;
      lower.inputs = {{"eps", eps},
                      {"d", static_cast<double>(b_d)},
                      {"n", static_cast<double>(*b_n)}};
      if (eps > 0.0 && b_d >= 1 && b_d <= *b_n) {
        lower.value = vcpack::haussler_lower(eps, b_d, *b_n);
        lower.preconditions_met = true;
      } else {
        lower.notes = "need eps > 0 and 1 <= d <= n";
      }
      print_report(lower, cfg, out);
    }
    if (b_k && b_n) {
      print_report(vcpack::kary_upper(b_gamma, *b_k, b_d, *b_n), cfg, out);
      vcpack::BoundReport r;
      r.name = vcpack::BoundName::GeneralizedSauer;
      r.inputs = {{"n", static_cast<double>(*b_n)},
                  {"d", static_cast<double>(b_d)},
                  {"k", static_cast<double>(*b_k)}};
      if (b_d <= *b_n) {
        r.exact_value = vcpack::binom_sum_k(*b_n, b_d, *b_k);
        r.preconditions_met = true;
      } else {
        r.notes = "need d <= n";
      }
      print_report(r, cfg, out);
    }
    return 0;
  }

  if (*cmd_beta) {
    out << vcpack::beta(beta_gamma) << "\n";
    return 0;
  }

  if (*cmd_delta) {
    out << vcpack::delta(delta_gamma, delta_k,
                         delta_theorem_domain
                             ? vcpack::DeltaDomain::Theorem
                             : vcpack::DeltaDomain::Proof)
        << "\n";
    return 0;
  }

  if (*cmd_verify) {
    const auto report = vcpack::lemma_sweep(v_nmax, v_kset);
    if (cfg.format == "json") {
      out << json{{"total", report.total},
                  {"verified", report.verified},
                  {"counterexamples", report.counterexamples},
                  {"precision_insufficient", report.precision_insufficient},
                  {"tightest_ratio", report.tightest_ratio},
                  {"tightest_at",
                   {{"n", report.tight_n},
                    {"d", report.tight_d},
                    {"k", report.tight_k}}}}
                 .dump()
          << "\n";
    } else {
      out << "checks: " << report.total << "\n"
          << "verified: " << report.verified << "\n"
          << "counterexamples: " << report.counterexamples << "\n"
          << "precision_insufficient: " << report.precision_insufficient
          << "\n"
          << "tightest sum/bound ratio: " << report.tightest_ratio << " at n="
          << report.tight_n << " d=" << report.tight_d
          << (report.tight_k ? " k=" + std::to_string(report.tight_k)
                             : std::string(" (binary)"))
          << "\n";
    }
    if (report.counterexamples > 0) return 4;
    if (report.precision_insufficient > 0) return 3;
    return 0;
  }

  if (*cmd_family) {
    const auto fc = load_family(fam_file);
    if (*fam_vcdim) {
      out << fc.vc_dimension() << "\n";
    } else if (*fam_gamma) {
      const auto g = fc.k() == 2 ? fc.gamma_orth() : fc.gamma_orth_k();
      out << g << "\n";
    } else if (*fam_packing) {
      const auto result = vcpack::packing_number(fc, parse_rational(fam_eps));
      if (cfg.format == "json") {
        json j{{"eps", str_of(result.eps)},
               {"size", result.size},
               {"witness", result.witness},
               {"exact", result.exact}};
        out << j.dump() << "\n";
      } else {
        out << "size: " << result.size << "\n" << "witness:";
        for (int v : result.witness) out << " " << v;
        out << "\n";
      }
    } else {  // stats
      if (cfg.format == "json") {
        json j{{"k", fc.k()}, {"n", fc.n()}, {"m", fc.size()}};
        if (fc.k() == 2) {
          j["gamma_orth"] = str_of(fc.gamma_orth());
          j["vc_dimension"] = fc.vc_dimension();
        } else {
          j["gamma_orth_k"] = str_of(fc.gamma_orth_k());
        }
        j["natarajan_dim"] = fc.natarajan_dim();
        j["graph_dim"] = fc.graph_dim();
        j["pollard_dim"] = fc.pollard_dim();
        out << j.dump() << "\n";
      } else {
        out << "k: " << fc.k() << "\nn: " << fc.n() << "\nm: " << fc.size()
            << "\n";
        if (fc.k() == 2) {
          out << "gamma_orth: " << fc.gamma_orth() << "\n"
              << "vc_dimension: " << fc.vc_dimension() << "\n";
        } else {
          out << "gamma_orth_k: " << fc.gamma_orth_k() << "\n";
        }
        out << "natarajan_dim: " << fc.natarajan_dim() << "\n"
            << "graph_dim: " << fc.graph_dim() << "\n"
            << "pollard_dim: " << fc.pollard_dim() << "\n";
      }
    }
    return 0;
  }

  if (*cmd_construct) {
    std::ofstream file_out;
    std::ostream* sink = &std::cout;
    if (construct_out != "-") {
      file_out.open(construct_out);
      if (!file_out) {
        throw vcpack::domain_error("cannot open output: " + construct_out);
      }
      sink = &file_out;
    }
    if (*con_had) {
      vcpack::write_family(*sink, vcpack::sylvester_hadamard(had_n));
      return 0;
    }
    const auto result = vcpack::random_orthogonal_family(rspec);
    if (!result.success) {
      std::cerr << "construction failed after " << result.attempts
                << " attempts: " << result.note << "\n";
      return 2;
    }
    std::cerr << "accepted after " << result.attempts
              << " attempt(s); gamma_orth = " << result.gamma_measured
              << "; dvc "
              << (result.dvc_exact
                      ? "= " + std::to_string(*result.dvc_exact)
                      : "<= " + std::to_string(result.dvc_upper))
              << "\n";
    vcpack::write_family(*sink, *result.family);
    return 0;
  }

  if (*cmd_exp) {
    const auto fc = load_family(exp_file);
    if (*exp_proj) {
      const auto stats = vcpack::projection_collision(
          fc, proj_r,
          proj_exhaustive ? vcpack::CollisionMode::Exhaustive
                          : vcpack::CollisionMode::Sampled,
          cfg.seed, proj_trials, cfg.budget);
      if (stats.mode == vcpack::CollisionMode::Exhaustive) {
        out << "mode: exhaustive\n"
            << "p_collision: " << stats.p_collision << " = "
            << stats.p_collision.convert_to<double>() << "\n";
      } else {
        out << "mode: sampled (" << stats.trials << " trials)\n"
            << "estimate: " << stats.estimate << " +- " << stats.std_error
            << "\n";
      }
      out << "lower_envelope: " << stats.lower_envelope << " = "
          << stats.lower_envelope.convert_to<double>() << "\n"
          << "upper_envelope: " << stats.upper_envelope << " = "
          << stats.upper_envelope.convert_to<double>() << "\n"
          << "in_proof_range: " << (stats.in_proof_range ? "yes" : "no")
          << "\n";
      if (stats.mode == vcpack::CollisionMode::Exhaustive &&
          stats.in_proof_range &&
          !(stats.lower_envelope <= stats.p_collision &&
            stats.p_collision < stats.upper_envelope)) {
        std::cerr << "theorem contradiction: envelope violated\n";
        return 4;
      }
      return 0;
    }
    const auto report =
        vcpack::key_inequality_check(fc, key_r, cfg.precision_bits);
    if (!report.preconditions_met) {
      std::cerr << "precondition violation: " << report.note << "\n";
      return 2;
    }
    out << "lhs: " << report.lhs.str() << "\n"
        << "rhs: " << report.rhs.str() << "\n"
        << "margin: " << report.margin.str() << "\n"
        << "pass: " << (report.pass ? "yes" : "no") << "\n";
    if (!report.pass) {
      std::cerr << "theorem contradiction: key inequality failed\n";
      return 4;
    }
    return 0;
  }

  if (*cmd_fig) {
    std::vector<double> grid;
    if (!fig_grid.empty()) {
      grid = parse_grid(fig_grid);
    } else {
      grid = fig_which == 1 ? vcpack::default_figure1_grid()
                            : vcpack::default_figure2_grid();
    }
    out << (fig_which == 1 ? vcpack::figure1_data(grid)
                           : vcpack::figure2_data(grid));
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vcpack::theorem_contradiction& e) {
    std::cerr << "theorem contradiction: " << e.what() << "\n";
    return 4;
  } catch (const vcpack::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const vcpack::precondition_error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 2;
  } catch (const vcpack::divergence_error& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return 2;
  } catch (const vcpack::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
