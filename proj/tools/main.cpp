#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "opdiff/problem_spec.hpp"
#include "opdiff/solver.hpp"
#include "opdiff/verify.hpp"

namespace {

using namespace opdiff;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

constexpr double kSolveTol = 1e-9;

int run_expand(int u, int v, int q, Constraint constraint) {
  const auto products = expand_braced(BracedSpec{u, v, q, constraint});
  if (products.empty()) {
    std::cout << "0\n";
    return kExitOk;
  }
  for (const auto& p : products) {
    std::cout << render_product(p) << "\n";
  }
  return kExitOk;
}

int run_count(int u, int v) {
  std::string line;
  const int r_max = std::min(u, v) + 1;
  for (int r = 1; r <= r_max; ++r) {
    line += "r=" + std::to_string(r) + ":" + std::to_string(count_by_length(u, v, r)) + " ";
  }
  line += "total:" + std::to_string(count_total(u, v));
  std::cout << line << "\n";
  return kExitOk;
}

int run_solve(const std::string& path, int n, const std::string& method) {
  const ProblemSpec spec = load_problem_spec(path);

  const auto emit = [](const nlohmann::json& j) { std::cout << j.dump() << "\n"; };

  if (spec.scalar == ProblemSpec::Scalar::Complex) {
    const CauchyProblem& p = *spec.numeric;
    if (method == "closed") {
      emit(to_json(solve_general(p, n)));
      return kExitOk;
    }
    if (method == "recurse") {
      emit(to_json(iterate_recurrence(p, n)));
      return kExitOk;
    }
    const StateVector closed = solve_general(p, n);
    const StateVector recursed = iterate_recurrence(p, n);
    const double abs_dev = distance(closed, recursed);
    const double rel_dev = abs_dev / (1.0 + max_abs(recursed));
    nlohmann::json out;
    out["closed"] = to_json(closed);
    out["recurse"] = to_json(recursed);
    out["max_abs_deviation"] = abs_dev;
    out["max_rel_deviation"] = rel_dev;
    emit(out);
    return rel_dev > kSolveTol ? kExitVerification : kExitOk;
  }

  const PolyCauchyProblem& p = *spec.lifted;
  if (method == "closed") {
    emit(to_json(solve_diffdiff(p.fam0, p.fam1, p.y0, p.y1, n)));
    return kExitOk;
  }
  if (method == "recurse") {
    emit(to_json(iterate_diffdiff(p.fam0, p.fam1, p.y0, p.y1, n)));
    return kExitOk;
  }
  const PolyVector closed = solve_diffdiff(p.fam0, p.fam1, p.y0, p.y1, n);
  const PolyVector recursed = iterate_diffdiff(p.fam0, p.fam1, p.y0, p.y1, n);
  const double abs_dev = coeff_distance(closed, recursed);
  const double rel_dev = abs_dev / (1.0 + max_coeff_abs(recursed));
  nlohmann::json out;
  out["closed"] = to_json(closed);
  out["recurse"] = to_json(recursed);
  out["max_abs_deviation"] = abs_dev;
  out["max_rel_deviation"] = rel_dev;
  emit(out);
  return rel_dev > kSolveTol ? kExitVerification : kExitOk;
}

int run_verify(const std::string& path, const VerifyOptions& options) {
  std::vector<CheckOutcome> outcomes = run_builtin_checks(options);
  if (!path.empty()) {
    const ProblemSpec spec = load_problem_spec(path);
    for (auto& o : run_problem_checks(spec, options)) {
      outcomes.push_back(std::move(o));
    }
  }
  std::size_t width = 0;
  for (const auto& o : outcomes) width = std::max(width, o.name.size());
  for (const auto& o : outcomes) {
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << o.name
              << std::string(width - o.name.size() + 2, ' ') << o.detail << "\n";
  }
  const bool ok = all_passed(outcomes);
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? kExitOk : kExitVerification;
}

int run_bench(int n_max, int dim, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss;
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  auto random_map = [&] {
    LinearMap m = LinearMap::zero(dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m.at(i, j) = s * Complex{gauss(engine), gauss(engine)};
    }
    return m;
  };
  StateVector seed_vec = StateVector::zero(dim);
  for (auto& c : seed_vec.components) c = Complex{gauss(engine), gauss(engine)};

  CauchyProblem p{OperatorFamily::constant(random_map()), OperatorFamily::constant(random_map()),
                  StateVector::zero(dim), seed_vec};

  auto time_ns = [](auto&& fn) {
    // Best of three runs.
    std::int64_t best = -1;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      fn();
      const auto stop = std::chrono::steady_clock::now();
      const auto ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      if (best < 0 || ns < best) best = ns;
    }
    return best;
  };

  std::cout << "n,terms,closed_ns,recurse_ns\n";
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t terms = 0;
    for (const auto& row : term_census(n)) terms += row.term_count;
    const auto closed_ns = time_ns([&] { solve_case_one(p, n); });
    const auto recurse_ns = time_ns([&] { iterate_recurrence(p, n); });
    std::cout << n << "," << terms << "," << closed_ns << "," << recurse_ns << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noniterative solutions of second-order linear difference equations with "
               "nonconstant, noncommuting operator coefficients"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // expand
  int eu = 0, ev = 0, eq = 1;
  bool ends_with_l0 = false, first_l0_zero = false, first_l0_positive = false;
  auto* expand = app.add_subcommand("expand", "Print the ordered products of {L0^(u) L1^(v)}_q");
  expand->add_option("--u", eu, "L0 exponent")->required();
  expand->add_option("--v", ev, "L1 exponent")->required();
  expand->add_option("--q", eq, "subscript (1 or 2)")->check(CLI::IsMember({1, 2}));
  auto* f1 = expand->add_flag("--ends-with-l0", ends_with_l0, "keep words ending in an L0 factor");
  auto* f2 = expand->add_flag("--first-l0-zero", first_l0_zero, "keep words starting with L1");
  auto* f3 =
      expand->add_flag("--first-l0-positive", first_l0_positive, "keep words starting with L0");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  expand->callback([&] {
    Constraint c = Constraint::None;
    if (ends_with_l0) c = Constraint::EndsWithL0;
    if (first_l0_zero) c = Constraint::FirstL0BlockZero;
    if (first_l0_positive) c = Constraint::FirstL0BlockPositive;
    exit_code = run_expand(eu, ev, eq, c);
  });

  // count
  int cu = 0, cv = 0;
  auto* count = app.add_subcommand("count", "Per-length and total term counts of a braced sum");
  count->add_option("--u", cu, "L0 exponent")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--v", cv, "L1 exponent")->required()->check(CLI::NonNegativeNumber);
  count->callback([&] { exit_code = run_count(cu, cv); });

  // solve
  std::string solve_path;
  int sn = 0;
  std::string method = "closed";
  auto* solve = app.add_subcommand("solve", "Compute Y_n for a JSON problem description");
  solve->add_option("spec", solve_path, "problem JSON file")->required();
  solve->add_option("--n", sn, "sequence index")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--method", method, "closed | recurse | both")
      ->check(CLI::IsMember({"closed", "recurse", "both"}));
  solve->callback([&] { exit_code = run_solve(solve_path, sn, method); });

  // verify
  std::string verify_path;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run the built-in correctness suites");
  verify->add_option("spec", verify_path, "optional problem JSON file to verify as well");
  verify->add_option("--n-max", vopts.n_max, "largest sequence index to check")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", vopts.trials, "random instances for the oracle suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->callback([&] { exit_code = run_verify(verify_path, vopts); });

  // bench
  int bn_max = 16, bdim = 4;
  std::uint64_t bseed = 42;
  auto* bench = app.add_subcommand("bench", "CSV timing of closed-form vs recursive evaluation");
  bench->add_option("--n-max", bn_max, "largest sequence index")->check(CLI::NonNegativeNumber);
  bench->add_option("--dim", bdim, "space dimension")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bseed, "random seed");
  bench->callback([&] { exit_code = run_bench(bn_max, bdim, bseed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
