// lvint: exact first integrals, verification suites and simulations for the
// Lotka-Volterra lattices LV(n,k).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lvint/dynamics.hpp"
#include "lvint/integrals.hpp"
#include "lvint/jsonio.hpp"
#include "lvint/lax.hpp"
#include "lvint/rng.hpp"
#include "lvint/sigma.hpp"
#include "lvint/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw lvint::domain_error("cannot open output file " + out_path);
  out << text;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

struct IntegralsOptions {
  int n = 0, k = 0;
  std::string format = "text";
  std::string out;
};

int run_integrals(const IntegralsOptions& opt) {
  const lvint::SystemSpec spec(opt.n, opt.k);
  const lvint::IntegralFamily family = lvint::integral_family(spec);
  const std::vector<std::string> names = family.labels();

  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "integrals";
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["m"] = spec.m();
    j["r"] = spec.r();
    ordered_json polys = ordered_json::array();
    for (std::size_t i = 0; i < family.polynomial.size(); ++i) {
      ordered_json entry;
      entry["name"] = names[i];
      entry["terms"] = lvint::poly_to_json(family.polynomial[i]);
      polys.push_back(std::move(entry));
    }
    j["polynomial_integrals"] = std::move(polys);
    ordered_json rationals = ordered_json::array();
    for (std::size_t l = 0; l < family.rational.size(); ++l) {
      const lvint::RationalIntegral& h = family.rational[l];
      ordered_json entry;
      entry["name"] = names[family.polynomial.size() + l];
      entry["terms"] = lvint::poly_to_json(h.poly);
      entry["cofactor"] = lvint::poly_to_json(h.cofactor);
      entry["window"] = {h.window_lo, h.window_hi};
      rationals.push_back(std::move(entry));
    }
    j["rational_integrals"] = std::move(rationals);
    j["p"] = family.shifts.p;
    j["q"] = family.shifts.q;
    emit(json_text(j), opt.out);
  } else {
    std::ostringstream text;
    text << "LV(" << spec.n << "," << spec.k << "): m=" << spec.m() << " r=" << spec.r()
         << "\n";
    std::size_t index = 0;
    for (const auto& poly : family.polynomial)
      text << names[index++] << " = " << poly.to_string() << "\n";
    for (const auto& h : family.rational)
      text << names[index++] << " = " << h.poly.to_string() << "\n";
    if (!family.shifts.p.empty()) {
      text << "p =";
      for (long v : family.shifts.p) text << " " << v;
      text << "\n";
    }
    if (!family.shifts.q.empty()) {
      text << "q =";
      for (long v : family.shifts.q) text << " " << v;
      text << "\n";
    }
    emit(text.str(), opt.out);
  }
  return 0;
}

struct LaxOptions {
  int kappa = 1;
  int tail = 0;
  std::string format = "text";
  std::string out;
};

int run_lax(const LaxOptions& opt) {
  const std::vector<lvint::LaurentPolynomial> coefficients =
      lvint::characteristic_coefficients(opt.kappa, opt.tail);
  const int size = 2 * opt.kappa + 1;

  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "lax";
    j["kappa"] = opt.kappa;
    j["tail"] = opt.tail;
    j["matrix_size"] = size;
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      ordered_json entry;
      entry["name"] = "K" + std::to_string(i);
      entry["terms"] = lvint::poly_to_json(coefficients[i]);
      list.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(list);
    emit(json_text(j), opt.out);
  } else {
    std::ostringstream text;
    text << "Lax matrices of size " << size << " (kappa=" << opt.kappa << ", tail=" << opt.tail
         << ")\n";
    text << "det(X + lambda*M - mu*I) = lambda^" << size << " - mu^" << size;
    for (int i = 0; i <= opt.kappa; ++i) {
      const int power = opt.kappa - i;
      text << " + K" << i;
      if (power > 0) text << "*(lambda*mu)^" << power;
    }
    text << "\n";
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      text << "K" << i << " = " << coefficients[i].to_string() << "\n";
    emit(text.str(), opt.out);
  }
  return 0;
}

struct SigmaOptions {
  int k = 1;
  bool check = false;
  std::string format = "text";
  std::string out;
};

int run_sigma(const SigmaOptions& opt) {
  const lvint::SigmaTable table = lvint::sigma_table(opt.k);
  lvint::VerificationReport report;
  bool checked = false;
  if (opt.check && opt.k >= 2) {
    report = lvint::check_sigma_identities(opt.k);
    checked = true;
  }

  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "sigma";
    j["k"] = opt.k;
    j["table"] = table.values;
    if (checked) j["report"] = report.to_json();
    emit(json_text(j), opt.out);
  } else {
    std::ostringstream text;
    text << "sigma table, k=" << opt.k << "\n";
    for (const auto& row : table.values) {
      for (long v : row) text << std::setw(8) << v;
      text << "\n";
    }
    if (checked) text << report.to_text();
    emit(text.str(), opt.out);
  }
  return checked && !report.passed() ? kExitFailure : 0;
}

struct SimulateOptions {
  int n = 0, k = 0;
  double t_end = 20.0;
  double tol = 1e-12;
  std::string x0;
  std::uint64_t seed = lvint::kDefaultSeed;
  std::string out;
};

std::vector<double> parse_initial_state(const std::string& text, int n) {
  std::vector<double> state;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    state.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument("simulate: malformed --x0 entry " + item);
  }
  if (static_cast<int>(state.size()) != n)
    throw std::invalid_argument("simulate: --x0 must have exactly n entries");
  return state;
}

int run_simulate(const SimulateOptions& opt) {
  const lvint::SystemSpec spec(opt.n, opt.k);
  std::vector<double> x0;
  if (!opt.x0.empty()) {
    x0 = parse_initial_state(opt.x0, spec.n);
  } else {
    std::mt19937_64 gen(opt.seed);
    for (int i = 0; i < spec.n; ++i) x0.push_back(lvint::rng_uniform(gen, 0.5, 1.5));
  }
  const lvint::TrajectoryRecord record = lvint::integrate(spec, x0, opt.t_end, opt.tol);

  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "t";
  for (int i = 1; i <= spec.n; ++i) csv << ",x" << i;
  for (const std::string& name : record.integral_names) csv << "," << name;
  csv << "\n";
  for (std::size_t s = 0; s < record.times.size(); ++s) {
    csv << record.times[s];
    for (double v : record.states[s]) csv << "," << v;
    for (double d : record.drifts[s]) csv << "," << d;
    csv << "\n";
  }
  emit(csv.str(), opt.out);
  std::cerr << "simulate: " << record.accepted_steps << " accepted / "
            << record.rejected_steps << " rejected steps, max drift " << record.max_drift()
            << "\n";
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 7;
  std::uint64_t seed = lvint::kDefaultSeed;
  std::string format = "text";
  std::string out;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<lvint::SuiteKind> kinds;
  if (opt.suite == "involution") kinds = {lvint::SuiteKind::involution};
  else if (opt.suite == "independence") kinds = {lvint::SuiteKind::independence};
  else if (opt.suite == "rank") kinds = {lvint::SuiteKind::rank};
  else if (opt.suite == "structure") kinds = {lvint::SuiteKind::structure};
  else
    kinds = {lvint::SuiteKind::involution, lvint::SuiteKind::independence,
             lvint::SuiteKind::rank, lvint::SuiteKind::structure};

  const std::vector<lvint::VerificationReport> reports =
      lvint::run_suites(kinds, opt.max_n, opt.seed);
  bool all_passed = true;
  for (const auto& report : reports) all_passed = all_passed && report.passed();

  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "verify";
    j["suite"] = opt.suite;
    j["max_n"] = opt.max_n;
    j["seed"] = opt.seed;
    ordered_json list = ordered_json::array();
    for (const auto& report : reports) list.push_back(report.to_json());
    j["reports"] = std::move(list);
    j["all_passed"] = all_passed;
    emit(json_text(j), opt.out);
  } else {
    std::ostringstream text;
    std::size_t checks = 0;
    for (const auto& report : reports) {
      text << report.to_text();
      checks += report.checks.size();
    }
    text << (all_passed ? "ALL PASS" : "FAILURES PRESENT") << " (" << reports.size()
         << " suites, " << checks << " checks)\n";
    emit(text.str(), opt.out);
  }
  return all_passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integrals and verification for Lotka-Volterra lattices LV(n,k)"};
  app.require_subcommand(1);

  IntegralsOptions integrals_opt;
  CLI::App* integrals = app.add_subcommand("integrals", "Print the first-integral family");
  integrals->add_option("--n", integrals_opt.n, "dimension")->required();
  integrals->add_option("--k", integrals_opt.k, "structure index")->required();
  integrals->add_option("--format", integrals_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  integrals->add_option("--out", integrals_opt.out, "output file (default stdout)");

  LaxOptions lax_opt;
  CLI::App* lax = app.add_subcommand("lax", "Characteristic coefficients of the Lax matrix");
  lax->add_option("--kappa", lax_opt.kappa)->required()->check(CLI::PositiveNumber);
  lax->add_option("--tail", lax_opt.tail, "number of trailing variables set to zero")
      ->check(CLI::NonNegativeNumber);
  lax->add_option("--format", lax_opt.format)->check(CLI::IsMember({"text", "json"}));
  lax->add_option("--out", lax_opt.out);

  SigmaOptions sigma_opt;
  CLI::App* sigma = app.add_subcommand("sigma", "Print the sigma table");
  sigma->add_option("--k", sigma_opt.k)->required()->check(CLI::PositiveNumber);
  sigma->add_flag("--check", sigma_opt.check, "verify the table identities");
  sigma->add_option("--format", sigma_opt.format)->check(CLI::IsMember({"text", "json"}));
  sigma->add_option("--out", sigma_opt.out);

  SimulateOptions simulate_opt;
  CLI::App* simulate = app.add_subcommand("simulate", "Integrate the flow and record drifts");
  simulate->add_option("--n", simulate_opt.n)->required();
  simulate->add_option("--k", simulate_opt.k)->required();
  simulate->add_option("--t-end", simulate_opt.t_end)->check(CLI::PositiveNumber);
  simulate->add_option("--tol", simulate_opt.tol);
  simulate->add_option("--x0", simulate_opt.x0, "comma-separated initial state");
  simulate->add_option("--seed", simulate_opt.seed);
  simulate->add_option("--out", simulate_opt.out, "CSV output path (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", verify_opt.suite)
      ->check(CLI::IsMember({"involution", "independence", "rank", "structure", "all"}));
  verify->add_option("--max-n", verify_opt.max_n)->check(CLI::Range(3, 16));
  verify->add_option("--seed", verify_opt.seed);
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", verify_opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (integrals->parsed()) return run_integrals(integrals_opt);
    if (lax->parsed()) return run_lax(lax_opt);
    if (sigma->parsed()) return run_sigma(sigma_opt);
    if (simulate->parsed()) return run_simulate(simulate_opt);
    if (verify->parsed()) return run_verify(verify_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
