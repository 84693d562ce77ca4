// finstrain: batch driver for strain, deviator, invariant and stress tables.
//
// Exit codes: 0 ok, 1 property failure (check), 2 input error,
// 3 at least one row failed to compute.

#include "finstrain/batch.hpp"
#include "finstrain/check.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace finstrain;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kRowFailure = 3;

std::string read_all(const std::string &path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InvalidInput("cannot open output file '" + path + "'");
  out << text;
}

std::pair<double, double> parse_range(const std::string &text) {
  const auto colon = text.find(':', 1); // allow a leading minus sign
  if (colon == std::string::npos)
    throw InvalidInput("range must look like LO:HI, got '" + text + "'");
  auto num = [&](std::string_view s) {
    double x = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw InvalidInput("cannot parse range bound '" + std::string(s) + "'");
    return x;
  };
  const std::string_view all(text);
  return {num(all.substr(0, colon)), num(all.substr(colon + 1))};
}

struct TableArgs {
  std::string input;
  std::string output;
  std::optional<std::string> family;
  std::optional<std::string> frame;
  std::optional<std::string> variance;
  bool parallel = false;
  std::optional<int> digits;
};

int run_table(const TableArgs &args, batch::TableKind kind) {
  batch::BatchRequest request;
  try {
    request = batch::parse_request(read_all(args.input));
    batch::Overrides ov;
    ov.family = args.family;
    if (args.frame)
      ov.frame = parse_frame(*args.frame);
    if (args.variance)
      ov.variance = parse_variance(*args.variance);
    batch::apply_overrides(request, ov);
    if (kind == batch::TableKind::Stress && !request.energy)
      throw batch::RequestError(
          {"field 'energy': required by the stress command"});
  } catch (const batch::RequestError &e) {
    for (const auto &d : e.diagnostics())
      std::cerr << "error: " << d << "\n";
    return kInputError;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto rows = batch::run(request, kind, {args.parallel, 0});
  try {
    write_all(args.output,
              batch::write_csv(rows, kind, batch::NumberFormat{args.digits}));
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  bool failed = false;
  for (const auto &r : rows) {
    if (!r.error.empty()) {
      std::cerr << "row '" << r.id << "': " << r.error << "\n";
      failed = true;
    }
  }
  return failed ? kRowFailure : kOk;
}

void add_table_options(CLI::App *cmd, TableArgs &args) {
  cmd->add_option("--input", args.input, "request JSON (default: stdin)");
  cmd->add_option("--output", args.output, "CSV destination (default: stdout)");
  cmd->add_option("--family", args.family, "strain family NAME[:m]");
  cmd->add_option("--frame", args.frame, "eulerian | lagrangian");
  cmd->add_option("--variance", args.variance, "alpha | beta");
  cmd->add_flag("--parallel", args.parallel, "fan entries out over threads");
  cmd->add_option("--digits", args.digits,
                  "significant digits (default: shortest round trip)")
      ->check(CLI::Range(1, 17));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite-strain tensors, deviators, invariants and stress"};
  app.require_subcommand(1);

  TableArgs strain_args;
  auto *strain_cmd = app.add_subcommand(
      "strain", "strain, deviator and invariants per request entry");
  add_table_options(strain_cmd, strain_args);

  TableArgs stress_args;
  auto *stress_cmd = app.add_subcommand(
      "stress", "strain table plus Kirchhoff, Cauchy and transformed stress");
  add_table_options(stress_cmd, stress_args);

  std::string curve_family = "almansi";
  std::string curve_range = "-2:4.2";
  int curve_samples = 101;
  std::string curve_output;
  std::optional<int> curve_digits;
  auto *curve_cmd =
      app.add_subcommand("curve", "sample the scale function of a family");
  curve_cmd->add_option("--family", curve_family, "strain family NAME[:m]");
  curve_cmd->add_option("--range", curve_range, "LO:HI (default -2:4.2)");
  curve_cmd->add_option("--samples", curve_samples, "number of samples");
  curve_cmd->add_option("--output", curve_output, "CSV destination");
  curve_cmd->add_option("--digits", curve_digits, "significant digits")
      ->check(CLI::Range(1, 17));

  std::uint64_t seed = 42;
  int trials = 200;
  auto *check_cmd =
      app.add_subcommand("check", "run the randomized property suite");
  check_cmd->add_option("--seed", seed, "generator seed");
  check_cmd->add_option("--trials", trials, "instances per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*strain_cmd)
    return run_table(strain_args, batch::TableKind::Strain);
  if (*stress_cmd)
    return run_table(stress_args, batch::TableKind::Stress);

  if (*curve_cmd) {
    try {
      const auto [lo, hi] = parse_range(curve_range);
      const auto fam = StrainFamily::parse(curve_family);
      write_all(curve_output,
                batch::curve_csv(fam, lo, hi, curve_samples,
                                 batch::NumberFormat{curve_digits}));
    } catch (const Error &e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
    return kOk;
  }

  if (*check_cmd) {
    if (trials < 1) {
      std::cerr << "error: --trials must be at least 1\n";
      return kInputError;
    }
    const auto report = check::run_property_suite(seed, trials);
    std::cout << report.text();
    return report.passed() ? kOk : kPropertyFailure;
  }
  return kInputError;
}
