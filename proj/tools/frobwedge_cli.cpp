// frobwedge: batch verification of Frobenius-pushforward wedge destabilization.
//
//   frobwedge verify-local --p 5 --r 3
//   frobwedge slopes --p 5 --g 2 --n 1 --r 2 --d 3
//   frobwedge sweep --pmax 13 --nmax 4 --out grid.csv --format rows
//   frobwedge cohom-cert --p 3 --g 2 --n 2
//
// Exit codes: 0 success, 1 check failure, 2 argument error, 3 I/O error,
// 4 internal error.

#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "frobwedge/errors.hpp"
#include "frobwedge/report.hpp"

namespace fw = frobwedge;
namespace rp = frobwedge::report;

namespace {

struct OutputOptions {
  std::string format = "document";
  std::string out;
};

void add_output_flags(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"rows", "summary", "document"}));
  sub->add_option("--out", o.out, "Write the report here; a summary goes to stdout");
}

int emit(const rp::ReportDocument& doc, const OutputOptions& o) {
  const rp::Format format = rp::parse_format(o.format);
  if (o.out.empty()) {
    std::cout << doc.render(format);
  } else {
    rp::write_file(o.out, doc.render(format));
    std::cout << doc.render(rp::Format::summary);
  }
  return doc.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of wedge-square destabilization under Frobenius pushforward"};
  app.require_subcommand(1);

  std::function<rp::ReportDocument()> run;
  OutputOptions output;

  rp::VerifyLocalOptions local;
  auto* verify = app.add_subcommand("verify-local", "Local-model checks at one characteristic");
  verify->add_option("--p", local.p, "Characteristic (prime)")->required();
  verify->add_option("--r", local.rank, "Rank of E")->capture_default_str();
  verify->add_option("--trunc", local.trunc, "Truncation order in s")->capture_default_str();
  verify->add_option("--seed", local.seed, "Seed for random samples")->capture_default_str();
  verify->add_option("--max-p", local.max_p, "Largest accepted characteristic")
      ->capture_default_str();
  add_output_flags(verify, output);
  verify->callback([&] { run = [&] { return rp::cmd_verify_local(local); }; });

  rp::SlopesOptions slopes;
  auto* slope_cmd = app.add_subcommand("slopes", "Slope table and verdict for one bundle class");
  slope_cmd->add_option("--p", slopes.p, "Characteristic (prime)")->required();
  slope_cmd->add_option("--g", slopes.g, "Genus (>= 2)")->required();
  slope_cmd->add_option("--n", slopes.n, "Pushforward level (>= 1)")->required();
  slope_cmd->add_option("--r", slopes.rank, "Rank of E")->required();
  slope_cmd->add_option("--d", slopes.degree, "Degree of E")->required();
  add_output_flags(slope_cmd, output);
  slope_cmd->callback([&] { run = [&] { return rp::cmd_slopes(slopes); }; });

  fw::SweepBounds bounds;
  auto* sweep = app.add_subcommand("sweep", "Verdicts and conservation checks over a grid");
  sweep->add_option("--pmax", bounds.pmax, "Largest characteristic")->capture_default_str();
  sweep->add_option("--nmax", bounds.nmax, "Largest pushforward level")->capture_default_str();
  sweep->add_option("--rmax", bounds.rmax, "Largest rank")->capture_default_str();
  sweep->add_option("--gmax", bounds.gmax, "Largest genus (range starts at 2)")
      ->capture_default_str();
  sweep->add_option("--dmax", bounds.dmax, "Degrees range over [-dmax, dmax]")
      ->capture_default_str();
  add_output_flags(sweep, output);
  sweep->callback([&] { run = [&] { return rp::cmd_sweep(bounds); }; });

  rp::CohomOptions cohom;
  auto* cert = app.add_subcommand("cohom-cert", "Cohomological-stability counterexample degrees");
  cert->add_option("--p", cohom.p, "Characteristic (prime)")->required();
  cert->add_option("--g", cohom.g, "Genus (>= 2)")->required();
  cert->add_option("--n", cohom.n, "Pushforward level (>= 2)")->required();
  add_output_flags(cert, output);
  cert->callback([&] { run = [&] { return rp::cmd_cohom_cert(cohom); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rp::kExitArgumentError;
  }

  try {
    return emit(run(), output);
  } catch (const fw::PreconditionError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return rp::kExitArgumentError;
  } catch (const rp::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return rp::kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return rp::kExitInternalError;
  }
}
