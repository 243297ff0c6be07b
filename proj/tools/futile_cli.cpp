#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "futile/commands.hpp"
#include "futile/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDiscrepancy = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a finitely presented algebra has finitely many subalgebras."};
  app.require_subcommand(1);

  futile::CommandOptions options;
  std::uint64_t trials = 0;
  long long bound = 0;
  std::string format = "human";
  app.add_option("--seed", options.seed, "Seed for randomized steps")->capture_default_str();
  auto* trials_opt = app.add_option("--trials", trials, "Sampler trials (default: case setting, else 500)");
  auto* bound_opt = app.add_option("--bound", bound, "Largest coordinate box (default: case setting, else 6)")
                        ->check(CLI::PositiveNumber);
  app.add_option("--budget", options.budget, "Enumeration budget")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_flag("--timing", options.timing, "Record elapsed time in the report");

  std::string case_path;
  const char* commands[] = {"decide", "enumerate", "sample", "factor", "oracle-compare"};
  const char* help[] = {"Run the applicable decider", "List every subalgebra of a case over F_p",
                        "Sample generated subalgebras or subrings", "Factor the quotient_poly modulus",
                        "Run the decider and its oracle and compare"};
  for (int i = 0; i < 5; ++i) app.add_subcommand(commands[i], help[i])->add_option("case", case_path, "Case file")->required();

  std::string corpus;
  bool update = false;
  auto* batch = app.add_subcommand("batch", "Run oracle-compare over a corpus and check the golden reports");
  batch->add_option("corpus", corpus, "Corpus root directory")->required();
  batch->add_flag("--update", update, "Rewrite the .expected reports instead of comparing");

  CLI11_PARSE(app, argc, argv);
  if (*trials_opt) options.trials = trials;
  if (*bound_opt) options.bound = bound;

  try {
    if (batch->parsed()) {
      futile::BatchResult r = futile::run_batch(corpus, options, update);
      std::size_t ok = 0;
      for (const auto& e : r.entries) {
        if (e.status == "ok" || e.status == "updated") ++ok;
        std::cout << e.status << "  " << e.path << (e.detail.empty() ? "" : "  (" + e.detail + ")") << "\n";
      }
      std::cout << ok << "/" << r.entries.size() << " cases passed\n";
      if (r.failure) return kExitError;
      return r.discrepancy ? kExitDiscrepancy : kExitOk;
    }
    std::string cmd = app.get_subcommands().front()->get_name();
    futile::CaseDescription c = futile::load_case(case_path);
    futile::ReportDocument doc = futile::run_command(cmd, c, options);
    std::cout << (format == "machine" ? futile::serialize_report(doc) : futile::format_human(doc));
    if (doc.oracle && !doc.oracle->agreement) return kExitDiscrepancy;
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
