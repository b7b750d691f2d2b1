#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using pencillab::cli::JobSpec;

  CLI::App app{"Exact computations for polynomial foliations defined by line arrangements"};
  app.require_subcommand(1);

  JobSpec job;
  std::string input;
  std::string output;
  int canonical_d = 0;
  int n = 0;
  int max_d = 0;
  std::string start;
  std::string partition;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input, "JSON input file");
    sub->add_option("--output,-o", output, "write the report here instead of standard output");
    sub->add_option("--canonical-d", canonical_d, "use the canonical arrangement of d+1 lines");
    sub->add_option("--max-d", max_d, "cap on d, overriding PENCILLAB_MAX_D");
    sub->add_flag("--verbose,-v", job.verbosity, "more diagnostics on standard error");
  };

  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"analyze", "counts, Milnor number and intersection form rank of an arrangement"},
      {"dynkin", "intersection form, radical and line cycles"},
      {"orbit", "monodromy orbit spans of vanishing cycles"},
      {"connection", "Gauss-Manin connection of a 1-form"},
      {"kernel", "kernel of powers of the connection"},
      {"relexact", "decide membership in dP + Q df"},
      {"melnikov", "order-by-order persistence test for a deformation"},
      {"bounds", "codimension and cyclicity bounds per partition"},
      {"selftest", "randomized internal consistency checks"},
      {"batch", "run a list of jobs on a worker pool"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    const std::string name = c.name;
    if (name == "orbit") sub->add_option("--start", start, "face:N or saddle:N; all basis cycles when omitted");
    if (name == "connection" || name == "kernel") sub->add_option("--n", n, "power of the connection");
    if (name == "bounds") sub->add_option("--partition", partition, "comma-separated parts summing to d+1");
    if (name == "selftest") sub->add_option("--seed", job.seed, "generator seed");
    if (name == "batch") sub->add_option("--jobs,-j", job.workers, "worker threads");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pencillab::cli::kInputError;
  }

  for (const auto* sub : app.get_subcommands()) job.command = sub->get_name();
  const CLI::App* sub = app.get_subcommand(job.command);
  if (sub->count("--input")) job.input_path = input;
  if (sub->count("--output")) job.output_path = output;
  if (sub->count("--canonical-d")) job.canonical_d = canonical_d;
  if (sub->count("--max-d")) job.max_d = max_d;
  if (job.command == "orbit" && sub->count("--start")) job.start = start;
  if ((job.command == "connection" || job.command == "kernel") && sub->count("--n")) job.n = n;
  if (job.command == "bounds" && sub->count("--partition")) job.partition = partition;

  return pencillab::cli::run(job, std::cout, std::cerr);
}
