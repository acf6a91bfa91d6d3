#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fundament/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fiber products of group epimorphisms, fundaments and their invariants"};
  app.set_version_flag("--version", "fundament 0.1.0");

  std::vector<std::string> files;
  fundament::cli::Options opts;
  std::uint64_t seed = 0;
  std::string command;
  std::vector<std::string> args;

  app.add_option("-f,--file", files, "Workspace file (repeatable)")->check(CLI::ExistingFile)->allow_extra_args(false);
  app.add_flag("--json", opts.json, "Emit a JSON document instead of text");
  app.add_option("--max-order", opts.max_order, "Largest group order to construct")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized commands");
  std::string names;
  for (const auto& n : fundament::cli::command_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("args", args, "Command arguments");
  app.positionals_at_end();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (seed_opt->count() > 0) opts.seed = seed;

  try {
    auto ws = fundament::cli::parse_workspace(files, opts.max_order);
    fundament::cli::run_command(ws, command, args, opts, std::cout);
  } catch (const fundament::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
