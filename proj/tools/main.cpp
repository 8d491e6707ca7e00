#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using grpcohom::cli::JobSpec;
  JobSpec job;
  std::optional<int> degree;

  CLI::App app{"Exact group cohomology, cocycle transfer and long exact sequences for finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("-v,--verbose", job.verbose, "Progress notes on stderr");
    cmd->add_option("-o,--out", job.out, "Write the JSON result here instead of stdout");
  };

  auto* cohomology = app.add_subcommand("cohomology", "Invariant factors of H^n for a continuity class");
  cohomology->add_option("--group", job.group, "cyclic:N, klein, dihedral:N or a JSON file")->required();
  cohomology->add_option("--module", job.module, "Z, Z^r, Z/n, sums with +, or a JSON file")->required();
  cohomology->add_option("--class", job.cls, "all, quotient:a,b,... or a JSON file");
  cohomology->add_option("--degree", degree, "Single degree");
  cohomology->add_option("--degrees", job.degrees, "n (0..n), a-b or a,b,c");
  common(cohomology);

  auto* transfer = app.add_subcommand("transfer", "Transfer a locally continuous cocycle and write a certificate");
  transfer->add_option("--in", job.in, "Cocycle JSON file")->required()->check(CLI::ExistingFile);
  transfer->add_option("--class", job.cls, "all, quotient:a,b,... or a JSON file");
  transfer->add_option("--group", job.group, "Group, when the cocycle file does not embed one");
  transfer->add_option("--module", job.module, "Module, when the cocycle file does not embed one");
  common(transfer);

  auto* check = app.add_subcommand("check", "Run an identity suite");
  check->add_option("suite", job.suite, "differentials, homotopy, equivariantize, psi, snf, signs or all")->required();
  check->add_option("--seed", job.seed, "Seed for the randomized cases");
  check->add_option("--max-order", job.max_order, "Largest group order drawn")->check(CLI::PositiveNumber);
  check->add_option("--samples", job.samples, "Random cases per identity")->check(CLI::NonNegativeNumber);
  common(check);

  auto* les = app.add_subcommand("les", "Long exact sequence of a coefficient sequence, or a ladder of two");
  les->add_option("--in", job.in, "Short exact sequence JSON file")->required()->check(CLI::ExistingFile);
  les->add_option("--class", job.cls, "Class of the sequence (the fine class for a ladder)");
  les->add_option("--coarse-class", job.coarse_cls, "Compare against this coarser class");
  les->add_option("--group", job.group, "Group, when the file does not embed one");
  les->add_option("--degree", degree, "Highest degree n_max");
  les->add_option("--degrees", job.degrees, "Degrees; the largest is used as n_max (default 2)");
  common(les);

  auto* exactness = app.add_subcommand("exactness", "Column exactness of the double complex for a class");
  exactness->add_option("--group", job.group, "cyclic:N, klein, dihedral:N or a JSON file")->required();
  exactness->add_option("--module", job.module, "Z, Z^r, Z/n, sums with +, or a JSON file")->required();
  exactness->add_option("--class", job.cls, "all, quotient:a,b,... or a JSON file");
  exactness->add_option("--p", job.p, "Column index p")->check(CLI::NonNegativeNumber);
  exactness->add_option("--degree", degree, "Highest q");
  exactness->add_option("--degrees", job.degrees, "Degrees; the largest is used as q_max (default 2)");
  common(exactness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : grpcohom::cli::kValidation;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.degree = degree;
  return grpcohom::cli::run_job(job, std::cout, std::cerr);
}
